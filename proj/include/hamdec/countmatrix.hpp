#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamdec/core.hpp"
#include "hamdec/rootflat.hpp"

namespace hamdec {

// Rows are colors, columns are label codes 0, Delta, 2, ..., d-1.
struct CountMatrix {
  int d = 0;
  Residue m = 0;
  std::vector<std::vector<std::int64_t>> n;

  std::int64_t at(int row, int col) const { return n[row][col]; }
};

enum class Condition { C1, C2, C3, C4 };

struct Violation {
  Condition condition;
  int row = -1;  // -1 when the violation is a column sum
  int col = -1;  // -1 when the violation is a row sum
  std::string detail;
};

struct AdmissibleReport {
  bool ok = false;
  std::vector<Violation> violations;
};

AdmissibleReport check_admissible(const CountMatrix& N);

// (H1) nonnegativity, (H2) row sums, (H3) column sums, (H4) column-zero
// units, (H5) difference-column units; each evaluated on its own.
struct Checklist {
  bool h1 = false, h2 = false, h3 = false, h4 = false, h5 = false;
  bool all() const { return h1 && h2 && h3 && h4 && h5; }
};
Checklist high_modulus_checklist(const CountMatrix& N);

// Parametric seven-dimensional witnesses, m odd >= 7.
CountMatrix d7_matrix(Residue m);

struct DegreeSequencePair {
  std::vector<int> rows;
  std::vector<int> cols;
};

bool gale_ryser_check(const DegreeSequencePair& pair);
// Columns in index order; each column's ones go to the rows with the largest
// residual degree, ties to the lower row index.
std::vector<std::vector<std::uint8_t>> gale_ryser_realize(const DegreeSequencePair& pair);

struct SignedCore {
  int L = 0, p = 0, r = 0;
  std::vector<int> a, eps, c;
  std::vector<std::vector<int>> sigma;  // L x p
};

// Row sums r - a_i - L eps_i, column sums -c_k, entries in {-2,-1,1,2}.
struct SignedCoreCheck {
  bool entries = false, row_sums = false, col_sums = false;
  bool ok() const { return entries && row_sums && col_sums; }
};
SignedCoreCheck check_signed_core(const SignedCore& core);

// Requires L even >= 4, r odd in [1, L), a and c over {1, 2} with equal sums,
// eps over {0, 1} summing to r. C is sum(a) and is not required to be a power of two.
SignedCore signed_core_qge2(int L, int r, const std::vector<int>& a, const std::vector<int>& eps,
                            const std::vector<int>& c);
SignedCore signed_core_q1(int L, int r);

// max over columns summing to -c of the largest j-subset sum; closed form.
int signed_column_supply(int L, int c, int j);

struct HighModulusChoices {
  int C = 0;
  std::vector<int> a, eps, c;
};
// C = least power of two >= L; a_i = 2 on the first C-L rows; eps_i = 1 on the
// first r rows; c_k = 2 on the last C-p columns.
HighModulusChoices default_choices(int d, Residue m);

CountMatrix high_modulus_matrix(int d, Residue m);
CountMatrix high_modulus_matrix(int d, Residue m, const HighModulusChoices& choices);
CountMatrix assemble_qge2(int d, Residue m, const SignedCore& core, int C);
CountMatrix assemble_q1(int d, Residue m, const SignedCore& core);

// m perfect matchings of the color-label multigraph; matching t becomes layer t.
Schedule schedule_from_matrix(const CountMatrix& N);

}  // namespace hamdec
