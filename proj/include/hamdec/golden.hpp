#pragma once

// Reference data tables. Every constant the constructions and tests rely on
// lives here exactly once.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace hamdec::golden {

struct SelectorEntry {
  std::uint32_t mask;  // bit i set iff i is in Z
  int p;
};

// Value -1 stands for m-1.
struct CellSignature {
  std::uint32_t mask;
  int p;
  std::vector<std::pair<int, int>> forced;
  std::vector<std::pair<int, int>> forbidden;
};

struct Lambda1Row {
  std::uint32_t mask;
  std::array<int, 5> row;  // row[c] = Lambda1(U)(c)
};

// Color-0 selector of the five-dimensional schedule on feasible zero sets.
const std::array<SelectorEntry, 27>& d5_selector_table();
const std::vector<CellSignature>& d5_cell_signatures();
const std::array<Lambda1Row, 7>& d5_lambda1_rows();
// Orbit of the normalised return from the origin at m=3; (w0,w1,w2,w3).
const std::array<std::array<int, 4>, 81>& d5_cycle81();

const std::array<int, 128>& theta3();
const std::array<int, 128>& theta5();
// Offsets per layer; the entry for layer 1 is unused.
const std::vector<int>& alpha3();
const std::vector<int>& alpha5();

struct L4Row {
  int r, A2, x;
  std::array<int, 4> class_sizes;  // |F1|, |F2|, |E1|, |E2|
  std::array<std::array<int, 4>, 3> columns;
};
const std::array<L4Row, 10>& l4_table();

// d=5, m=9 instance with C=4, a=(1,1,1,1), eps=(1,0,0,0), c=(1,1,2).
const std::array<std::array<int, 3>, 4>& d5m9_sigma();
const std::array<std::array<int, 5>, 5>& d5m9_matrix();

}  // namespace hamdec::golden
