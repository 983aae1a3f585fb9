#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hamdec/core.hpp"

namespace hamdec {

// Code 0 is the zero label, code 1 is Delta, code a >= 2 is the numeric label a.
// The code doubles as the column index of a count matrix.
struct Label {
  std::uint8_t code = 0;

  static constexpr Label zero() { return {0}; }
  static constexpr Label delta() { return {1}; }
  static Label numeric(int a);

  bool is_zero() const { return code == 0; }
  bool is_delta() const { return code == 1; }
  bool is_numeric() const { return code >= 2; }
  int rank() const { return code; }

  bool operator==(const Label&) const = default;
};

std::string label_name(Label l);
// Labels 0, Delta, 2, ..., d-1 in canonical order.
std::vector<Label> label_set(int d);
// Valid iff code < d.
bool label_valid(Label l, int d);

// 1-based position of the first z_j == c, else z.size().
int rho(std::span<const Residue> z, Residue c);

// Stop rank used by the label given rho_c(z).
inline int stop_rank_for(Label l, int rho_value) {
  if (l.code == 0) return 0;
  if (l.code == 1) return rho_value;
  return rho_value < l.code ? l.code : l.code - 1;
}

struct LabelStep {
  Vec z;
  int stop = 0;
};

LabelStep apply_label(std::span<const Residue> z, Residue c, Label l, Residue m);
// In place; returns the stop rank.
int apply_label_inplace(Residue* z, int n, Residue c, Label l, Residue m);
Vec invert_label(std::span<const Residue> y, Residue c, Label l, Residue m);

struct LabelCounts {
  std::int64_t n0 = 0;
  std::int64_t nDelta = 0;
  std::vector<std::int64_t> numeric;  // labels 2 .. d-1

  std::int64_t total() const;
  static LabelCounts from_row(std::span<const std::int64_t> row);
};

struct CountCheck {
  bool ok = false;
  std::string reason;
};

CountCheck check_prefix_counts(const LabelCounts& counts, Residue m, std::int64_t length);

struct LabelOccurrence {
  Residue threshold = 0;
  Label label;
};

// Right-to-left composition (seq[0] applied first) as a table over prefix indices.
std::vector<std::uint32_t> compose_labels(std::span<const LabelOccurrence> seq, int d, Residue m,
                                          std::uint64_t budget = default_budget());

// Brute-force coordinate r+1 displacement of one label occurrence, summed over Q_r.
Residue drift_sum(int r, Residue m, Label l, Residue threshold, std::uint64_t budget = default_budget());

// Drift table value, reduced mod m.
Residue drift_table(int r, Residue m, Label l);

}  // namespace hamdec
