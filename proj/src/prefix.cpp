#include "hamdec/prefix.hpp"

#include <algorithm>

namespace hamdec {

Label Label::numeric(int a) {
  if (a < 2 || a > 255) fail(ErrorKind::InvalidInput, "numeric label must be >= 2, got " + std::to_string(a));
  return {static_cast<std::uint8_t>(a)};
}

std::string label_name(Label l) {
  if (l.code == 0) return "0";
  if (l.code == 1) return "D";
  return std::to_string(l.code);
}

std::vector<Label> label_set(int d) {
  std::vector<Label> out;
  for (int c = 0; c < d; ++c) out.push_back({static_cast<std::uint8_t>(c)});
  return out;
}

bool label_valid(Label l, int d) { return l.code < d; }

int rho(std::span<const Residue> z, Residue c) {
  for (std::size_t j = 0; j < z.size(); ++j)
    if (z[j] == c) return static_cast<int>(j + 1);
  return static_cast<int>(z.size());
}

int apply_label_inplace(Residue* z, int n, Residue c, Label l, Residue m) {
  if (!label_valid(l, n + 1)) fail(ErrorKind::InvalidInput, "label " + label_name(l) + " outside S_" + std::to_string(n + 1));
  int stop = stop_rank_for(l, rho({z, static_cast<std::size_t>(n)}, c));
  for (int j = 0; j < stop; ++j) z[j] = sub_mod(z[j], 1, m);
  return stop;
}

LabelStep apply_label(std::span<const Residue> z, Residue c, Label l, Residue m) {
  LabelStep out{Vec(z.begin(), z.end()), 0};
  out.stop = apply_label_inplace(out.z.data(), static_cast<int>(out.z.size()), c, l, m);
  return out;
}

Vec invert_label(std::span<const Residue> y, Residue c, Label l, Residue m) {
  const int n = static_cast<int>(y.size());
  if (!label_valid(l, n + 1)) fail(ErrorKind::InvalidInput, "label " + label_name(l) + " outside label set");
  Vec z(y.begin(), y.end());
  const Residue cm1 = sub_mod(c, 1, m);
  int add = 0;
  if (l.is_delta()) {
    add = n;
    for (int j = 0; j < n; ++j)
      if (y[j] == cm1) {
        add = j + 1;
        break;
      }
  } else if (l.is_numeric()) {
    const int a = l.code;
    add = a - 1;
    for (int j = 0; j < a - 1; ++j)
      if (y[j] == cm1) {
        add = a;
        break;
      }
  }
  for (int j = 0; j < add; ++j) z[j] = add_mod(z[j], 1, m);
  return z;
}

std::int64_t LabelCounts::total() const {
  std::int64_t t = n0 + nDelta;
  for (auto v : numeric) t += v;
  return t;
}

LabelCounts LabelCounts::from_row(std::span<const std::int64_t> row) {
  LabelCounts c;
  if (row.size() >= 1) c.n0 = row[0];
  if (row.size() >= 2) c.nDelta = row[1];
  for (std::size_t k = 2; k < row.size(); ++k) c.numeric.push_back(row[k]);
  return c;
}

CountCheck check_prefix_counts(const LabelCounts& counts, Residue m, std::int64_t length) {
  if (counts.total() != length)
    return {false, "label counts total " + std::to_string(counts.total()) + " differs from length " + std::to_string(length)};
  if (length % static_cast<std::int64_t>(m) != 0)
    return {false, "length " + std::to_string(length) + " is not divisible by m"};
  if (!is_unit(counts.n0, m)) return {false, "gcd(N_0, m) = " + std::to_string(gcd64(counts.n0, m))};
  for (std::size_t k = 0; k < counts.numeric.size(); ++k) {
    std::int64_t diff = counts.numeric[k] - counts.nDelta;
    if (!is_unit(diff, m))
      return {false, "gcd(N_" + std::to_string(k + 2) + " - N_D, m) = " + std::to_string(gcd64(diff, m))};
  }
  return {true, ""};
}

std::vector<std::uint32_t> compose_labels(std::span<const LabelOccurrence> seq, int d, Residue m,
                                          std::uint64_t budget) {
  if (seq.empty()) fail(ErrorKind::InvalidInput, "empty label sequence");
  const int n = d - 1;
  const Index states = checked_pow(m, n);
  if (sat_mul(states, seq.size()) > budget || states > UINT32_MAX)
    fail(ErrorKind::ResourceLimit, "prefix state space too large for composition");
  std::vector<std::uint32_t> perm(states);
  Vec z(static_cast<std::size_t>(n));
  for (Index s = 0; s < states; ++s) {
    vertex_from_index(s, m, z);
    for (const auto& occ : seq) apply_label_inplace(z.data(), n, occ.threshold, occ.label, m);
    perm[s] = static_cast<std::uint32_t>(vertex_index(z, m));
  }
  return perm;
}

Residue drift_sum(int r, Residue m, Label l, Residue threshold, std::uint64_t budget) {
  if (r < 1) fail(ErrorKind::InvalidInput, "drift level must be >= 1");
  const Index states = checked_pow(m, r);
  if (states > budget) fail(ErrorKind::ResourceLimit, "Q_r too large for drift enumeration");
  // A prefix long enough to host the label; coordinates past r are never equal
  // to the threshold so that rho falls beyond r whenever u misses it.
  const int n = std::max(r + 1, static_cast<int>(l.code));
  Vec z(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (Index s = 0; s < states; ++s) {
    vertex_from_index(s, m, std::span<Residue>(z.data(), static_cast<std::size_t>(r)));
    for (int j = r; j < n; ++j) z[j] = add_mod(threshold, 1, m);
    int stop = apply_label_inplace(z.data(), n, threshold, l, m);
    if (stop >= r + 1) total -= 1;
  }
  return reduce(total, m);
}

Residue drift_table(int r, Residue m, Label l) {
  std::int64_t mr = static_cast<std::int64_t>(checked_pow(m, r));
  std::int64_t m1r = static_cast<std::int64_t>(checked_pow(m - 1, r));
  if (l.is_delta()) return reduce(-m1r, m);
  if (l.is_numeric() && l.code == r + 1) return reduce(-(mr - m1r), m);
  if (l.is_numeric() && l.code > r + 1) return reduce(-mr, m);
  return 0;
}

}  // namespace hamdec
