#include "hamdec/smalldims.hpp"

#include <algorithm>
#include <bit>

#include "hamdec/golden.hpp"

namespace hamdec {

namespace {

class D2Oracle final : public Oracle {
 public:
  explicit D2Oracle(Residue m) : m_(m) {}
  void directions_at(const Residue* x, Direction* out) const override {
    out[0] = d2_direction(x[0], x[1], 0, m_);
    out[1] = static_cast<Direction>(1 - out[0]);
  }
  Direction direction(const Residue* x, int color) const override { return d2_direction(x[0], x[1], color, m_); }
  int dimension() const override { return 2; }

 private:
  Residue m_;
};

// Rows: (S=0,K=0), (S=0,K!=0), (S=1,K=0), (S=1,K!=0), otherwise.
constexpr std::array<std::array<Direction, 3>, 5> kD3Rows = {{
    {0, 2, 1},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
    {0, 1, 2},
}};

inline const std::array<Direction, 3>& d3_row(Residue s, Residue k) {
  if (s == 0) return kD3Rows[k == 0 ? 0 : 1];
  if (s == 1) return kD3Rows[k == 0 ? 2 : 3];
  return kD3Rows[4];
}

class D3Oracle final : public Oracle {
 public:
  explicit D3Oracle(Residue m) : m_(m) {}
  void directions_at(const Residue* x, Direction* out) const override {
    const auto& row = d3_row(add_mod(add_mod(x[0], x[1], m_), x[2], m_), x[2]);
    std::copy(row.begin(), row.end(), out);
  }
  int dimension() const override { return 3; }

 private:
  Residue m_;
};

}  // namespace

Decomposition construct_d2(Residue m) {
  Params p{2, m};
  validate_params(p);
  Decomposition dec;
  dec.params = p;
  dec.oracle = std::make_shared<D2Oracle>(m);
  dec.recipe.kind = "d2-phase";
  dec.recipe.params = p;
  return dec;
}

std::array<Direction, 3> d3_directions(std::span<const Residue> x, Residue m) {
  check_vertex(x, {3, m});
  return d3_row(add_mod(add_mod(x[0], x[1], m), x[2], m), x[2]);
}

Direction d3_direction(std::span<const Residue> x, int color, Residue m) { return d3_directions(x, m)[color]; }

Pair d3_return(int color, Residue i, Residue k, Residue m) {
  switch (color) {
    case 0: return {sub_mod(i, k == 0 ? 1 : 2, m), add_mod(k, 1, m)};
    case 1: return {add_mod(i, k == m - 1 ? 1 : 0, m), add_mod(k, 1, m)};
    case 2: return {add_mod(i, k == 0 ? 0 : 2, m), sub_mod(k, 2, m)};
    default: fail(ErrorKind::InvalidInput, "color out of range for d=3");
  }
}

Pair d3_simulated_return(int color, Residue i, Residue k, Residue m) {
  Vec x = {i, neg_mod(add_mod(i, k, m), m), k};
  for (Residue step = 0; step < m; ++step) {
    const Direction dir = d3_row(add_mod(add_mod(x[0], x[1], m), x[2], m), x[2])[color];
    x[dir] = add_mod(x[dir], 1, m);
  }
  return {x[0], x[2]};
}

Pair d3_odometer(Pair ab, Residue m) {
  return {add_mod(ab.first, 1, m), add_mod(ab.second, ab.first == 0 ? 1 : 0, m)};
}

Pair d3_conjugacy(int color, Pair ik, Residue m) {
  const auto [i, k] = ik;
  switch (color) {
    case 0: return {k, add_mod(i, add_mod(k, k, m), m)};
    case 1: return {add_mod(k, 1, m), i};
    case 2: {
      const Residue lambda = neg_mod(inverse_mod(2 % m, m), m);
      return {mul_mod(lambda, k, m), mul_mod(lambda, add_mod(i, k, m), m)};
    }
    default: fail(ErrorKind::InvalidInput, "color out of range for d=3");
  }
}

Decomposition construct_d3(Residue m) {
  Params p{3, m};
  require_odd_modulus(p, "the three-dimensional table");
  Decomposition dec;
  dec.params = p;
  dec.oracle = std::make_shared<D3Oracle>(m);
  dec.recipe.kind = "d3-table";
  dec.recipe.params = p;
  return dec;
}

Schedule d3_schedule(Residue m) {
  Params p{3, m};
  require_odd_modulus(p, "the three-dimensional table");
  Schedule s{p, {}};
  const Index n = root_state_count(p);
  Residue w[3];
  for (Residue t = 0; t < m; ++t) {
    if (t >= 2) {
      s.layers.push_back(TranslationRule{{0, 1, 2}});
      continue;
    }
    TableRule tb;
    tb.dir.resize(n * 3);
    for (Index idx = 0; idx < n; ++idx) {
      root_state_from_index(idx, p, w);
      const auto& row = d3_row(t, add_mod(w[2], t, m));
      for (int c = 0; c < 3; ++c) tb.dir[idx * 3 + c] = static_cast<std::int8_t>(row[c]);
    }
    s.layers.push_back(std::move(tb));
  }
  return s;
}

std::array<int, 5> d5_lambda1(std::uint32_t u_mask) {
  if (u_mask >= 32) fail(ErrorKind::InvalidInput, "zero-set mask outside Z_5");
  const auto& reps = golden::d5_lambda1_rows();
  for (int k = 0; k < 5; ++k) {
    const std::uint32_t v = shift_mask(u_mask, k, 5);
    auto it = std::find_if(reps.begin(), reps.end(), [&](const auto& r) { return r.mask == v; });
    if (it == reps.end()) continue;
    // Lambda1(V + k)(a + k) = Lambda1(V)(a) + k
    std::array<int, 5> row{};
    for (int a = 0; a < 5; ++a) row[a] = (it->row[(a - k + 5) % 5] + k) % 5;
    return row;
  }
  fail(ErrorKind::InvalidInput, "zero set has no representative (size 4)");
}

int d5_selector(std::uint32_t z_mask) {
  if (z_mask >= 32 || std::popcount(z_mask) == 4) fail(ErrorKind::InvalidInput, "infeasible zero set");
  return d5_lambda1(shift_mask(z_mask, 1, 5))[0];
}

int d5_selector_from_table(std::uint32_t z_mask) {
  for (const auto& e : golden::d5_selector_table())
    if (e.mask == z_mask) return e.p;
  fail(ErrorKind::InvalidInput, "infeasible zero set");
}

std::vector<std::int8_t> d5_selector_masks() {
  std::vector<std::int8_t> sel(32, -1);
  for (std::uint32_t z = 0; z < 32; ++z)
    if (std::popcount(z) != 4) sel[z] = static_cast<std::int8_t>(d5_selector(z));
  return sel;
}

Schedule d5_schedule(Residue m) {
  Params p{5, m};
  require_odd_modulus(p, "the five-dimensional schedule");
  auto shifted = [](int k) {
    TranslationRule r;
    for (int c = 0; c < 5; ++c) r.dir_of_color.push_back(static_cast<Direction>((c + k) % 5));
    return r;
  };
  ZeroSetSelectorRule sel{d5_selector_masks(), true, {}};
  Schedule s{p, {}};
  if (m == 3) {
    s.layers = {shifted(4), sel, shifted(3)};
  } else {
    s.layers = {shifted(0), sel, shifted(3), shifted(4)};
    for (Residue t = 4; t < m; ++t) s.layers.push_back(shifted(0));
  }
  return s;
}

Decomposition construct_d5(Residue m) {
  Recipe r;
  r.kind = "d5-schedule";
  r.detail["variant"] = m == 3 ? "sch3" : "sch5";
  return expand(d5_schedule(m), r);
}

bool d5_exact_cover_check(Residue m, const std::vector<std::int8_t>& selector, std::uint64_t budget) {
  Params p{5, m};
  require_odd_modulus(p, "the exact-cover check");
  if (selector.size() != 32) fail(ErrorKind::InvalidInput, "selector must cover 32 masks");
  const Index n = root_state_count(p);
  if (sat_mul(n, 5) > budget) fail(ErrorKind::ResourceLimit, "exact-cover enumeration exceeds budget");
  Residue y[5], v[5];
  for (Index idx = 0; idx < n; ++idx) {
    root_state_from_index(idx, p, y);
    int hits = 0;
    for (int i = 0; i < 5; ++i) {
      std::copy(y, y + 5, v);
      if (i != 4) {
        v[i] = sub_mod(v[i], 1, m);
        v[4] = add_mod(v[4], 1, m);
      }
      if (selector[zero_mask(v, 5)] == i) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

bool d5_exact_cover_check(Residue m) { return d5_exact_cover_check(m, d5_selector_masks()); }

W5 d5_normalized_return(const W5& w, Residue m) {
  const int p = d5_selector(zero_mask(w.data(), 5));
  W5 out = {sub_mod(w[0], 3 % m, m), w[1], w[2], add_mod(w[3], 1, m), add_mod(w[4], 1, m)};
  out[p] = add_mod(out[p], 1, m);
  return out;
}

bool d5_in_section(const W5& w, Residue m) {
  (void)m;
  return w[0] == 0 && w[3] == 0 && w[4] != 0;
}

FirstReturn d5_first_return(Residue a, Residue b, Residue m) {
  require_odd_modulus({5, m}, "the first-return table");
  if (m < 5) fail(ErrorKind::UnsupportedParameters, "first-return table needs m >= 5");
  if (a >= m || b >= m) fail(ErrorKind::InvalidInput, "section coordinates out of range");
  const Residue s = add_mod(a, b, m);
  if (s == 0) fail(ErrorKind::InvalidInput, "w(a,b) with a+b = 0 is not a section point");
  const Residue h = (m - 1) / 2;
  FirstReturn fr;
  if (b <= m - 2) {
    fr.b = b + 1;
    fr.a = s == h ? a : add_mod(a, h, m);
    if (s < h) fr.length = static_cast<Index>(h + 1) * m;
    else if (s == h) fr.length = 2 * static_cast<Index>(h + 1) * m;
    else fr.length = static_cast<Index>(3 * h + 2) * m;
  } else if (a == 0) {
    fr.a = 1;
    fr.b = 0;
    fr.length = static_cast<Index>(m) * m * m - static_cast<Index>(m - 1) * (m - 2);
  } else {
    fr.a = a;
    fr.b = 0;
    fr.length = m - 1;
  }
  return fr;
}

FirstReturn d5_simulated_first_return(Residue a, Residue b, Residue m) {
  require_odd_modulus({5, m}, "the first-return simulation");
  W5 w = d5_section_point(a, b, m);
  if (!d5_in_section(w, m)) fail(ErrorKind::InvalidInput, "w(a,b) with a+b = 0 is not a section point");
  const Index cap = checked_pow(m, 4);
  for (Index steps = 1; steps <= cap; ++steps) {
    w = d5_normalized_return(w, m);
    if (d5_in_section(w, m)) return {w[1], w[2], steps};
  }
  fail(ErrorKind::InternalError, "no return to the section within m^4 steps");
}

Pair d5_theta(Residue x, Residue z, Residue m) {
  if (z == m - 1) return {sub_mod(x, 1, m), 0};
  if (x == 0 && z == 0) return {m - 1, 0};
  return {sub_mod(x, 2, m), add_mod(z, 1, m)};
}

}  // namespace hamdec
