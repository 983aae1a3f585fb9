#include "hamdec/countmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "hamdec/golden.hpp"
#include "hamdec/matching.hpp"

namespace hamdec {

namespace {

void check_shape(const CountMatrix& N) {
  if (N.d < 2 || N.m < 2 || static_cast<int>(N.n.size()) != N.d)
    fail(ErrorKind::InvalidInput, "count matrix must have d rows");
  for (const auto& row : N.n)
    if (static_cast<int>(row.size()) != N.d) fail(ErrorKind::InvalidInput, "count matrix must have d columns");
}

std::int64_t row_sum(const CountMatrix& N, int i) {
  return std::accumulate(N.n[i].begin(), N.n[i].end(), std::int64_t{0});
}

std::int64_t col_sum(const CountMatrix& N, int k) {
  std::int64_t s = 0;
  for (int i = 0; i < N.d; ++i) s += N.n[i][k];
  return s;
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

AdmissibleReport check_admissible(const CountMatrix& N) {
  check_shape(N);
  AdmissibleReport rep;
  const auto m = static_cast<std::int64_t>(N.m);
  for (int i = 0; i < N.d; ++i)
    for (int k = 0; k < N.d; ++k)
      if (N.n[i][k] < 0) rep.violations.push_back({Condition::C1, i, k, "negative entry"});
  for (int i = 0; i < N.d; ++i)
    if (row_sum(N, i) != m)
      rep.violations.push_back({Condition::C2, i, -1, "row sum " + std::to_string(row_sum(N, i))});
  for (int k = 0; k < N.d; ++k)
    if (col_sum(N, k) != m)
      rep.violations.push_back({Condition::C3, -1, k, "column sum " + std::to_string(col_sum(N, k))});
  for (int i = 0; i < N.d; ++i) {
    if (!is_unit(N.n[i][0], N.m)) rep.violations.push_back({Condition::C4, i, 0, "gcd(N_0, m) != 1"});
    for (int k = 2; k < N.d; ++k)
      if (!is_unit(N.n[i][k] - N.n[i][1], N.m))
        rep.violations.push_back({Condition::C4, i, k, "gcd(N_k - N_Delta, m) != 1"});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

Checklist high_modulus_checklist(const CountMatrix& N) {
  check_shape(N);
  const auto m = static_cast<std::int64_t>(N.m);
  Checklist h;
  h.h1 = h.h2 = h.h3 = h.h4 = h.h5 = true;
  for (int i = 0; i < N.d; ++i) {
    for (int k = 0; k < N.d; ++k) h.h1 = h.h1 && N.n[i][k] >= 0;
    h.h2 = h.h2 && row_sum(N, i) == m;
    h.h3 = h.h3 && col_sum(N, i) == m;
    h.h4 = h.h4 && gcd64(N.n[i][0], m) == 1;
    for (int k = 2; k < N.d; ++k) h.h5 = h.h5 && gcd64(N.n[i][k] - N.n[i][1], m) == 1;
  }
  return h;
}

CountMatrix d7_matrix(Residue m) {
  if (m % 2 == 0 || m < 7) fail(ErrorKind::UnsupportedParameters, "seven-dimensional matrices need odd m >= 7");
  CountMatrix N{7, m, {}};
  const std::int64_t s = m / 6;
  if (m == 7) {
    N.n = {{1, 2, 0, 0, 0, 0, 4}, {1, 2, 0, 0, 0, 3, 1}, {1, 1, 0, 0, 3, 2, 0}, {1, 1, 0, 3, 2, 0, 0},
           {1, 1, 3, 2, 0, 0, 0}, {1, 0, 2, 1, 1, 1, 1}, {1, 0, 2, 1, 1, 1, 1}};
  } else if (m % 6 == 1) {
    N.n = {{1, s + 1, s - 1, s - 1, s - 1, s - 1, s + 3},
           {1, s + 1, s - 1, s - 1, s - 1, s - 1, s + 3},
           {1, s + 1, s - 1, s - 1, s - 1, s + 2, s},
           {1, s, s + 1, s + 1, s + 1, s - 1, s - 2},
           {2, s - 1, s, s, s + 1, s + 1, s - 2},
           {2, s - 1, s + 1, s + 1, s, s, s - 2},
           {6 * s - 7, 0, 2, 2, 2, 1, 1}};
  } else if (m % 6 == 3) {
    N.n = {{1, s + 2, s, s, s, s, s},
           {1, s + 2, s, s, s, s, s},
           {1, s + 2, s, s, s, s, s},
           {1, s - 1, s, s, s + 1, s + 1, s + 1},
           {2, s - 1, s, s, s, s + 1, s + 1},
           {2, s - 1, s + 1, s + 1, s, s, s},
           {6 * s - 5, 0, 2, 2, 2, 1, 1}};
  } else {
    N.n = {{1, s + 2, s, s, s, s + 1, s + 1},
           {1, s + 2, s, s, s, s + 1, s + 1},
           {1, s + 2, s, s, s, s + 1, s + 1},
           {1, s, s + 1, s + 1, s + 1, s - 1, s + 2},
           {2, s, s + 1, s + 1, s + 1, s + 1, s - 1},
           {2, s - 1, s + 1, s + 1, s + 1, s + 1, s},
           {6 * s - 3, 0, 2, 2, 2, 1, 1}};
  }
  return N;
}

bool gale_ryser_check(const DegreeSequencePair& pair) {
  const int L = static_cast<int>(pair.rows.size());
  const int p = static_cast<int>(pair.cols.size());
  std::int64_t total_r = 0, total_c = 0;
  for (int v : pair.rows) {
    if (v < 0 || v > p) return false;
    total_r += v;
  }
  for (int v : pair.cols) {
    if (v < 0 || v > L) return false;
    total_c += v;
  }
  if (total_r != total_c) return false;
  std::vector<int> sorted = pair.rows;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::int64_t lhs = 0;
  for (int t = 1; t <= L; ++t) {
    lhs += sorted[t - 1];
    std::int64_t rhs = 0;
    for (int e : pair.cols) rhs += std::min(t, e);
    if (lhs > rhs) return false;
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> gale_ryser_realize(const DegreeSequencePair& pair) {
  const int L = static_cast<int>(pair.rows.size());
  const int p = static_cast<int>(pair.cols.size());
  for (int v : pair.rows)
    if (v < 0 || v > p) fail(ErrorKind::InfeasibleDegrees, "row degree out of range");
  std::vector<std::vector<std::uint8_t>> out(L, std::vector<std::uint8_t>(p, 0));
  std::vector<int> residual = pair.rows;
  std::vector<int> order(L);
  for (int k = 0; k < p; ++k) {
    const int need = pair.cols[k];
    if (need < 0 || need > L) fail(ErrorKind::InfeasibleDegrees, "column degree out of range");
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return residual[x] > residual[y]; });
    for (int j = 0; j < need; ++j) {
      const int i = order[j];
      if (residual[i] == 0) fail(ErrorKind::InfeasibleDegrees, "degree pair is not bigraphic");
      out[i][k] = 1;
      --residual[i];
    }
  }
  for (int v : residual)
    if (v != 0) fail(ErrorKind::InfeasibleDegrees, "degree pair is not bigraphic");
  return out;
}

SignedCoreCheck check_signed_core(const SignedCore& core) {
  SignedCoreCheck chk;
  chk.entries = chk.row_sums = chk.col_sums = true;
  std::vector<int> cols(core.p, 0);
  for (int i = 0; i < core.L; ++i) {
    int s = 0;
    for (int k = 0; k < core.p; ++k) {
      const int v = core.sigma[i][k];
      chk.entries = chk.entries && (v == -2 || v == -1 || v == 1 || v == 2);
      s += v;
      cols[k] += v;
    }
    chk.row_sums = chk.row_sums && s == core.r - core.a[i] - core.L * core.eps[i];
  }
  for (int k = 0; k < core.p; ++k) chk.col_sums = chk.col_sums && cols[k] == -core.c[k];
  return chk;
}

namespace {

void validate_core_inputs(int L, int r, const std::vector<int>& a, const std::vector<int>& eps,
                          const std::vector<int>& c) {
  auto bad = [](const std::string& why) { fail(ErrorKind::InvalidParameters, "signed core: " + why); };
  if (L < 4 || L % 2 != 0) bad("L must be even and at least 4");
  if (r < 1 || r >= L || r % 2 == 0) bad("r must be odd in [1, L)");
  if (static_cast<int>(a.size()) != L || static_cast<int>(eps.size()) != L) bad("a and eps need L entries");
  if (static_cast<int>(c.size()) != L - 1) bad("c needs L-1 entries");
  for (int v : a)
    if (v != 1 && v != 2) bad("a entries must be 1 or 2");
  for (int v : c)
    if (v != 1 && v != 2) bad("c entries must be 1 or 2");
  for (int v : eps)
    if (v != 0 && v != 1) bad("eps entries must be 0 or 1");
  if (std::accumulate(eps.begin(), eps.end(), 0) != r) bad("eps must sum to r");
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(c.begin(), c.end(), 0)) bad("sum(a) != sum(c)");
}

// Class index: F1 = 0, F2 = 1, E1 = 2, E2 = 3.
int row_class(int a, int eps) { return 2 * eps + (a - 1); }

SignedCore core_l4(SignedCore core) {
  const int A2 = static_cast<int>(std::count(core.a.begin(), core.a.end(), 2));
  int x = 0;
  for (int i = 0; i < 4; ++i) x += (core.a[i] == 2 && core.eps[i] == 1);
  const auto& table = golden::l4_table();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const golden::L4Row& row) { return row.r == core.r && row.A2 == A2 && row.x == x; });
  if (it == table.end()) fail(ErrorKind::InvalidParameters, "no L=4 table row for these data");
  std::vector<int> rows(4), cols(3);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int u, int v) {
    return row_class(core.a[u], core.eps[u]) < row_class(core.a[v], core.eps[v]);
  });
  std::stable_sort(cols.begin(), cols.end(), [&](int u, int v) { return core.c[u] < core.c[v]; });
  core.sigma.assign(4, std::vector<int>(3, 0));
  for (int pos = 0; pos < 4; ++pos)
    for (int col = 0; col < 3; ++col) core.sigma[rows[pos]][cols[col]] = it->columns[col][pos];
  return core;
}

SignedCore core_binary_layers(SignedCore core) {
  const int L = core.L, p = core.p, h = L / 2, s = (core.r - 1) / 2;
  std::vector<int> degB_row(L), degB_col(p, h);
  for (int i = 0; i < L; ++i) {
    const bool F = core.eps[i] == 0;
    if (s <= h - 3) {
      degB_row[i] = F ? h + s : s;
    } else if (s == h - 2) {
      degB_row[i] = F ? (core.a[i] == 1 ? 2 * h - 2 : 2 * h - 3) : h - 2;
    } else {
      degB_row[i] = F ? 2 * h - 2 : h - 1;
    }
  }
  if (s == h - 2) {
    // Lower the first y columns with c = 2, y = |F2|.
    int y = 0;
    for (int i = 0; i < L; ++i) y += (core.eps[i] == 0 && core.a[i] == 2);
    for (int k = 0; k < p && y > 0; ++k)
      if (core.c[k] == 2) {
        degB_col[k] = h - 1;
        --y;
      }
    if (y > 0) fail(ErrorKind::InvalidParameters, "too few c=2 columns");
  } else if (s == h - 1) {
    int last = -1;
    for (int k = 0; k < p; ++k)
      if (core.c[k] == 2) last = k;
    if (last < 0) fail(ErrorKind::InvalidParameters, "no c=2 column");
    degB_col[last] = h - 1;
  }
  std::vector<int> degA_row(L), degA_col(p);
  for (int i = 0; i < L; ++i) degA_row[i] = core.r - core.a[i] - L * core.eps[i] + 2 * p - 3 * degB_row[i];
  for (int k = 0; k < p; ++k) degA_col[k] = 2 * L - core.c[k] - 3 * degB_col[k];
  const auto B = gale_ryser_realize({degB_row, degB_col});
  const auto A = gale_ryser_realize({degA_row, degA_col});
  core.sigma.assign(L, std::vector<int>(p, 0));
  for (int i = 0; i < L; ++i)
    for (int k = 0; k < p; ++k) core.sigma[i][k] = -2 + A[i][k] + 3 * B[i][k];
  return core;
}

}  // namespace

SignedCore signed_core_qge2(int L, int r, const std::vector<int>& a, const std::vector<int>& eps,
                            const std::vector<int>& c) {
  validate_core_inputs(L, r, a, eps, c);
  SignedCore core{L, L - 1, r, a, eps, c, {}};
  return L == 4 ? core_l4(std::move(core)) : core_binary_layers(std::move(core));
}

SignedCore signed_core_q1(int L, int r) {
  if (L < 4 || L % 2 != 0) fail(ErrorKind::InvalidParameters, "signed core: L must be even and at least 4");
  if (r < 1 || r >= L || r % 2 == 0) fail(ErrorKind::InvalidParameters, "signed core: r must be odd in [1, L)");
  const int p = L - 1;
  const int nP = L - r, nu = L - 1;
  SignedCore core;
  core.L = L;
  core.p = p;
  core.r = r;
  core.a.assign(L, 2);
  core.eps.assign(L, 1);
  std::vector<int> rows(L);
  for (int i = 0; i < L; ++i) {
    if (i < nP) {
      core.a[i] = 1;
      core.eps[i] = 0;
      rows[i] = (L + r - 3) / 2;
    } else if (i < nu) {
      rows[i] = (r - 3) / 2;
    } else {
      core.a[i] = 1;
      rows[i] = (r - 1) / 2;
    }
  }
  const auto G = gale_ryser_realize({rows, std::vector<int>(p, (L - 2) / 2)});

  std::vector<int> mu(nP, -1);
  int i0 = 0, y0 = -1;
  auto match_rows = [&](int skip_row, int skip_col) {
    std::vector<int> left;
    std::vector<std::vector<int>> adj;
    for (int i = 0; i < nP; ++i) {
      if (i == skip_row) continue;
      left.push_back(i);
      adj.emplace_back();
      for (int k = 0; k < p; ++k)
        if (G[i][k] && k != skip_col) adj.back().push_back(k);
    }
    const auto match = max_matching(static_cast<int>(left.size()), p, adj);
    for (std::size_t j = 0; j < left.size(); ++j) {
      if (match[j] < 0) fail(ErrorKind::InternalError, "Hall matching does not cover P");
      mu[left[j]] = match[j];
    }
  };
  if (r == 1) {
    match_rows(-1, -1);
    y0 = mu[i0];
  } else {
    for (int k = 0; k < p && y0 < 0; ++k)
      if (G[i0][k] && !G[nu][k]) y0 = k;
    if (y0 < 0) fail(ErrorKind::InternalError, "no distinguished column");
    mu[i0] = y0;
    match_rows(i0, y0);
  }

  core.sigma.assign(L, std::vector<int>(p, 0));
  for (int i = 0; i < L; ++i)
    for (int k = 0; k < p; ++k) core.sigma[i][k] = G[i][k] ? 1 : -1;
  core.c.assign(p, 2);
  for (int i = 0; i < nP; ++i) {
    core.sigma[i][mu[i]] = 2;
    if (i != i0) core.c[mu[i]] = 1;
  }
  if (core.sigma[nu][y0] != -1) fail(ErrorKind::InternalError, "distinguished entry is not -1");
  core.sigma[nu][y0] = -2;
  return core;
}

int signed_column_supply(int L, int c, int j) { return std::min(2 * j, 2 * (L - j) - c); }

HighModulusChoices default_choices(int d, Residue m) {
  const int L = d - 1, p = L - 1;
  const int r = static_cast<int>(m % static_cast<Residue>(L));
  HighModulusChoices ch;
  ch.C = 1;
  while (ch.C < L) ch.C *= 2;
  ch.a.assign(L, 1);
  for (int i = 0; i < ch.C - L; ++i) ch.a[i] = 2;
  ch.eps.assign(L, 0);
  for (int i = 0; i < r; ++i) ch.eps[i] = 1;
  ch.c.assign(p, 1);
  for (int k = 0; k < ch.C - p; ++k) ch.c[p - 1 - k] = 2;
  return ch;
}

namespace {

void require_high_modulus(int d, Residue m) {
  if (d < 5 || d % 2 == 0) fail(ErrorKind::UnsupportedParameters, "high-modulus matrices need odd d >= 5");
  if (m % 2 == 0 || m < static_cast<Residue>(d))
    fail(ErrorKind::UnsupportedParameters, "high-modulus matrices need odd m >= d");
}

}  // namespace

CountMatrix assemble_qge2(int d, Residue m, const SignedCore& core, int C) {
  const int L = d - 1;
  const std::int64_t q = m / static_cast<Residue>(L);
  CountMatrix N{d, m, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0))};
  for (int i = 0; i < L; ++i) {
    N.n[i][0] = core.a[i];
    N.n[i][1] = q + core.eps[i];
    for (int k = 0; k < core.p; ++k) N.n[i][k + 2] = q + core.eps[i] + core.sigma[i][k];
  }
  N.n[L][0] = static_cast<std::int64_t>(m) - C;
  for (int k = 0; k < core.p; ++k) N.n[L][k + 2] = core.c[k];
  return N;
}

CountMatrix assemble_q1(int d, Residue m, const SignedCore& core) {
  const int L = d - 1;
  CountMatrix N{d, m, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0))};
  for (int i = 0; i < L; ++i) {
    N.n[i][0] = core.a[i];
    N.n[i][1] = 1 + core.eps[i];
    for (int k = 0; k < core.p; ++k) N.n[i][k + 2] = 1 + core.eps[i] + core.sigma[i][k];
  }
  N.n[L][0] = 1;
  for (int k = 0; k < core.p; ++k) N.n[L][k + 2] = core.c[k];
  return N;
}

CountMatrix high_modulus_matrix(int d, Residue m, const HighModulusChoices& ch) {
  require_high_modulus(d, m);
  const int L = d - 1;
  const Residue q = m / static_cast<Residue>(L);
  if (q < 2) fail(ErrorKind::InvalidParameters, "explicit choices apply to the q >= 2 branch");
  if (!is_power_of_two(ch.C) || ch.C < L || ch.C >= 2 * L)
    fail(ErrorKind::InvalidParameters, "C must be a power of two in [L, 2L)");
  if (std::accumulate(ch.a.begin(), ch.a.end(), 0) != ch.C) fail(ErrorKind::InvalidParameters, "sum(a) != C");
  const int r = static_cast<int>(m % static_cast<Residue>(L));
  return assemble_qge2(d, m, signed_core_qge2(L, r, ch.a, ch.eps, ch.c), ch.C);
}

CountMatrix high_modulus_matrix(int d, Residue m) {
  require_high_modulus(d, m);
  const int L = d - 1;
  if (m / static_cast<Residue>(L) == 1) return assemble_q1(d, m, signed_core_q1(L, static_cast<int>(m) - L));
  return high_modulus_matrix(d, m, default_choices(d, m));
}

Schedule schedule_from_matrix(const CountMatrix& N) {
  check_shape(N);
  for (const Violation& v : check_admissible(N).violations)
    if (v.condition != Condition::C4)
      fail(ErrorKind::InvalidInput, "count matrix is not m-regular: " + v.detail);
  const int d = N.d;
  auto residual = N.n;
  Schedule s{{d, N.m}, {}};
  for (Residue t = 0; t < N.m; ++t) {
    std::vector<std::vector<int>> adj(d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (residual[i][k] > 0) adj[i].push_back(k);
    const auto match = max_matching(d, d, adj);
    PrefixLabelRule rule;
    for (int i = 0; i < d; ++i) {
      if (match[i] < 0) fail(ErrorKind::InternalError, "regular multigraph without a perfect matching");
      --residual[i][match[i]];
      rule.assignment.push_back(Label{static_cast<std::uint8_t>(match[i])});
    }
    s.layers.push_back(std::move(rule));
  }
  return s;
}

}  // namespace hamdec
