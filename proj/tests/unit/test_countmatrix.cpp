#include <functional>
#include <numeric>

#include "doctest.h"
#include "hamdec/countmatrix.hpp"
#include "hamdec/golden.hpp"
#include "hamdec/matching.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

// Gale-Ryser inequalities written out directly.
bool ref_bigraphic(std::vector<int> rows, const std::vector<int>& cols) {
  const int L = static_cast<int>(rows.size());
  if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return false;
  for (int v : rows)
    if (v < 0 || v > static_cast<int>(cols.size())) return false;
  for (int v : cols)
    if (v < 0 || v > L) return false;
  std::sort(rows.rbegin(), rows.rend());
  int lhs = 0;
  for (int t = 1; t <= L; ++t) {
    lhs += rows[t - 1];
    int rhs = 0;
    for (int e : cols) rhs += std::min(t, e);
    if (lhs > rhs) return false;
  }
  return true;
}

void check_sigma(const SignedCore& core) {
  const int L = core.L, p = core.p;
  REQUIRE(static_cast<int>(core.sigma.size()) == L);
  for (int i = 0; i < L; ++i) {
    int row = 0;
    for (int k = 0; k < p; ++k) {
      const int v = core.sigma[i][k];
      REQUIRE((v == -2 || v == -1 || v == 1 || v == 2));
      row += v;
    }
    REQUIRE(row == core.r - core.a[i] - L * core.eps[i]);
  }
  for (int k = 0; k < p; ++k) {
    int col = 0;
    for (int i = 0; i < L; ++i) col += core.sigma[i][k];
    REQUIRE(col == -core.c[k]);
  }
  CHECK(check_signed_core(core).ok());
}

std::vector<int> random_ones(int n, int ones, std::mt19937_64& g, int hi = 1, int lo = 0) {
  std::vector<int> v(n, lo);
  std::fill(v.begin(), v.begin() + ones, hi);
  std::shuffle(v.begin(), v.end(), g);
  return v;
}

}  // namespace

TEST_CASE("d=7 parametric matrices") {
  const CountMatrix n7 = d7_matrix(7);
  CHECK(n7.n[0] == std::vector<std::int64_t>{1, 2, 0, 0, 0, 0, 4});
  CHECK(d7_matrix(9).n[6] == std::vector<std::int64_t>{1, 0, 2, 2, 2, 1, 1});
  CHECK(d7_matrix(11).at(6, 0) == 3);
  CHECK(d7_matrix(13).at(6, 0) == 5);
  CHECK_THROWS_AS(d7_matrix(5), Error);
  CHECK_THROWS_AS(d7_matrix(8), Error);
  for (Residue m = 7; m <= 99; m += 2) {
    INFO("m = " << m);
    CHECK(check_admissible(d7_matrix(m)).ok);
    CHECK(check_admissible(high_modulus_matrix(7, m)).ok);
  }
}

TEST_CASE("admissibility violations are located") {
  CountMatrix N = d7_matrix(7);
  // Swapping two whole columns keeps every sum; row 0 then has N_0 = 0.
  for (auto& row : N.n) std::swap(row[0], row[2]);
  const AdmissibleReport rep = check_admissible(N);
  CHECK_FALSE(rep.ok);
  bool c4_row0 = false;
  for (const auto& v : rep.violations) c4_row0 = c4_row0 || (v.condition == Condition::C4 && v.row == 0);
  CHECK(c4_row0);
  N = d7_matrix(7);
  N.n[2][3] += 1;
  const AdmissibleReport sums = check_admissible(N);
  CHECK_FALSE(sums.ok);
  int row_sum = 0, col_sum = 0;
  for (const auto& v : sums.violations) {
    if (v.condition == Condition::C2) {
      ++row_sum;
      CHECK(v.row == 2);
    }
    if (v.condition == Condition::C3) {
      ++col_sum;
      CHECK(v.col == 3);
    }
  }
  CHECK(row_sum == 1);
  CHECK(col_sum == 1);
}

TEST_CASE("worked d=5, m=9 matrix") {
  const CountMatrix N = high_modulus_matrix(5, 9);
  const auto& want = golden::d5m9_matrix();
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) CHECK(N.at(i, k) == want[i][k]);
  CHECK(check_admissible(N).ok);
  CHECK(high_modulus_checklist(N).all());
  for (const auto& row : want) {
    CHECK(std::accumulate(row.begin(), row.end(), 0) == 9);
  }
}

TEST_CASE("high-modulus checklist across the grid") {
  for (int d : {5, 7, 9, 11})
    for (Residue m = d; m <= 25; m += 2) {
      INFO("d = " << d << ", m = " << m);
      const CountMatrix N = high_modulus_matrix(d, m);
      const Checklist h = high_modulus_checklist(N);
      CHECK(h.h1);
      CHECK(h.h2);
      CHECK(h.h3);
      CHECK(h.h4);
      CHECK(h.h5);
      CHECK(check_admissible(N).ok);
    }
  CHECK(check_admissible(high_modulus_matrix(9, 11)).ok);
  const CountMatrix n29 = high_modulus_matrix(7, 29);
  CHECK(check_admissible(n29).ok);
  CHECK(n29.at(6, 0) == 29 - 8);
  CHECK_THROWS_AS(high_modulus_matrix(7, 5), Error);
}

TEST_CASE("L = 4 finite table") {
  const auto& t = golden::l4_table();
  CHECK(t[0].columns[0] == std::array<int, 4>{-2, 1, 1, -1});
  CHECK(t[0].columns[1] == std::array<int, 4>{1, -2, 1, -1});
  CHECK(t[0].columns[2] == std::array<int, 4>{1, 1, -2, -2});
  // F1 F1 F1 E1 with c = (1, 1, 2) is the first table row.
  const SignedCore core = signed_core_qge2(4, 1, {1, 1, 1, 1}, {0, 0, 0, 1}, {1, 1, 2});
  check_sigma(core);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 4; ++i) CHECK(core.sigma[i][k] == t[0].columns[k][i]);
  for (const auto& row : t) {
    const int m2 = row.A2 + 1;
    for (int k = 0; k < 3; ++k) {
      const int sum = std::accumulate(row.columns[k].begin(), row.columns[k].end(), 0);
      CHECK(sum == (k < 3 - m2 ? -1 : -2));
    }
  }
}

TEST_CASE("signed cores q >= 2 on seeded random parameters") {
  auto g = oracle::rng(8);
  for (int L : {4, 6, 8, 10})
    for (int r = 1; r < L; r += 2) {
      int C = 1;
      while (C < L) C *= 2;
      for (int it = 0; it < 25; ++it) {
        const auto a = random_ones(L, C - L, g, 2, 1);
        const auto eps = random_ones(L, r, g);
        const auto c = random_ones(L - 1, C - (L - 1), g, 2, 1);
        check_sigma(signed_core_qge2(L, r, a, eps, c));
      }
    }
  CHECK_THROWS_AS(signed_core_qge2(4, 2, {1, 1, 1, 1}, {1, 1, 0, 0}, {1, 1, 2}), Error);
  CHECK_THROWS_AS(signed_core_qge2(4, 1, {1, 1, 1, 1}, {0, 0, 0, 1}, {1, 1, 1}), Error);
}

TEST_CASE("signed cores q >= 2 for every admissible C") {
  auto g = oracle::rng(9);
  for (int L : {6, 8, 10})
    for (int r = 1; r < L; r += 2)
      for (int C = L; C <= 2 * (L - 1); ++C) {
        const auto a = random_ones(L, C - L, g, 2, 1);
        const auto eps = random_ones(L, r, g);
        const auto c = random_ones(L - 1, C - (L - 1), g, 2, 1);
        check_sigma(signed_core_qge2(L, r, a, eps, c));
      }
}

TEST_CASE("signed cores q = 1") {
  for (int L : {4, 6, 8, 10})
    for (int r = 1; r < L; r += 2) {
      INFO("L = " << L << ", r = " << r);
      const SignedCore core = signed_core_q1(L, r);
      check_sigma(core);
      int ones = 0, twos = 0;
      for (int v : core.c) (v == 1 ? ones : twos) += 1;
      CHECK(ones == L - r - 1);
      CHECK(twos == r);
      for (int i = 0; i < L; ++i)
        if (core.eps[i] == 0)
          for (int v : core.sigma[i]) CHECK(v != -2);
    }
}

TEST_CASE("column supply bound") {
  // Largest j-subset sum over all columns in {-2,-1,1,2}^L summing to -c.
  for (int L = 4; L <= 8; ++L) {
    const int vals[4] = {-2, -1, 1, 2};
    std::vector<std::vector<int>> best(3, std::vector<int>(L + 1, INT32_MIN));
    std::vector<int> col(L);
    const Index total = oracle::ipow(4, L);
    for (Index code = 0; code < total; ++code) {
      Index x = code;
      int sum = 0;
      for (int i = 0; i < L; ++i) col[i] = vals[x % 4], x /= 4, sum += col[i];
      if (sum != -1 && sum != -2) continue;
      std::sort(col.rbegin(), col.rend());
      int prefix = 0;
      best[-sum][0] = 0;
      for (int j = 1; j <= L; ++j) {
        prefix += col[j - 1];
        best[-sum][j] = std::max(best[-sum][j], prefix);
      }
    }
    for (int c : {1, 2})
      for (int j = 0; j <= L; ++j) {
        INFO("L = " << L << ", c = " << c << ", j = " << j);
        CHECK(signed_column_supply(L, c, j) == best[c][j]);
      }
  }
}

TEST_CASE("Gale-Ryser check and realisation") {
  CHECK(gale_ryser_check({{2, 2, 1, 1}, {2, 2, 2}}));
  CHECK_FALSE(gale_ryser_check({{3, 0}, {1, 1}}));
  const auto G = gale_ryser_realize({{2, 2, 1, 1}, {2, 2, 2}});
  for (int i = 0; i < 4; ++i) CHECK(std::accumulate(G[i].begin(), G[i].end(), 0) == std::vector<int>{2, 2, 1, 1}[i]);
  const auto Z = gale_ryser_realize({{0, 0, 0}, {0, 0}});
  for (const auto& row : Z)
    for (auto v : row) CHECK(v == 0);
  try {
    gale_ryser_realize({{3, 0}, {1, 1}});
    FAIL("infeasible pair realised");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleDegrees);
  }
  // Case-1 degrees at L = 6, s = 0: F rows h, E rows 0, columns all h.
  CHECK(gale_ryser_check({{3, 3, 3, 3, 3, 0}, {3, 3, 3, 3, 3}}));
}

TEST_CASE("Gale-Ryser on random unsorted pairs") {
  auto g = oracle::rng(10);
  for (int it = 0; it < 3000; ++it) {
    const int L = 1 + static_cast<int>(g() % 8), p = 1 + static_cast<int>(g() % 7);
    std::vector<int> rows(L), cols(p);
    for (auto& v : rows) v = static_cast<int>(g() % (p + 1));
    for (auto& v : cols) v = static_cast<int>(g() % (L + 1));
    // Nudge totals together half of the time.
    if (g() % 2) {
      int diff = std::accumulate(rows.begin(), rows.end(), 0) - std::accumulate(cols.begin(), cols.end(), 0);
      for (auto& v : cols)
        while (diff > 0 && v < L) ++v, --diff;
      for (auto& v : rows)
        while (diff < 0 && v < p) ++v, ++diff;
    }
    const bool want = ref_bigraphic(rows, cols);
    REQUIRE(gale_ryser_check({rows, cols}) == want);
    if (!want) continue;
    const auto G = gale_ryser_realize({rows, cols});
    for (int i = 0; i < L; ++i) REQUIRE(std::accumulate(G[i].begin(), G[i].end(), 0) == rows[i]);
    for (int k = 0; k < p; ++k) {
      int s = 0;
      for (int i = 0; i < L; ++i) s += G[i][k];
      REQUIRE(s == cols[k]);
    }
  }
}

TEST_CASE("matrix schedules realise the counts") {
  for (const CountMatrix& N : {d7_matrix(7), high_modulus_matrix(5, 9), high_modulus_matrix(9, 11)}) {
    const Schedule s = schedule_from_matrix(N);
    std::vector<std::vector<std::int64_t>> counts(N.d, std::vector<std::int64_t>(N.d, 0));
    for (Residue t = 0; t < N.m; ++t) {
      const auto& layer = std::get<PrefixLabelRule>(s.layers[t]);
      std::vector<char> used(N.d, 0);
      for (int c = 0; c < N.d; ++c) {
        ++counts[c][layer.assignment[c].code];
        CHECK_FALSE(used[layer.assignment[c].code]);
        used[layer.assignment[c].code] = 1;
      }
    }
    CHECK(counts == N.n);
  }
  CountMatrix bad = d7_matrix(7);
  bad.n[0][0] += 1;
  CHECK_THROWS_AS(schedule_from_matrix(bad), Error);
}

TEST_CASE("maximum matching against brute force") {
  auto g = oracle::rng(11);
  for (int it = 0; it < 400; ++it) {
    const int nl = 1 + static_cast<int>(g() % 6), nr = 1 + static_cast<int>(g() % 6);
    std::vector<std::vector<int>> adj(nl);
    for (int u = 0; u < nl; ++u)
      for (int v = 0; v < nr; ++v)
        if (g() % 3 == 0) adj[u].push_back(v);
    const auto match = max_matching(nl, nr, adj);
    int size = 0;
    std::vector<char> taken(nr, 0);
    for (int u = 0; u < nl; ++u) {
      if (match[u] < 0) continue;
      REQUIRE(std::find(adj[u].begin(), adj[u].end(), match[u]) != adj[u].end());
      REQUIRE_FALSE(taken[match[u]]);
      taken[match[u]] = 1;
      ++size;
    }
    // Brute force over subsets of right vertices assigned in left order.
    int best = 0;
    std::function<void(int, std::uint32_t, int)> rec = [&](int u, std::uint32_t used, int got) {
      if (u == nl) {
        best = std::max(best, got);
        return;
      }
      rec(u + 1, used, got);
      for (int v : adj[u])
        if (!(used >> v & 1)) rec(u + 1, used | 1u << v, got + 1);
    };
    rec(0, 0, 0);
    REQUIRE(size == best);
  }
}
