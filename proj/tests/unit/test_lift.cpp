#include <numeric>

#include "doctest.h"
#include "hamdec/lift.hpp"
#include "hamdec/smalldims.hpp"
#include "hamdec/synthesis.hpp"
#include "hamdec/verify.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

template <class F>
ErrorKind kind_thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no hamdec::Error thrown");
  return ErrorKind::InternalError;
}

// (11, m) over D_5(m): one triple group then four pairs.
const std::vector<int> kComp11{3, 2, 2, 2, 2};

std::vector<std::vector<Residue>> parts11(Residue m) {
  std::vector<std::vector<Residue>> p{{1, 1, m - 2}};
  for (int j = 0; j < 4; ++j) p.push_back({1, m - 1});
  return p;
}

// Counts recomputed from the labels alone.
std::vector<std::vector<std::int64_t>> recount(const BaseMulti& bm, const ActiveAssignment& a) {
  std::vector<std::vector<std::int64_t>> n(bm.d, std::vector<std::int64_t>(bm.T, 0));
  std::vector<int> act(bm.T);
  for (Index x = 0; x < bm.vertices(); ++x) {
    bm.active_colors(x, act.data());
    for (int k = 0; k < bm.T; ++k) ++n[act[k]][a.labels[x * bm.T + k]];
  }
  return n;
}

bool labels_are_local_bijections(const BaseMulti& bm, const ActiveAssignment& a) {
  std::vector<std::uint8_t> row(bm.T);
  for (Index x = 0; x < bm.vertices(); ++x) {
    std::copy_n(a.labels.begin() + x * bm.T, bm.T, row.begin());
    std::sort(row.begin(), row.end());
    for (int k = 0; k < bm.T; ++k)
      if (row[k] != k) return false;
  }
  return true;
}

// Colours 0 and 1 share direction 0 everywhere.
struct Collapsed final : Oracle {
  void directions_at(const Residue*, Direction* out) const override { out[0] = 0, out[1] = 0, out[2] = 1; }
  int dimension() const override { return 3; }
};

}  // namespace

TEST_CASE("cylinder split returns shift by the block size") {
  for (Residue m : {3u, 5u, 7u}) {
    const std::vector<Residue> alpha = m == 3 ? std::vector<Residue>{1, 2} : std::vector<Residue>{1, m - 1};
    const Index n = 4 * m;
    const PhaseRule rule = cylinder_split(n, m, 2, alpha);
    for (Index x = 0; x < n; ++x)
      for (Residue y = 0; y < m; ++y) {
        // Exactly one factor moves horizontally at each point.
        int horizontal = 0;
        for (int i = 0; i < 2; ++i) horizontal += rule.step(i, x, y).first != x;
        REQUIRE(horizontal == 1);
        for (int i = 0; i < 2; ++i) {
          std::pair<Index, Residue> p{x, y};
          for (Residue s = 0; s < m; ++s) p = rule.step(i, p.first, p.second);
          REQUIRE(p.first == (x + alpha[i]) % n);
          REQUIRE(p.second == (y + m - alpha[i]) % m);
        }
      }
  }
  CHECK(kind_thrown([] { cylinder_split(9, 9, 2, {3, 6}); }) == ErrorKind::InvalidParameters);
  CHECK(kind_thrown([] { cylinder_split(9, 5, 2, {1, 3}); }) == ErrorKind::InvalidParameters);
  CHECK(kind_thrown([] { cylinder_split(9, 3, 4, {1, 1, 1, 0}); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("base multigraph of the (11, 3) lift") {
  const Residue m = 3;
  const Decomposition base = construct_d5(m);
  const BaseMulti bm = base_cylinder(base, 11, kComp11, parts11(m));
  CHECK(bm.T == 6);
  CHECK(bm.vertices() == 729);
  std::vector<Index> active(11, 0);
  std::vector<int> act(bm.T);
  for (Index x = 0; x < bm.vertices(); ++x) {
    bm.active_colors(x, act.data());
    CHECK(std::is_sorted(act.begin(), act.end()));
    for (int c : act) {
      CHECK(bm.is_active(x, c));
      ++active[c];
    }
    int inactive = 0;
    for (int c = 0; c < 11; ++c) inactive += !bm.is_active(x, c);
    REQUIRE(inactive == bm.b);
    // The b horizontal colours ride distinct base generators.
    std::vector<int> gens;
    for (int j = 0; j < bm.b; ++j) gens.push_back(bm.base_dir[(x % bm.base_states) * bm.b + j]);
    std::sort(gens.begin(), gens.end());
    REQUIRE(gens == std::vector<int>{0, 1, 2, 3, 4});
  }
  for (int c = 0; c < 11; ++c) {
    CHECK(active[c] == (m - bm.alpha[c]) * bm.base_states);
    CHECK(active[c] % m == 0);
  }
}

TEST_CASE("base multigraph refuses a broken base") {
  Decomposition base = construct_d3(3);
  base.oracle = std::make_shared<const Collapsed>();
  CHECK(kind_thrown([&] { base_cylinder(base, 7, {3, 2, 2}, {{1, 1, 1}, {1, 2}, {1, 2}}); }) ==
        ErrorKind::CertificateFailure);
  CHECK(kind_thrown([] { base_cylinder(construct_d5(3), 12, kComp11, parts11(3)); }) ==
        ErrorKind::InvalidParameters);
}

TEST_CASE("modular-trade hypothesis") {
  // 3^5 = 243 > 3 * 11 * 6 = 198.
  CHECK(modular_trade_hypothesis(11, 5, 3));
  // 3^4 = 81 < 3 * 9 * 5 = 135.
  CHECK_FALSE(modular_trade_hypothesis(9, 4, 3));
  CHECK_FALSE(modular_trade_hypothesis(10, 5, 3));
  const BaseMulti pairs = base_cylinder(construct_d5(3), 10, {2, 2, 2, 2, 2}, std::vector<std::vector<Residue>>(5, {1, 2}));
  CHECK(kind_thrown([&] { choose_trade_vertices(pairs); }) == ErrorKind::UnsupportedParameters);
}

TEST_CASE("universal residue") {
  for (int d : {3, 7, 11, 13})
    for (Residue m : {3u, 5u, 7u, 9u}) {
      const auto u = universal_units(d, m);
      CHECK(u.size() == static_cast<std::size_t>(d));
      CHECK(std::accumulate(u.begin(), u.end(), Index{0}) % m == 0);
      for (Residue v : u) CHECK(std::gcd(v, m) == 1);
      const ResidueMatrix r = universal_residue(d, 4, m);
      for (int c = 0; c < d; ++c) CHECK(std::accumulate(r.rho[c].begin(), r.rho[c].end(), Index{0}) % m == 0);
      for (int s = 0; s < 4; ++s) {
        Index col = 0;
        for (int c = 0; c < d; ++c) col += r.rho[c][s];
        CHECK(col % m == 0);
      }
    }
  CHECK(universal_units(7, 5) == std::vector<Residue>{1, 1, 3, 1, 4, 1, 4});
  CHECK_THROWS_AS(universal_units(8, 5), Error);
}

TEST_CASE("trade reservations and residue realisation at (11, 3)") {
  const Residue m = 3;
  const BaseMulti bm = base_cylinder(construct_d5(m), 11, kComp11, parts11(m));
  const TradePlan plan = choose_trade_vertices(bm);
  CHECK(plan.aux == std::array<int, 3>{0, 1, 2});
  CHECK(plan.L0 == (m - 1) * (bm.T - 1));
  CHECK(plan.nonaux.size() == plan.L0 * 8);
  CHECK(plan.pair01.size() == plan.L0);
  CHECK(plan.pair02.size() == plan.L0);
  std::vector<char> used(bm.vertices(), 0);
  std::vector<std::vector<int>> per(11, std::vector<int>(bm.T, 0));
  for (const auto* list : {&plan.nonaux, &plan.pair01, &plan.pair02})
    for (const TradeSite& s : *list) {
      CHECK_FALSE(used[s.x]);
      used[s.x] = 1;
      CHECK(bm.is_active(s.x, s.color));
      CHECK(bm.is_active(s.x, s.partner));
      CHECK(s.tau >= 1);
      CHECK(s.tau < bm.T);
      if (list == &plan.nonaux) ++per[s.color][s.tau];
    }
  for (int c = 3; c < 11; ++c)
    for (int tau = 1; tau < bm.T; ++tau) CHECK(per[c][tau] == static_cast<int>(m - 1));

  const ActiveAssignment base = baseline_assignment(bm, plan);
  CHECK(labels_are_local_bijections(bm, base));
  CHECK(recount(bm, base) == base.counts);

  const ResidueMatrix rho = universal_residue(11, bm.T, m);
  const ActiveAssignment a = realize_residues(bm, plan, rho);
  CHECK(labels_are_local_bijections(bm, a));
  CHECK(recount(bm, a) == a.counts);
  for (int c = 0; c < 11; ++c) {
    for (int s = 0; s < bm.T; ++s) CHECK(static_cast<Residue>(a.counts[c][s] % m) == rho.rho[c][s]);
    const std::int64_t A = std::accumulate(a.counts[c].begin(), a.counts[c].end(), std::int64_t{0});
    CHECK(check_prefix_counts(LabelCounts::from_row(a.counts[c]), m, A).ok);
  }

  // Residues that already match the baseline need no swaps.
  ResidueMatrix same{m, {}};
  for (const auto& row : base.counts) {
    std::vector<Residue> r;
    for (std::int64_t v : row) r.push_back(static_cast<Residue>(v % m));
    same.rho.push_back(r);
  }
  const ActiveAssignment none = realize_residues(bm, plan, same);
  CHECK(none.swaps == 0);
  CHECK(none.labels == base.labels);
}

TEST_CASE("a discrepancy of 3 at m=5 swaps exactly 3 of the 4 reserved sites") {
  const Residue m = 5;
  const BaseMulti bm = base_cylinder(construct_d5(m), 11, kComp11, parts11(m));
  const TradePlan plan = choose_trade_vertices(bm);
  const ActiveAssignment base = baseline_assignment(bm, plan);
  ResidueMatrix rho{m, {}};
  for (const auto& row : base.counts) {
    std::vector<Residue> r;
    for (std::int64_t v : row) r.push_back(static_cast<Residue>(v % m));
    rho.rho.push_back(r);
  }
  const int c = 3, tau = 1, beta0 = plan.aux[0];
  rho.rho[c][tau] = (rho.rho[c][tau] + 3) % m;
  rho.rho[c][0] = (rho.rho[c][0] + m - 3) % m;
  rho.rho[beta0][0] = (rho.rho[beta0][0] + 3) % m;
  rho.rho[beta0][tau] = (rho.rho[beta0][tau] + m - 3) % m;
  const ActiveAssignment a = realize_residues(bm, plan, rho);
  int sites = 0, changed = 0;
  for (const TradeSite& s : plan.nonaux) {
    if (s.color != c || s.tau != tau) continue;
    ++sites;
    changed += !std::equal(a.labels.begin() + s.x * bm.T, a.labels.begin() + (s.x + 1) * bm.T,
                           base.labels.begin() + s.x * bm.T);
  }
  CHECK(sites == 4);
  CHECK(changed == 3);
  for (int col = 0; col < 11; ++col)
    for (int s = 0; s < bm.T; ++s) CHECK(static_cast<Residue>(a.counts[col][s] % m) == rho.rho[col][s]);
}

TEST_CASE("the (11, 3) lift is a Hamilton decomposition") {
  const Decomposition dec = successor_lift(5, 3, construct_d5(3));
  CHECK(dec.recipe.kind == "successor-lift");
  CHECK(oracle::is_hamilton_decomposition(dec));
  for (const CheckResult& r : lift_structural_checks(dec)) CHECK_MESSAGE(r.ok, r.name);
  // A label-0 active arc moves along tail rank b.
  const LiftCertificate& cert = *dec.lift;
  const BaseMulti& bm = cert.bm;
  std::vector<int> act(bm.T);
  bm.active_colors(0, act.data());
  const Vec origin(11, 0);
  for (int k = 0; k < bm.T; ++k)
    if (cert.assignment.labels[k] == 0) CHECK(dec.direction(origin, act[k]) == 11 - 1 - bm.b);
}

TEST_CASE("an uncompensated label swap is refused") {
  const Residue m = 3;
  const Decomposition base = construct_d5(m);
  LiftCertificate cert;
  cert.bm = base_cylinder(base, 11, kComp11, parts11(m));
  cert.plan = choose_trade_vertices(cert.bm);
  cert.rho = universal_residue(11, cert.bm.T, m);
  cert.assignment = realize_residues(cert.bm, cert.plan, cert.rho);
  const BaseMulti& bm = cert.bm;
  // Colour 0 carries N_0 = 1 mod 3; moving one of its label-0 arcs to Delta makes N_0 a non-unit.
  REQUIRE(cert.rho.rho[0][0] == 1);
  std::vector<int> act(bm.T);
  bool done = false;
  for (Index x = 0; x < bm.vertices() && !done; ++x) {
    bm.active_colors(x, act.data());
    std::uint8_t* lab = cert.assignment.labels.data() + x * bm.T;
    int i0 = -1, i1 = -1;
    for (int k = 0; k < bm.T; ++k) {
      if (act[k] == 0 && lab[k] == 0) i0 = k;
      if (act[k] != 0 && lab[k] == 1) i1 = k;
    }
    if (i0 < 0 || i1 < 0) continue;
    std::swap(lab[i0], lab[i1]);
    --cert.assignment.counts[0][0], ++cert.assignment.counts[0][1];
    --cert.assignment.counts[act[i1]][1], ++cert.assignment.counts[act[i1]][0];
    done = true;
  }
  REQUIRE(done);
  const LiftCertificate copy = cert;
  CHECK(kind_thrown([&] { lift_decomposition(std::move(cert), base); }) == ErrorKind::CertificateFailure);
  // Built anyway, the structural verifier rejects it from the oracle alone.
  const Decomposition bad = lift_decomposition(copy, base, "successor-lift", false);
  const VerificationReport rep = verify_structural(bad);
  CHECK_FALSE(rep.passed);
  bool tail_failed = false;
  for (const auto& ch : rep.checks)
    if (!ch.ok && (ch.name.find("tail") != std::string::npos || ch.name.find("Latin") != std::string::npos))
      tail_failed = true;
  CHECK(tail_failed);
  CHECK_FALSE(oracle::is_hamilton_decomposition(bad));
}

TEST_CASE("lift structural checks respect the budget") {
  const Decomposition dec = successor_lift(5, 3, construct_d5(3));
  CHECK(kind_thrown([&] { lift_structural_checks(dec, 100); }) == ErrorKind::ResourceLimit);
}
