#include "doctest.h"
#include "hamdec/d7boundary.hpp"
#include "hamdec/golden.hpp"
#include "oracles.hpp"

using namespace hamdec;

TEST_CASE("embedded compilers") {
  const ZeroSetCompiler z3 = embedded_compiler(3), z5 = embedded_compiler(5);
  CHECK(z3.theta[0] == 3);
  CHECK(z3.theta[5] == 1);
  CHECK(z3.theta[127] == 3);
  CHECK(z5.theta[0] == 4);
  CHECK(z5.theta[1] == 3);
  CHECK(z3.alpha[0] == 2);
  CHECK(z3.alpha[2] == 4);
  CHECK(std::vector<int>{z5.alpha[0], z5.alpha[2], z5.alpha[3], z5.alpha[4]} == std::vector<int>{1, 2, 5, 6});
  CHECK_THROWS_AS(embedded_compiler(7), Error);
  CHECK_THROWS_AS(boundary_schedule(7), Error);
}

TEST_CASE("MC7 holds and detects corruption") {
  for (Residue m : {3u, 5u}) {
    const Mc7Report r = mc7_check(m);
    CHECK(r.latin);
    CHECK(r.exact_cover);
    CHECK(r.six_zero_masks_absent);
    CHECK(r.states == oracle::ipow(m, 6));
  }
  ZeroSetCompiler z = embedded_compiler(3);
  z.theta[0] = static_cast<std::int8_t>((z.theta[0] + 1) % 7);
  CHECK_FALSE(mc7_check(z).ok());
}

TEST_CASE("selector layer is cyclically equivariant") {
  for (Residue m : {3u, 5u}) {
    const Schedule s = boundary_schedule(m);
    const Params p{7, m};
    Residue w[7], rot[7];
    for (Index i = 0; i < root_state_count(p); ++i) {
      root_state_from_index(i, p, w);
      for (int c = 0; c < 7; ++c) {
        for (int j = 0; j < 7; ++j) rot[j] = w[(j + c) % 7];
        REQUIRE(layer_direction(s, 1, w, c) == (layer_direction(s, 1, rot, 0) + c) % 7);
      }
    }
  }
}

TEST_CASE("boundary schedules pass RF with returns of length m^6") {
  for (Residue m : {3u, 5u}) {
    const RfReport rf = verify_rf(boundary_schedule(m));
    CHECK(rf.passed());
    for (const auto& cyc : rf.return_cycles) CHECK(cyc == std::vector<Index>{oracle::ipow(m, 6)});
  }
}

TEST_CASE("rank certificates") {
  for (Residue m : {3u, 5u}) {
    const Schedule s = boundary_schedule(m);
    const RankCertificate cert = generate_rank(s);
    CHECK(cert.value_count() == 7 * oracle::ipow(m, 6));
    const Index n = oracle::ipow(m, 6);
    for (int c = 0; c < 7; ++c) {
      CHECK(cert.ranks[c][0] == 0);
      // Independent check: rank(R_c(w)) = rank(w) + 1 along the return map.
      const auto R = return_map(s, c);
      for (Index w = 0; w < n; ++w) REQUIRE(cert.ranks[c][R[w]] == (cert.ranks[c][w] + 1) % n);
    }
    const RankReport rep = verify_rank(cert, s);
    CHECK(rep.ok());
    CHECK(rep.target == n);
  }
  CHECK(generate_rank(boundary_schedule(3)).value_count() == 5103);
  CHECK(generate_rank(boundary_schedule(5)).value_count() == 109375);
}

TEST_CASE("tampered rank certificates fail") {
  const Schedule s = boundary_schedule(3);
  RankCertificate cert = generate_rank(s);
  std::swap(cert.ranks[2][10], cert.ranks[2][20]);
  const RankReport rep = verify_rank(cert, s);
  CHECK_FALSE(rep.ok());
  CHECK(rep.colors[2].permutation);
  CHECK_FALSE(rep.colors[2].increment);
  CHECK(rep.colors[0].increment);
  cert = generate_rank(s);
  cert.ranks[4][7] = cert.ranks[4][8];
  CHECK_FALSE(verify_rank(cert, s).colors[4].permutation);
}
