#include "doctest.h"
#include "hamdec/golden.hpp"
#include "hamdec/smalldims.hpp"
#include "hamdec/verify.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

std::uint32_t mask_of(std::initializer_list<int> z) {
  std::uint32_t m = 0;
  for (int i : z) m |= 1u << i;
  return m;
}

}  // namespace

TEST_CASE("d=2 phase rule") {
  const Decomposition dec = construct_d2(3);
  CHECK(dec.direction(Vec{0, 0}, 0) == 0);
  CHECK(dec.direction(Vec{2, 0}, 0) == 1);
  for (Residue m = 2; m <= 11; ++m) CHECK(oracle::is_hamilton_decomposition(construct_d2(m)));
}

TEST_CASE("d=3 table rows") {
  CHECK(d3_directions(Vec{0, 0, 0}, 5) == std::array<Direction, 3>{0, 2, 1});
  CHECK(d3_directions(Vec{0, 0, 1}, 5) == std::array<Direction, 3>{2, 1, 0});
  CHECK(d3_directions(Vec{1, 1, 0}, 5) == std::array<Direction, 3>{0, 1, 2});
  CHECK_THROWS_AS(construct_d3(4), Error);
}

TEST_CASE("d=3 closed-form returns") {
  for (Residue m : {3u, 5u, 7u, 9u}) {
    CHECK(d3_return(0, 0, 0, m) == Pair{m - 1, 1});
    CHECK(d3_return(2, 0, 0, m) == Pair{0, m - 2});
    for (Residue i = 0; i < m; ++i) CHECK(d3_return(1, i, m - 1, m) == Pair{(i + 1) % m, 0});
  }
  for (Residue m = 3; m <= 21; m += 2)
    for (int c = 0; c < 3; ++c)
      for (Residue i = 0; i < m; ++i)
        for (Residue k = 0; k < m; ++k) REQUIRE(d3_simulated_return(c, i, k, m) == d3_return(c, i, k, m));
}

TEST_CASE("d=3 conjugacy to the odometer") {
  for (Residue m : {3u, 5u, 7u})
    for (int c = 0; c < 3; ++c)
      for (Residue i = 0; i < m; ++i)
        for (Residue k = 0; k < m; ++k)
          REQUIRE(d3_conjugacy(c, d3_return(c, i, k, m), m) == d3_odometer(d3_conjugacy(c, {i, k}, m), m));
  for (Residue m = 3; m <= 15; m += 2) {
    const auto r = orbit_single_cycle(Index{m} * m, [m](Index v) {
      const Pair q = d3_odometer({static_cast<Residue>(v / m), static_cast<Residue>(v % m)}, m);
      return Index{q.first} * m + q.second;
    });
    CHECK(r.single);
    CHECK(r.length == Index{m} * m);
  }
}

TEST_CASE("d=3 decompositions are Hamilton") {
  for (Residue m : {3u, 5u, 9u}) {
    const Decomposition dec = construct_d3(m);
    CHECK(oracle::latin_everywhere(dec));
    for (int c = 0; c < 3; ++c) CHECK(oracle::walk_length(dec, c) == oracle::ipow(m, 3));
  }
}

TEST_CASE("d=5 selector") {
  CHECK(d5_selector(0) == 0);
  CHECK(d5_selector(mask_of({3})) == 4);
  CHECK(d5_selector(mask_of({2, 4})) == 3);
  int feasible = 0;
  for (std::uint32_t z = 0; z < 32; ++z) {
    const int size = std::popcount(z);
    if (size == 4) {
      CHECK_THROWS_AS(d5_selector(z), Error);
      continue;
    }
    ++feasible;
    CHECK(d5_selector(z) == d5_selector_from_table(z));
  }
  CHECK(feasible == 27);
  CHECK(golden::d5_selector_table().size() == 27);
}

TEST_CASE("d=5 exact cover and layer bijectivity") {
  for (Residue m = 3; m <= 13; m += 2) CHECK(d5_exact_cover_check(m));
  auto sel = d5_selector_masks();
  std::swap(sel[mask_of({3})], sel[mask_of({2, 4})]);
  CHECK_FALSE(d5_exact_cover_check(5, sel));
  for (Residue m = 3; m <= 13; m += 2) CHECK(verify_rf(d5_schedule(m), RfMode::rf2).rf2);
}

TEST_CASE("d=5 decompositions are Hamilton") {
  for (Residue m : {3u, 5u}) {
    const Decomposition dec = construct_d5(m);
    CHECK(oracle::latin_everywhere(dec));
    for (int c = 0; c < 5; ++c) CHECK(oracle::walk_length(dec, c) == oracle::ipow(m, 5));
  }
}

TEST_CASE("d=5 normalised return at m=3 reproduces the 81-cycle") {
  CHECK(d5_normalized_return({0, 0, 0, 0, 0}, 3) == W5{1, 0, 0, 1, 1});
  W5 w{0, 0, 0, 0, 0};
  const auto& table = golden::d5_cycle81();
  for (int row = 0; row < 81; ++row) {
    for (int j = 0; j < 4; ++j) REQUIRE(static_cast<int>(w[j]) == table[row][j]);
    w = d5_normalized_return(w, 3);
  }
  CHECK(w == W5{0, 0, 0, 0, 0});
  for (Residue m : {3u, 5u, 7u}) {
    const auto r = orbit_single_cycle(oracle::ipow(m, 4), [m](Index v) {
      W5 x{};
      Residue sum = 0;
      for (int j = 0; j < 4; ++j) x[j] = static_cast<Residue>(v % m), v /= m, sum += x[j];
      x[4] = (m - sum % m) % m;
      const W5 y = d5_normalized_return(x, m);
      return Index{y[0]} + m * (Index{y[1]} + m * (Index{y[2]} + Index{m} * y[3]));
    });
    CHECK(r.single);
    CHECK(r.length == oracle::ipow(m, 4));
  }
}

TEST_CASE("d=5 first-return table") {
  const FirstReturn wrap = d5_first_return(1, 2, 5);
  CHECK(wrap.length == 40);
  CHECK(wrap.a == 3);
  CHECK(wrap.b == 3);
  const FirstReturn mid = d5_first_return(0, 2, 5);
  CHECK(mid.length == 30);
  CHECK(mid.a == 0);
  CHECK_THROWS_AS(d5_first_return(1, 4, 5), Error);
  CHECK_THROWS_AS(d5_first_return(2, 3, 5), Error);
  for (Residue m : {5u, 7u, 9u}) {
    Index total = 0;
    std::vector<char> hit(Index{m} * m, 0);
    for (Residue a = 0; a < m; ++a)
      for (Residue b = 0; b < m; ++b) {
        if ((a + b) % m == 0) continue;
        const FirstReturn f = d5_first_return(a, b, m), s = d5_simulated_first_return(a, b, m);
        REQUIRE(f.a == s.a);
        REQUIRE(f.b == s.b);
        REQUIRE(f.length == s.length);
        total += f.length;
        hit[Index{f.a} * m + f.b] = 1;
      }
    CHECK(total == oracle::ipow(m, 4));
    CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(m * (m - 1)));
    // The induced map is one cycle on the section.
    Residue a = 1, b = 0;
    Index steps = 0;
    do {
      const FirstReturn f = d5_first_return(a, b, m);
      a = f.a, b = f.b, ++steps;
    } while (!(a == 1 && b == 0));
    CHECK(steps == Index{m} * (m - 1));
  }
}

TEST_CASE("boundary block map") {
  const Residue m = 7;
  CHECK(d5_theta(3, m - 1, m) == Pair{2, 0});
  CHECK(d5_theta(0, 0, m) == Pair{m - 1, 0});
  CHECK(d5_theta(4, 2, m) == Pair{2, 3});
}
