#include "doctest.h"
#include "hamdec/core.hpp"
#include "oracles.hpp"

using namespace hamdec;

TEST_CASE("layer sums") {
  CHECK(layer_sum(Vec{1, 1, 1}, {3, 3}) == 0);
  CHECK(layer_sum(Vec{1, 0, 0, 1, 1}, {5, 3}) == 0);
  CHECK(layer_sum(Vec{2, 4}, {2, 5}) == 1);
  CHECK_THROWS_AS(layer_sum(Vec{1, 1}, {3, 3}), Error);
}

TEST_CASE("layer-prefix coordinates on hand examples") {
  CHECK(to_layer_prefix(Vec{0, 0, 0}, {3, 3}) == LayerPrefixPoint{0, {0, 0}});
  CHECK(to_layer_prefix(Vec{1, 0, 0}, {3, 3}) == LayerPrefixPoint{1, {2, 2}});
  CHECK(to_layer_prefix(Vec{1, 0, 0, 1, 1}, {5, 3}) == LayerPrefixPoint{0, {1, 2, 2, 2}});
  CHECK(from_layer_prefix({0, {0}}, {2, 3}) == Vec{0, 0});
  CHECK(from_layer_prefix({1, {2, 2}}, {3, 3}) == Vec{1, 0, 0});
  CHECK(apply_stop({0, {0, 0}}, 0, {3, 3}) == LayerPrefixPoint{1, {0, 0}});
  CHECK(apply_stop({0, {0, 0}}, 2, {3, 3}) == LayerPrefixPoint{1, {2, 2}});
  CHECK_THROWS_AS(apply_stop({0, {0, 0}}, 3, {3, 3}), Error);
}

TEST_CASE("layer-prefix round trip and torus steps, exhaustive") {
  for (Params p : {Params{2, 7}, Params{3, 5}, Params{4, 5}, Params{5, 3}, Params{6, 3}}) {
    const Index n = oracle::ipow(p.m, p.d);
    for (Index v = 0; v < n; ++v) {
      const Vec x = oracle::unindex(v, p.d, p.m);
      const LayerPrefixPoint q = to_layer_prefix(x, p);
      REQUIRE(from_layer_prefix(q, p) == x);
      // Independent formula: z_j = x_{d-j} + ... + x_{d-1} - t.
      Residue tail = 0;
      for (int j = 1; j < p.d; ++j) {
        tail = (tail + x[p.d - j]) % p.m;
        REQUIRE(q.prefix[j - 1] == (tail + p.m - q.layer) % p.m);
      }
      for (int i = 0; i < p.d; ++i) {
        Vec y = x;
        y[i] = (y[i] + 1) % p.m;
        REQUIRE(to_layer_prefix(y, p) == apply_stop(q, p.d - 1 - i, p));
        REQUIRE(direction_of_rank(p.d, p.d - 1 - i) == i);
        REQUIRE(layer_sum(y, p) == (layer_sum(x, p) + 1) % p.m);
      }
      Residue z[8];
      REQUIRE(prefix_of(x.data(), p.d, p.m, z) == q.layer);
      for (int j = 0; j + 1 < p.d; ++j) REQUIRE(z[j] == q.prefix[j]);
    }
  }
}

TEST_CASE("residue arithmetic") {
  auto g = oracle::rng(1);
  for (int it = 0; it < 2000; ++it) {
    const Residue m = 2 + static_cast<Residue>(g() % 1000);
    const Residue a = g() % m, b = g() % m;
    CHECK(add_mod(a, b, m) == (a + b) % m);
    CHECK(sub_mod(a, b, m) == (a + m - b) % m);
    CHECK(mul_mod(a, b, m) == static_cast<Residue>(std::uint64_t{a} * b % m));
    CHECK(add_mod(a, neg_mod(a, m), m) == 0);
    CHECK(reduce(-static_cast<std::int64_t>(a), m) == neg_mod(a, m));
    if (is_unit(a, m)) CHECK(mul_mod(a, inverse_mod(a, m), m) == 1 % m);
  }
  CHECK(gcd64(-12, 18) == 6);
  CHECK_THROWS_AS(checked_pow(3, 41), Error);
  CHECK(sat_mul(UINT64_MAX / 2, 3) == UINT64_MAX);
}

TEST_CASE("vertex indices are mixed-radix little-endian") {
  CHECK(vertex_index(Vec{1, 2, 0}, 3) == 7);
  CHECK(vertex_from_index(7, 3, 3) == Vec{1, 2, 0});
  for (Index v = 0; v < 625; ++v) CHECK(vertex_index(vertex_from_index(v, 4, 5), 5) == v);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_params({2, 2}));
  CHECK_THROWS_AS(validate_params({1, 3}), Error);
  CHECK_THROWS_AS(validate_params({3, 1}), Error);
  try {
    require_odd_modulus({3, 4}, "test");
    FAIL("even modulus accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedParameters);
  }
}

TEST_CASE("parallel_for covers the range once") {
  for (unsigned jobs : {1u, 2u, 3u, 8u}) {
    std::vector<int> hits(1000, 0);
    parallel_for(1000, jobs, [&](Index lo, Index hi) {
      for (Index i = lo; i < hi; ++i) ++hits[i];
    });
    for (int h : hits) CHECK(h == 1);
  }
}
