#pragma once
// Brute-force reference computations shared by the unit tests. None of these
// call into the verifier; they walk the torus directly.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hamdec/core.hpp"
#include "hamdec/decomposition.hpp"

namespace oracle {

using hamdec::Decomposition;
using hamdec::Index;
using hamdec::Residue;

inline Index ipow(Index m, int e) {
  Index r = 1;
  while (e-- > 0) r *= m;
  return r;
}

inline std::vector<Residue> unindex(Index v, int d, Residue m) {
  std::vector<Residue> x(d);
  for (int j = 0; j < d; ++j) x[j] = static_cast<Residue>(v % m), v /= m;
  return x;
}

inline Index index(const std::vector<Residue>& x, Residue m) {
  Index v = 0;
  for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j) v = v * m + x[j];
  return v;
}

// Length of the colour-c walk from the origin until it first returns there;
// 0 if it revisits some other vertex first.
inline Index walk_length(const Decomposition& dec, int c) {
  const int d = dec.params.d;
  const Residue m = dec.params.m;
  const Index n = ipow(m, d);
  std::vector<char> seen(n, 0);
  std::vector<Residue> x(d, 0);
  Index len = 0;
  while (true) {
    Index v = index(x, m);
    if (seen[v]) return v == 0 ? len : 0;
    seen[v] = 1;
    const int dir = dec.direction(x, c);
    x[dir] = (x[dir] + 1) % m;
    ++len;
  }
}

// Every vertex sees d distinct directions.
inline bool latin_everywhere(const Decomposition& dec) {
  const int d = dec.params.d;
  const Residue m = dec.params.m;
  const Index n = ipow(m, d);
  for (Index v = 0; v < n; ++v) {
    const auto x = unindex(v, d, m);
    std::set<int> dirs;
    for (int c = 0; c < d; ++c) dirs.insert(dec.direction(x, c));
    if (static_cast<int>(dirs.size()) != d) return false;
  }
  return true;
}

inline bool is_hamilton_decomposition(const Decomposition& dec) {
  if (!latin_everywhere(dec)) return false;
  const Index n = ipow(dec.params.m, dec.params.d);
  for (int c = 0; c < dec.params.d; ++c)
    if (walk_length(dec, c) != n) return false;
  return true;
}

// Orbit of 0 under a table permutation: (single, length).
inline std::pair<bool, Index> orbit0(const std::vector<std::uint32_t>& f) {
  Index len = 0, v = 0;
  do {
    v = f[v];
    ++len;
  } while (v != 0 && len <= f.size());
  return {len == f.size(), len};
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x4a6d'ec00ULL ^ salt); }

}  // namespace oracle
