#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "hamdec/decomposition.hpp"
#include "hamdec/rootflat.hpp"

namespace hamdec {

// ---- d = 2: phase rule on s = x + y ----

Decomposition construct_d2(Residue m);
// Color 0 moves along e_0 unless s = m-1; color 1 is complementary.
inline Direction d2_direction(Residue x, Residue y, int color, Residue m) {
  const Residue s = add_mod(x, y, m);
  const int first = (s == m - 1) ? 1 : 0;
  return static_cast<Direction>(color == 0 ? first : 1 - first);
}

// ---- d = 3: piecewise table over S(x) and K(x) = x_2 ----

std::array<Direction, 3> d3_directions(std::span<const Residue> x, Residue m);
Direction d3_direction(std::span<const Residue> x, int color, Residue m);

using Pair = std::pair<Residue, Residue>;

// Closed-form m-step return of color c on layer 0, parametrised by (i, k).
Pair d3_return(int color, Residue i, Residue k, Residue m);
// Simulated return through d3_direction.
Pair d3_simulated_return(int color, Residue i, Residue k, Residue m);
Pair d3_odometer(Pair ab, Residue m);
Pair d3_conjugacy(int color, Pair ik, Residue m);

Decomposition construct_d3(Residue m);
// Same coloring, phrased as a two-table-layer schedule.
Schedule d3_schedule(Residue m);

// ---- d = 5 ----

// Lambda1(U) as a permutation row, for any U except the four-element sets.
std::array<int, 5> d5_lambda1(std::uint32_t u_mask);
// p(Z) = Lambda1(Z - 1)(0); invalid-input for infeasible Z.
int d5_selector(std::uint32_t z_mask);
// p(Z) read from the stored table directly.
int d5_selector_from_table(std::uint32_t z_mask);
// Selector table over all 32 masks via the Lambda1 path (-1 where undefined).
std::vector<std::int8_t> d5_selector_masks();

Schedule d5_schedule(Residue m);
Decomposition construct_d5(Residue m);

// Exact-cover condition: every y in A_m has exactly one i with p(Z(y - q_i)) = i.
bool d5_exact_cover_check(Residue m, const std::vector<std::int8_t>& selector,
                          std::uint64_t budget = default_budget());
bool d5_exact_cover_check(Residue m);

using W5 = std::array<Residue, 5>;
// G(w) = w + (-3,0,0,1,1) + e_{p(Z(w))}
W5 d5_normalized_return(const W5& w, Residue m);

struct FirstReturn {
  Residue a = 0, b = 0;
  Index length = 0;
};

// Section points w(a,b) = (0, a, b, 0, -a-b) with a + b != 0.
inline W5 d5_section_point(Residue a, Residue b, Residue m) {
  return {0, a, b, 0, neg_mod(add_mod(a, b, m), m)};
}
bool d5_in_section(const W5& w, Residue m);
FirstReturn d5_first_return(Residue a, Residue b, Residue m);
FirstReturn d5_simulated_first_return(Residue a, Residue b, Residue m);
// Boundary block map on (x, z).
Pair d5_theta(Residue x, Residue z, Residue m);

}  // namespace hamdec
