#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hamdec/decomposition.hpp"
#include "hamdec/prefix.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

// Phase partition of Z_m into consecutive blocks of sizes alpha_i starting at 0.
struct PhaseRule {
  Index n = 0;
  Residue m = 0;
  std::vector<Residue> alpha;
  std::vector<std::uint8_t> block;  // block[s] = factor horizontal at phase s

  // One step of factor i on Z_n x Z_m.
  std::pair<Index, Residue> step(int i, Index x, Residue y) const;
};

PhaseRule cylinder_split(Index n, Residue m, int k, const std::vector<Residue>& alpha);

// Base multigraph on X = (Z/m)^b x Z/m in generator coordinates (u, v);
// x = index(u) + m^b v. Group j is cut from base factor j.
struct BaseMulti {
  int b = 0, d = 0, T = 0;
  Residue m = 0;
  Index base_states = 0;  // m^b
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of;
  std::vector<Residue> alpha;               // per colour
  std::vector<std::vector<int>> phase_color;  // [j][s] = horizontal colour of group j at phase s
  std::vector<Direction> base_dir;          // [u * b + j]
  std::vector<std::uint32_t> pos;           // [j * m^b + u]

  Index vertices() const { return base_states * m; }
  // Horizontal colour of group j at x.
  int horizontal(int j, Index x) const;
  // T active colours at x, ascending.
  void active_colors(Index x, int* out) const;
  bool is_active(Index x, int color) const;
};

// Refuses (certificate-failure) unless every base colour is Hamilton and the base is Latin.
BaseMulti base_cylinder(const Decomposition& base, int d, const std::vector<int>& composition,
                        const std::vector<std::vector<Residue>>& partitions);

struct TradeSite {
  Index x = 0;
  int color = 0;    // c, or beta_i on an auxiliary pair
  int partner = 0;  // auxiliary colour swapped against
  std::uint8_t tau = 1;
};

struct TradePlan {
  std::array<int, 3> aux{};
  Index L0 = 0;
  std::vector<TradeSite> nonaux, pair01, pair02;
  bool used_matching = false;
};

// (MT): T > b and m^b > m d T.
bool modular_trade_hypothesis(int d, int b, Residue m);
TradePlan choose_trade_vertices(const BaseMulti& bm);

struct ResidueMatrix {
  Residue m = 0;
  std::vector<std::vector<Residue>> rho;  // colours x label codes
};

ResidueMatrix universal_residue(int d, int T, Residue m);
// u = (1, 1, m-2, 1, m-1, 1, m-1, ...)
std::vector<Residue> universal_units(int d, Residue m);

struct ActiveAssignment {
  int T = 0;
  std::vector<std::uint8_t> labels;                // [x * T + k], k-th active colour ascending
  std::vector<std::vector<std::int64_t>> counts;  // colours x label codes
  Index swaps = 0;
};

// Baseline at x: the k-th active colour ascending takes label code k.
ActiveAssignment baseline_assignment(const BaseMulti& bm, const TradePlan& plan);
ActiveAssignment realize_residues(const BaseMulti& bm, const TradePlan& plan, const ResidueMatrix& rho);

struct LiftCertificate {
  BaseMulti bm;
  TradePlan plan;
  ResidueMatrix rho;
  ActiveAssignment assignment;
};

// Bases above this many (vertex, colour) pairs are refused with resource-limit.
constexpr Index kLiftCap = 1'000'000'000ULL;

// check_counts = false skips the tail-count gate, leaving detection to the verifier.
Decomposition lift_decomposition(LiftCertificate cert, Decomposition base, const std::string& kind = "successor-lift",
                                 bool check_counts = true);

// base_cylinder + universal residue + trades + lift.
Decomposition modular_trade_lift(Decomposition base, int d, const std::vector<int>& composition,
                                 const std::vector<std::vector<Residue>>& partitions,
                                 const std::string& kind = "successor-lift");

// Checks read from the lifted oracle; resource-limit when the base sweep exceeds budget.
std::vector<CheckResult> lift_structural_checks(const Decomposition& dec, std::uint64_t budget = default_budget());

}  // namespace hamdec
