#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hamdec/decomposition.hpp"

namespace hamdec {

enum class VerifyMode { exhaustive, structural, automatic };

const char* mode_name(VerifyMode mode);
VerifyMode parse_mode(const std::string& name);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationReport {
  Params params;
  VerifyMode mode = VerifyMode::exhaustive;
  std::string recipe_kind;
  bool arc_partition = false;
  // Exhaustive: first-return length of each colour walk from the origin.
  std::vector<Index> cycle_lengths;
  std::vector<CheckResult> checks;
  std::vector<VerificationReport> children;
  bool resource_limited = false;
  bool passed = false;
  std::vector<std::string> notes;
};

struct ArcPartitionResult {
  bool ok = false;
  Index bad_vertex = 0;
  std::string detail;
};

// At every vertex the d colours use d distinct directions.
ArcPartitionResult verify_arc_partition(const Decomposition& dec, std::uint64_t budget = default_budget(),
                                        unsigned jobs = 1);

struct HamiltonResult {
  Index length = 0;   // steps until the walk first revisits a vertex
  Index visited = 0;  // distinct vertices seen
  bool hamilton = false;
};

HamiltonResult verify_hamilton(const Decomposition& dec, int color, std::uint64_t budget = default_budget());

// Arc partition and all d colour walks over a direction table; oracle only.
VerificationReport verify_exhaustive(const Decomposition& dec, std::uint64_t budget = default_budget(),
                                     unsigned jobs = 1);
// Dispatches on the recipe kind.
VerificationReport verify_structural(const Decomposition& dec, std::uint64_t budget = default_budget(),
                                     unsigned jobs = 1);
// automatic = exhaustive when d * m^d fits the budget, else structural.
VerificationReport verify(const Decomposition& dec, VerifyMode mode = VerifyMode::automatic,
                          std::uint64_t budget = default_budget(), unsigned jobs = 1);

struct OrbitResult {
  bool single = false;
  Index length = 0;
};

// Orbit of 0 under f on {0..n-1}; single iff it returns to 0 after exactly n steps.
OrbitResult orbit_single_cycle(Index n, const std::function<Index(Index)>& f,
                               std::uint64_t budget = default_budget());

// pos[v] = steps from the origin to v along colour `color`; certificate-failure if not Hamilton.
std::vector<std::uint32_t> cycle_positions(const Decomposition& dec, int color,
                                           std::uint64_t budget = default_budget());

// Direction table dir[v * d + c] over all vertices.
std::vector<Direction> direction_table(const Decomposition& dec, std::uint64_t budget = default_budget());

}  // namespace hamdec
