#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamdec/core.hpp"
#include "hamdec/decomposition.hpp"
#include "hamdec/prefix.hpp"

namespace hamdec {

struct TranslationRule {
  std::vector<Direction> dir_of_color;
};

// direction(w, c) = c + selector[mask(Z(w) - c)] when equivariant,
// otherwise c + per_color[c][mask(Z(w))]. Entries of -1 are undefined.
struct ZeroSetSelectorRule {
  std::vector<std::int8_t> selector;
  bool equivariant = true;
  std::vector<std::vector<std::int8_t>> per_color;
};

// Threshold is the layer index.
struct PrefixLabelRule {
  std::vector<Label> assignment;
};

// dir[state * d + color] over root-flat states; -1 marks a missing entry.
struct TableRule {
  std::vector<std::int8_t> dir;
};

using LayerRule = std::variant<TranslationRule, ZeroSetSelectorRule, PrefixLabelRule, TableRule>;

struct Schedule {
  Params params;
  std::vector<LayerRule> layers;
};

// Root-flat states are indexed by w_0 .. w_{d-2} (mixed radix); w_{d-1} = -sum.
Index root_state_count(const Params& p);
Index root_state_index(const Residue* w, const Params& p);
void root_state_from_index(Index idx, const Params& p, Residue* w);

// mask = sum of 2^i over zero coordinates.
std::uint32_t zero_mask(const Residue* w, int d);
// Z - c as a mask.
inline std::uint32_t shift_mask(std::uint32_t mask, int c, int d) {
  if (c == 0) return mask;
  const std::uint32_t full = (d >= 32) ? 0xffffffffu : ((1u << d) - 1u);
  return ((mask >> c) | (mask << (d - c))) & full;
}

// Directions of every color at root state w in layer t.
void layer_directions(const Schedule& s, Residue t, const Residue* w, Direction* out);
Direction layer_direction(const Schedule& s, Residue t, const Residue* w, int color);

Direction schedule_direction(const Schedule& s, std::span<const Residue> x, int color);

// Structural sanity: m layers, rule shapes match d and m.
void validate_schedule(const Schedule& s);

Decomposition expand(const Schedule& s, Recipe recipe = {});

enum class RfMode { rf1, rf2, rf3, all };

struct RfReport {
  Params params;
  bool ran_rf1 = false, ran_rf2 = false, ran_rf3 = false;
  bool rf1 = false, rf2 = false, rf3 = false;
  bool resource_limited = false;
  // Per color, the cycle lengths of the return map (one entry when single).
  std::vector<std::vector<Index>> return_cycles;
  std::vector<std::string> failures;

  bool passed() const;
};

RfReport verify_rf(const Schedule& s, RfMode mode = RfMode::all, std::uint64_t budget = default_budget(),
                   unsigned jobs = 1);

// Exact RF check for schedules whose translation layers shift colours cyclically
// around one equivariant zero-set layer: only colour 0 is walked, the rest follow by
// rotation. Returns nullopt when the schedule lacks that shape.
std::optional<RfReport> verify_rf_symmetric(const Schedule& s, std::uint64_t budget = default_budget());

// Applies P_{t,c}: w <- w + q_{d_t(w,c)}.
void root_step(const Schedule& s, Residue t, Residue* w, int color);
// Return map R_c as a table over root-state indices.
std::vector<std::uint32_t> return_map(const Schedule& s, int color, std::uint64_t budget = default_budget());

}  // namespace hamdec
