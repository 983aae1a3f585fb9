#pragma once

#include <cstdint>
#include <vector>

#include "hamdec/rootflat.hpp"

namespace hamdec {

struct ZeroSetCompiler {
  Residue m = 0;
  std::vector<std::int8_t> theta;  // 128 entries indexed by zero mask, -1 = undefined
  std::vector<int> alpha;          // m entries; alpha[1] is unused
};

// The stored compilers for m in {3, 5}.
ZeroSetCompiler embedded_compiler(Residue m);

// Layer 1 is c + theta(Z(w) - c); every other layer is c + alpha(t).
Schedule boundary_schedule(Residue m);
Schedule boundary_schedule(const ZeroSetCompiler& zc);

struct Mc7Report {
  bool latin = false;        // c -> c + theta(Z(w) - c) is a permutation for every w
  bool exact_cover = false;  // exactly one i with theta(Z(y - q_i)) = i for every y
  bool six_zero_masks_absent = false;
  Index states = 0;
  bool ok() const { return latin && exact_cover && six_zero_masks_absent; }
};

Mc7Report mc7_check(const ZeroSetCompiler& zc);
Mc7Report mc7_check(Residue m);

// ranks[c][state] with states in root-state index order (w_0..w_5 mixed radix).
struct RankCertificate {
  Residue m = 0;
  std::vector<std::vector<std::uint32_t>> ranks;

  Index value_count() const;
};

// Rank = position along the colour-c return orbit starting at the all-zero state.
RankCertificate generate_rank(const Schedule& s, std::uint64_t budget = default_budget());

struct RankColorCheck {
  bool permutation = false;
  bool increment = false;
};

struct RankReport {
  Index target = 0;  // m^6
  std::vector<RankColorCheck> colors;
  bool ok() const;
};

RankReport verify_rank(const RankCertificate& cert, const Schedule& s, std::uint64_t budget = default_budget());

}  // namespace hamdec
