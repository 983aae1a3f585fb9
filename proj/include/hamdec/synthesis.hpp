#pragma once

#include <string>
#include <vector>

#include "hamdec/decomposition.hpp"
#include "hamdec/verify.hpp"

namespace hamdec {

enum class Strategy { standard, dyadic_triadic };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

// Node kinds: "d2-phase", "d3-table", "d5-schedule", "d7-boundary", "count-matrix",
// "composite-lift" (a, b), "successor-lift" (b), "dyadic-triadic-lift" (b).
struct RecipePlan {
  std::string kind;
  Params params;
  int a = 0, b = 0;
  std::vector<RecipePlan> children;

  nlohmann::ordered_json to_json() const;
};

RecipePlan plan(int d, Residue m, Strategy strategy = Strategy::standard);

// Colour i * b + f walks decB factor f over block positions along decA factor i.
Decomposition composite_lift(Decomposition decA, Decomposition decB);

// d = 2b + 1 from D_b(m): groups 3 + 2 + ... + 2, blocks (1, 1, m-2) and (1, m-1).
Decomposition successor_lift(int b, Residue m, Decomposition base);

// Largest 2^a 3^c below d/2; asserts it exceeds d/3.
int dyadic_triadic_base(int d);
// d - 2b triple groups then pairs, over a base of dimension dyadic_triadic_base(d).
Decomposition dyadic_triadic_lift(int d, Residue m, Decomposition base);

struct SynthesisOptions {
  Strategy strategy = Strategy::standard;
  std::uint64_t budget = default_budget();
  unsigned jobs = 1;
  bool verify_children = true;
};

Decomposition execute(const RecipePlan& p, const SynthesisOptions& opt = {});
Decomposition synthesize(int d, Residue m, const SynthesisOptions& opt = {});

}  // namespace hamdec
