#include "hamdec/synthesis.hpp"

#include "hamdec/countmatrix.hpp"
#include "hamdec/d7boundary.hpp"
#include "hamdec/lift.hpp"
#include "hamdec/rootflat.hpp"
#include "hamdec/smalldims.hpp"

namespace hamdec {

const char* strategy_name(Strategy s) { return s == Strategy::standard ? "standard" : "dyadic-triadic"; }

Strategy parse_strategy(const std::string& name) {
  if (name == "standard") return Strategy::standard;
  if (name == "dyadic-triadic") return Strategy::dyadic_triadic;
  fail(ErrorKind::InvalidInput, "unknown strategy '" + name + "'");
}

nlohmann::ordered_json RecipePlan::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["d"] = params.d;
  j["m"] = params.m;
  if (a) j["a"] = a;
  if (b) j["b"] = b;
  if (!children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : children) j["children"].push_back(c.to_json());
  }
  return j;
}

namespace {

Residue power_modulus(Residue m, int a) {
  const Index q = checked_pow(m, a);
  if (q > UINT32_MAX) fail(ErrorKind::ResourceLimit, "intermediate modulus " + std::to_string(m) + "^" + std::to_string(a) + " leaves 32 bits");
  return static_cast<Residue>(q);
}

}  // namespace

RecipePlan plan(int d, Residue m, Strategy strategy) {
  const Params p{d, m};
  validate_params(p);
  if (d >= 3) require_odd_modulus(p, "synthesis");
  RecipePlan node;
  node.params = p;
  switch (d) {
    case 2: node.kind = "d2-phase"; return node;
    case 3: node.kind = "d3-table"; return node;
    case 5: node.kind = "d5-schedule"; return node;
    case 7: node.kind = m < 7 ? "d7-boundary" : "count-matrix"; return node;
    case 9:
      node.kind = "composite-lift";
      node.a = 3;
      node.b = 3;
      node.children = {plan(3, m, strategy), plan(3, power_modulus(m, 3), strategy)};
      return node;
    default: break;
  }
  if (d % 2 == 0) {
    node.kind = "composite-lift";
    node.a = 2;
    node.b = d / 2;
    node.children = {plan(2, m, strategy), plan(d / 2, power_modulus(m, 2), strategy)};
    return node;
  }
  if (m >= static_cast<Residue>(d)) {
    node.kind = "count-matrix";
    return node;
  }
  if (strategy == Strategy::dyadic_triadic && d >= 29) {
    node.kind = "dyadic-triadic-lift";
    node.b = dyadic_triadic_base(d);
  } else {
    node.kind = "successor-lift";
    node.b = (d - 1) / 2;
  }
  node.children = {plan(node.b, m, strategy)};
  return node;
}

namespace {

struct CompositeData {
  int a = 0, b = 0;
  Residue m = 0;
  Index na = 0;                      // m^a
  std::vector<std::uint32_t> posA;   // [i * na + w]
  std::vector<Direction> dirA;       // [w * a + i]
  std::shared_ptr<const Oracle> oracleB;
};

class CompositeOracle final : public Oracle {
 public:
  explicit CompositeOracle(std::shared_ptr<const CompositeData> c) : c_(std::move(c)) {}
  void directions_at(const Residue* x, Direction* out) const override {
    const CompositeData& c = *c_;
    const int a = c.a, b = c.b;
    Index blk[256];
    for (int j = 0; j < b; ++j) {
      Index w = 0;
      for (int l = a - 1; l >= 0; --l) w = w * c.m + x[j * a + l];
      blk[j] = w;
    }
    Residue y[256];
    Direction db[256];
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) y[j] = c.posA[i * c.na + blk[j]];
      c.oracleB->directions_at(y, db);
      for (int f = 0; f < b; ++f) {
        const int j = db[f];
        out[i * b + f] = static_cast<Direction>(j * a + c.dirA[blk[j] * a + i]);
      }
    }
  }
  int dimension() const override { return c_->a * c_->b; }

 private:
  std::shared_ptr<const CompositeData> c_;
};

std::vector<std::vector<Residue>> unit_partitions(int triples, int b, Residue m) {
  std::vector<std::vector<Residue>> parts;
  for (int j = 0; j < b; ++j) {
    if (j < triples) parts.push_back({1, 1, m - 2});
    else parts.push_back({1, m - 1});
  }
  return parts;
}

Decomposition grouped_lift(int d, int b, Residue m, Decomposition base, const std::string& kind) {
  if (base.params != Params{b, m}) fail(ErrorKind::InvalidInput, "lift base has the wrong parameters");
  if (m % 2 == 0 || m < 3) fail(ErrorKind::InvalidParameters, "lifts need odd m >= 3");
  const int triples = d - 2 * b;
  if (triples < 1 || triples > b) fail(ErrorKind::InvalidParameters, "need b < d/2 and d - 2b <= b");
  if (!modular_trade_hypothesis(d, b, m))
    fail(ErrorKind::UnsupportedParameters, "modular-trade hypothesis fails at d=" + std::to_string(d) + ", b=" +
                                               std::to_string(b) + ", m=" + std::to_string(m));
  std::vector<int> comp(b, 2);
  for (int j = 0; j < triples; ++j) comp[j] = 3;
  return modular_trade_lift(std::move(base), d, comp, unit_partitions(triples, b, m), kind);
}

void check_child(const Decomposition& dec, const SynthesisOptions& opt) {
  if (!opt.verify_children) return;
  const VerificationReport r = verify(dec, VerifyMode::automatic, opt.budget, opt.jobs);
  if (!r.passed && !r.resource_limited)
    fail(ErrorKind::CertificateFailure, "intermediate " + dec.recipe.kind + " at " + to_string(dec.params) + " failed verification");
}

}  // namespace

Decomposition composite_lift(Decomposition decA, Decomposition decB) {
  const int a = decA.params.d, b = decB.params.d;
  const Residue m = decA.params.m;
  if (a * b > 255) fail(ErrorKind::UnsupportedParameters, "directions are stored in one byte; d <= 255");
  if (decB.params.m != power_modulus(m, a)) fail(ErrorKind::InvalidInput, "second factor must live over Z/m^a");
  auto data = std::make_shared<CompositeData>();
  data->a = a;
  data->b = b;
  data->m = m;
  data->na = checked_pow(m, a);
  data->dirA.resize(data->na * a);
  Vec w(a, 0);
  for (Index idx = 0; idx < data->na; ++idx) {
    decA.oracle->directions_at(w.data(), data->dirA.data() + idx * a);
    for (int l = 0; l < a; ++l) {
      if (++w[l] < m) break;
      w[l] = 0;
    }
  }
  data->posA.resize(data->na * a);
  for (int i = 0; i < a; ++i) {
    const std::vector<std::uint32_t> pos = cycle_positions(decA, i, UINT64_MAX);
    std::copy(pos.begin(), pos.end(), data->posA.begin() + i * data->na);
  }
  data->oracleB = decB.oracle;

  Decomposition dec;
  dec.params = {a * b, m};
  dec.oracle = std::make_shared<CompositeOracle>(data);
  dec.recipe.kind = "composite-lift";
  dec.recipe.params = dec.params;
  dec.recipe.detail["a"] = a;
  dec.recipe.detail["b"] = b;
  dec.recipe.children = {decA.recipe, decB.recipe};
  dec.children = {std::move(decA), std::move(decB)};
  return dec;
}

Decomposition successor_lift(int b, Residue m, Decomposition base) {
  if (b < 5) fail(ErrorKind::InvalidParameters, "successor lift needs b >= 5");
  const int d = 2 * b + 1;
  if (m >= static_cast<Residue>(d)) fail(ErrorKind::InvalidParameters, "successor lift is for m < 2b + 1");
  return grouped_lift(d, b, m, std::move(base), "successor-lift");
}

int dyadic_triadic_base(int d) {
  if (d < 5 || d % 2 == 0) fail(ErrorKind::InvalidParameters, "dyadic-triadic base needs odd d >= 5");
  int best = 0;
  for (long p2 = 1; 2 * p2 < d; p2 *= 2)
    for (long v = p2; 2 * v < d; v *= 3) best = std::max(best, static_cast<int>(v));
  if (3 * best <= d) fail(ErrorKind::InternalError, "no 2^a 3^c in (d/3, d/2)");
  return best;
}

Decomposition dyadic_triadic_lift(int d, Residue m, Decomposition base) {
  return grouped_lift(d, dyadic_triadic_base(d), m, std::move(base), "dyadic-triadic-lift");
}

Decomposition execute(const RecipePlan& p, const SynthesisOptions& opt) {
  const Residue m = p.params.m;
  if (p.kind == "d2-phase") return construct_d2(m);
  if (p.kind == "d3-table") return construct_d3(m);
  if (p.kind == "d5-schedule") return construct_d5(m);
  if (p.kind == "d7-boundary") {
    Recipe r;
    r.kind = "d7-boundary";
    return expand(boundary_schedule(m), r);
  }
  if (p.kind == "count-matrix") {
    const CountMatrix N = p.params.d == 7 ? d7_matrix(m) : high_modulus_matrix(p.params.d, m);
    Recipe r;
    r.kind = "count-matrix";
    r.detail["family"] = p.params.d == 7 ? "d7" : "high-modulus";
    return expand(schedule_from_matrix(N), r);
  }
  std::vector<Decomposition> kids;
  for (const RecipePlan& c : p.children) {
    kids.push_back(execute(c, opt));
    check_child(kids.back(), opt);
  }
  if (p.kind == "composite-lift") return composite_lift(std::move(kids.at(0)), std::move(kids.at(1)));
  if (p.kind == "successor-lift") return successor_lift(p.b, m, std::move(kids.at(0)));
  if (p.kind == "dyadic-triadic-lift") return dyadic_triadic_lift(p.params.d, m, std::move(kids.at(0)));
  fail(ErrorKind::MalformedInput, "unknown plan node '" + p.kind + "'");
}

Decomposition synthesize(int d, Residue m, const SynthesisOptions& opt) { return execute(plan(d, m, opt.strategy), opt); }

}  // namespace hamdec
