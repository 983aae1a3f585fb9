#include "hamdec/lift.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "hamdec/matching.hpp"

namespace hamdec {

PhaseRule cylinder_split(Index n, Residue m, int k, const std::vector<Residue>& alpha) {
  if (k < 2 || static_cast<Index>(k) > m) fail(ErrorKind::InvalidParameters, "cylinder split needs 2 <= k <= m");
  if (alpha.size() != static_cast<std::size_t>(k)) fail(ErrorKind::InvalidParameters, "need one block size per factor");
  if (n == 0) fail(ErrorKind::InvalidParameters, "empty horizontal cycle");
  Index total = 0;
  for (Residue a : alpha) {
    if (a == 0 || a >= m || !is_unit(a, m))
      fail(ErrorKind::InvalidParameters, "block size " + std::to_string(a) + " is not a positive unit mod " + std::to_string(m));
    total += a;
  }
  if (total != m) fail(ErrorKind::InvalidParameters, "block sizes must sum to m");
  PhaseRule rule{n, m, alpha, {}};
  rule.block.reserve(m);
  for (int i = 0; i < k; ++i) rule.block.insert(rule.block.end(), alpha[i], static_cast<std::uint8_t>(i));
  return rule;
}

std::pair<Index, Residue> PhaseRule::step(int i, Index x, Residue y) const {
  const Residue s = add_mod(static_cast<Residue>(x % m), y, m);
  if (block[s] == i) return {(x + 1) % n, y};
  return {x, add_mod(y, 1, m)};
}

int BaseMulti::horizontal(int j, Index x) const {
  const Index u = x % base_states;
  const Residue v = static_cast<Residue>(x / base_states);
  const Residue s = add_mod(static_cast<Residue>(pos[j * base_states + u] % m), v, m);
  return phase_color[j][s];
}

void BaseMulti::active_colors(Index x, int* out) const {
  std::uint64_t horiz[4] = {0, 0, 0, 0};
  for (int j = 0; j < b; ++j) {
    const int c = horizontal(j, x);
    horiz[c >> 6] |= std::uint64_t{1} << (c & 63);
  }
  int k = 0;
  for (int c = 0; c < d; ++c)
    if (!(horiz[c >> 6] >> (c & 63) & 1)) out[k++] = c;
}

bool BaseMulti::is_active(Index x, int color) const { return horizontal(group_of[color], x) != color; }

BaseMulti base_cylinder(const Decomposition& base, int d, const std::vector<int>& composition,
                        const std::vector<std::vector<Residue>>& partitions) {
  const int b = base.params.d;
  const Residue m = base.params.m;
  if (d > 255) fail(ErrorKind::UnsupportedParameters, "directions are stored in one byte; d <= 255");
  if (static_cast<int>(composition.size()) != b || static_cast<int>(partitions.size()) != b)
    fail(ErrorKind::InvalidParameters, "composition must have one part per base factor");
  if (std::accumulate(composition.begin(), composition.end(), 0) != d)
    fail(ErrorKind::InvalidParameters, "composition must sum to d");

  BaseMulti bm;
  bm.b = b;
  bm.d = d;
  bm.T = d - b;
  bm.m = m;
  bm.base_states = checked_pow(m, b);
  if (sat_mul(bm.vertices(), d) > kLiftCap)
    fail(ErrorKind::ResourceLimit, "lift base has " + std::to_string(bm.vertices()) + " vertices; cap exceeded");
  const Index N = bm.base_states;

  bm.group_of.resize(d);
  bm.alpha.resize(d);
  int next = 0;
  for (int j = 0; j < b; ++j) {
    const PhaseRule rule = cylinder_split(N, m, composition[j], partitions[j]);
    std::vector<int> g;
    for (int i = 0; i < composition[j]; ++i) {
      g.push_back(next);
      bm.group_of[next] = j;
      bm.alpha[next] = partitions[j][i];
      ++next;
    }
    std::vector<int> pc(m);
    for (Residue s = 0; s < m; ++s) pc[s] = g[rule.block[s]];
    bm.phase_color.push_back(std::move(pc));
    bm.groups.push_back(std::move(g));
  }

  bm.base_dir.resize(static_cast<std::size_t>(N * b));
  Vec u(static_cast<std::size_t>(b), 0);
  for (Index idx = 0; idx < N; ++idx) {
    base.oracle->directions_at(u.data(), bm.base_dir.data() + idx * b);
    std::uint64_t used = 0;
    for (int j = 0; j < b; ++j) used |= std::uint64_t{1} << bm.base_dir[idx * b + j];
    if (std::popcount(used) != b || (used >> b) != 0)
      fail(ErrorKind::CertificateFailure, "base decomposition is not an arc partition at vertex " + std::to_string(idx));
    for (int j = 0; j < b; ++j) {
      if (++u[j] < m) break;
      u[j] = 0;
    }
  }

  std::vector<Index> pw(static_cast<std::size_t>(b));
  for (int j = 0; j < b; ++j) pw[j] = checked_pow(m, j);
  bm.pos.assign(static_cast<std::size_t>(N * b), UINT32_MAX);
  for (int j = 0; j < b; ++j) {
    std::uint32_t* pj = bm.pos.data() + j * N;
    std::fill(u.begin(), u.end(), 0);
    Index idx = 0;
    for (Index step = 0; step < N; ++step) {
      if (pj[idx] != UINT32_MAX) fail(ErrorKind::CertificateFailure, "base colour " + std::to_string(j) + " is not Hamilton");
      pj[idx] = static_cast<std::uint32_t>(step);
      const Direction dir = bm.base_dir[idx * b + j];
      if (++u[dir] == m) {
        u[dir] = 0;
        idx -= (m - 1) * pw[dir];
      } else {
        idx += pw[dir];
      }
    }
    if (idx != 0) fail(ErrorKind::CertificateFailure, "base colour " + std::to_string(j) + " does not close");
  }
  return bm;
}

bool modular_trade_hypothesis(int d, int b, Residue m) {
  const int T = d - b;
  if (T <= b) return false;
  return checked_pow(m, b) > static_cast<Index>(m) * d * T;
}

namespace {

// Fill the starved classes of one reservation phase by augmenting paths.
void matching_fallback(const BaseMulti& bm, std::vector<char>& used, const std::vector<int>& classes,
                       std::vector<Index>& quota, const std::function<bool(Index, int)>& admissible,
                       const std::function<void(Index, int)>& take) {
  Index tokens = 0;
  for (int cls = 0; cls < static_cast<int>(classes.size()); ++cls) tokens += quota[cls];
  // Each class keeps tokens + 1 candidates, enough for Hall on the restriction.
  std::vector<Index> right;
  std::vector<int> right_of(bm.vertices(), -1);
  std::vector<std::vector<int>> adj;
  std::vector<int> token_class;
  for (int cls = 0; cls < static_cast<int>(classes.size()); ++cls) {
    std::vector<int> cand;
    for (Index x = 0; x < bm.vertices() && cand.size() <= tokens; ++x) {
      if (used[x] || !admissible(x, classes[cls])) continue;
      if (right_of[x] < 0) {
        right_of[x] = static_cast<int>(right.size());
        right.push_back(x);
      }
      cand.push_back(right_of[x]);
    }
    for (Index t = 0; t < quota[cls]; ++t) {
      adj.push_back(cand);
      token_class.push_back(cls);
    }
  }
  const std::vector<int> match = max_matching(static_cast<int>(adj.size()), static_cast<int>(right.size()), adj);
  for (std::size_t t = 0; t < match.size(); ++t) {
    if (match[t] < 0) fail(ErrorKind::InternalError, "trade-vertex matching is not saturating");
    const Index x = right[match[t]];
    used[x] = 1;
    take(x, classes[token_class[t]]);
    --quota[token_class[t]];
  }
}

}  // namespace

TradePlan choose_trade_vertices(const BaseMulti& bm) {
  if (!modular_trade_hypothesis(bm.d, bm.b, bm.m))
    fail(ErrorKind::UnsupportedParameters, "modular-trade hypothesis fails: need T > b and m^b > m d T");
  TradePlan plan;
  auto big = std::find_if(bm.groups.begin(), bm.groups.end(), [](const auto& g) { return g.size() >= 3; });
  if (big == bm.groups.end()) fail(ErrorKind::UnsupportedParameters, "no cylinder group of size three");
  plan.aux = {(*big)[0], (*big)[1], (*big)[2]};
  const Residue m = bm.m;
  const int T = bm.T;
  plan.L0 = static_cast<Index>(m - 1) * (T - 1);
  auto is_aux = [&](int c) { return c == plan.aux[0] || c == plan.aux[1] || c == plan.aux[2]; };
  auto tau_of = [&](Index k) { return static_cast<std::uint8_t>(1 + k / (m - 1)); };

  std::vector<char> used(bm.vertices(), 0);
  std::vector<int> nonaux;
  for (int c = 0; c < bm.d; ++c)
    if (!is_aux(c)) nonaux.push_back(c);
  std::vector<Index> quota(nonaux.size(), plan.L0);
  std::vector<Index> taken(bm.d, 0);
  std::vector<int> act(bm.T);

  auto lowest_aux = [&](Index x) {
    for (int a : {plan.aux[0], plan.aux[1], plan.aux[2]})
      if (bm.is_active(x, a)) return a;
    return -1;
  };

  Index remaining = plan.L0 * nonaux.size();
  for (Index x = 0; x < bm.vertices() && remaining > 0; ++x) {
    const int partner = lowest_aux(x);
    if (partner < 0) continue;
    bm.active_colors(x, act.data());
    int best = -1;
    for (int c : act) {
      if (is_aux(c)) continue;
      const int i = static_cast<int>(std::lower_bound(nonaux.begin(), nonaux.end(), c) - nonaux.begin());
      if (quota[i] > 0 && (best < 0 || quota[i] > quota[best])) best = i;
    }
    if (best < 0) continue;
    const int c = nonaux[best];
    plan.nonaux.push_back({x, c, partner, tau_of(taken[c]++)});
    used[x] = 1;
    --quota[best];
    --remaining;
  }
  if (remaining > 0) {
    plan.used_matching = true;
    matching_fallback(
        bm, used, nonaux, quota, [&](Index x, int c) { return bm.is_active(x, c) && lowest_aux(x) >= 0; },
        [&](Index x, int c) { plan.nonaux.push_back({x, c, lowest_aux(x), tau_of(taken[c]++)}); });
  }

  for (int i = 1; i <= 2; ++i) {
    const int bi = plan.aux[i];
    auto& sites = i == 1 ? plan.pair01 : plan.pair02;
    auto ok = [&](Index x, int) { return bm.is_active(x, plan.aux[0]) && bm.is_active(x, bi); };
    for (Index x = 0; x < bm.vertices() && sites.size() < plan.L0; ++x) {
      if (used[x] || !ok(x, bi)) continue;
      used[x] = 1;
      sites.push_back({x, bi, plan.aux[0], tau_of(sites.size())});
    }
    if (sites.size() < plan.L0) {
      plan.used_matching = true;
      std::vector<Index> q = {plan.L0 - sites.size()};
      matching_fallback(bm, used, {bi}, q, ok,
                        [&](Index x, int) { sites.push_back({x, bi, plan.aux[0], tau_of(sites.size())}); });
    }
  }
  return plan;
}

std::vector<Residue> universal_units(int d, Residue m) {
  if (d < 3 || d % 2 == 0) fail(ErrorKind::InvalidParameters, "universal residue needs odd d >= 3");
  std::vector<Residue> u = {1 % m, 1 % m, reduce(-2, m)};
  for (int c = 3; c < d; ++c) u.push_back((c - 3) % 2 == 0 ? 1 % m : m - 1);
  return u;
}

ResidueMatrix universal_residue(int d, int T, Residue m) {
  if (T < 2) fail(ErrorKind::InvalidParameters, "tail dimension must be at least 2");
  const std::vector<Residue> u = universal_units(d, m);
  ResidueMatrix r{m, std::vector<std::vector<Residue>>(d, std::vector<Residue>(T, 0))};
  for (int c = 0; c < d; ++c) {
    r.rho[c][0] = u[c];
    r.rho[c][1] = neg_mod(u[c], m);
  }
  return r;
}

namespace {

void collect_sites(const TradePlan& plan, std::vector<const TradeSite*>& site_at, Index n) {
  site_at.assign(n, nullptr);
  for (const auto* list : {&plan.nonaux, &plan.pair01, &plan.pair02})
    for (const TradeSite& s : *list) {
      if (site_at[s.x]) fail(ErrorKind::InternalError, "trade vertices are not distinct");
      site_at[s.x] = &s;
    }
}

int slot_of(const BaseMulti& bm, Index x, int color, std::vector<int>& act) {
  bm.active_colors(x, act.data());
  auto it = std::find(act.begin(), act.end(), color);
  if (it == act.end()) fail(ErrorKind::InternalError, "trade colour is not active at its site");
  return static_cast<int>(it - act.begin());
}

// Swap labels 0 and tau between site.color and site.partner.
void swap_site(const BaseMulti& bm, const TradeSite& s, ActiveAssignment& a, std::vector<int>& act) {
  const int T = bm.T;
  const int ic = slot_of(bm, s.x, s.color, act);
  const int ip = slot_of(bm, s.x, s.partner, act);
  std::uint8_t* lab = a.labels.data() + s.x * T;
  if (lab[ic] != 0 || lab[ip] != s.tau) fail(ErrorKind::InternalError, "trade site lost its pinned labels");
  std::swap(lab[ic], lab[ip]);
  ++a.counts[s.color][s.tau];
  --a.counts[s.color][0];
  ++a.counts[s.partner][0];
  --a.counts[s.partner][s.tau];
  ++a.swaps;
}

}  // namespace

ActiveAssignment baseline_assignment(const BaseMulti& bm, const TradePlan& plan) {
  const int T = bm.T;
  ActiveAssignment a;
  a.T = T;
  a.labels.resize(static_cast<std::size_t>(bm.vertices() * T));
  a.counts.assign(bm.d, std::vector<std::int64_t>(T, 0));
  std::vector<const TradeSite*> site_at;
  collect_sites(plan, site_at, bm.vertices());
  std::vector<int> act(T);
  std::vector<char> taken(T);
  for (Index x = 0; x < bm.vertices(); ++x) {
    bm.active_colors(x, act.data());
    std::uint8_t* lab = a.labels.data() + x * T;
    if (const TradeSite* s = site_at[x]) {
      std::fill(taken.begin(), taken.end(), 0);
      std::fill(lab, lab + T, 0xFF);
      for (int k = 0; k < T; ++k) {
        if (act[k] == s->color) lab[k] = 0;
        if (act[k] == s->partner) lab[k] = s->tau;
      }
      taken[0] = taken[s->tau] = 1;
      int next = 0;
      for (int k = 0; k < T; ++k) {
        if (lab[k] != 0xFF) continue;
        while (taken[next]) ++next;
        lab[k] = static_cast<std::uint8_t>(next);
        taken[next] = 1;
      }
    } else {
      for (int k = 0; k < T; ++k) lab[k] = static_cast<std::uint8_t>(k);
    }
    for (int k = 0; k < T; ++k) {
      if (lab[k] >= T) fail(ErrorKind::InternalError, "trade site pins an inactive colour");
      ++a.counts[act[k]][lab[k]];
    }
  }
  return a;
}

ActiveAssignment realize_residues(const BaseMulti& bm, const TradePlan& plan, const ResidueMatrix& rho) {
  const int T = bm.T;
  const Residue m = bm.m;
  if (rho.rho.size() != static_cast<std::size_t>(bm.d)) fail(ErrorKind::InvalidInput, "residue matrix has wrong shape");
  for (int c = 0; c < bm.d; ++c) {
    if (rho.rho[c].size() != static_cast<std::size_t>(T)) fail(ErrorKind::InvalidInput, "residue matrix has wrong shape");
    if (std::accumulate(rho.rho[c].begin(), rho.rho[c].end(), Index{0}) % m != 0)
      fail(ErrorKind::InvalidInput, "residue row " + std::to_string(c) + " does not vanish");
  }
  for (int s = 0; s < T; ++s) {
    Index col = 0;
    for (int c = 0; c < bm.d; ++c) col += rho.rho[c][s];
    if (col % m != 0) fail(ErrorKind::InvalidInput, "residue column " + std::to_string(s) + " does not vanish");
  }

  ActiveAssignment a = baseline_assignment(bm, plan);
  auto discrepancy = [&](int c, int s) { return reduce(static_cast<std::int64_t>(rho.rho[c][s]) - a.counts[c][s], m); };
  std::vector<int> act(T);

  // Sites of one (colour, tau) class are contiguous in scan order per colour.
  std::vector<std::vector<std::vector<const TradeSite*>>> by(bm.d, std::vector<std::vector<const TradeSite*>>(T));
  for (const TradeSite& s : plan.nonaux) by[s.color][s.tau].push_back(&s);
  for (int c = 0; c < bm.d; ++c)
    for (int tau = 1; tau < T; ++tau) {
      if (by[c][tau].empty()) continue;
      const Residue lambda = discrepancy(c, tau);
      for (Residue k = 0; k < lambda; ++k) swap_site(bm, *by[c][tau][k], a, act);
    }
  for (const auto* sites : {&plan.pair01, &plan.pair02}) {
    std::vector<std::vector<const TradeSite*>> per(T);
    for (const TradeSite& s : *sites) per[s.tau].push_back(&s);
    for (int tau = 1; tau < T; ++tau) {
      if (per[tau].empty()) continue;
      const Residue mu = discrepancy(per[tau][0]->color, tau);
      for (Residue k = 0; k < mu; ++k) swap_site(bm, *per[tau][k], a, act);
    }
  }
  for (int c = 0; c < bm.d; ++c)
    for (int s = 0; s < T; ++s)
      if (discrepancy(c, s) != 0)
        fail(ErrorKind::InternalError, "residue realisation left a discrepancy at colour " + std::to_string(c));
  return a;
}

namespace {

class LiftOracle final : public Oracle {
 public:
  explicit LiftOracle(std::shared_ptr<const LiftCertificate> cert) : cert_(std::move(cert)) {
    const BaseMulti& bm = cert_->bm;
    pw_.resize(bm.b);
    for (int j = 0; j < bm.b; ++j) pw_[j] = checked_pow(bm.m, j);
  }

  void directions_at(const Residue* x, Direction* out) const override {
    const BaseMulti& bm = cert_->bm;
    const int d = bm.d, b = bm.b, T = bm.T;
    const Residue m = bm.m;
    Residue z[256];
    const Residue t = prefix_of(x, d, m, z);
    // u_0 = t + z_1, u_k = z_{k+1} - z_k, v = -z_b.
    Index u = add_mod(t, z[0], m);
    for (int k = 1; k < b; ++k) u += sub_mod(z[k], z[k - 1], m) * pw_[k];
    const Residue v = neg_mod(z[b - 1], m);
    const Index xi = u + bm.base_states * v;

    std::uint64_t horiz[4] = {0, 0, 0, 0};
    for (int j = 0; j < b; ++j) {
      const Residue s = add_mod(static_cast<Residue>(bm.pos[j * bm.base_states + u] % m), v, m);
      const int c = bm.phase_color[j][s];
      horiz[c >> 6] |= std::uint64_t{1} << (c & 63);
      out[c] = static_cast<Direction>(d - 1 - bm.base_dir[u * b + j]);
    }
    const std::uint8_t* lab = cert_->assignment.labels.data() + xi * T;
    Residue tail[256];
    int k = 0;
    for (int c = 0; c < d; ++c) {
      if (horiz[c >> 6] >> (c & 63) & 1) continue;
      std::copy(z + b, z + d - 1, tail);
      const int stop = apply_label_inplace(tail, T - 1, 0, Label{lab[k++]}, m);
      out[c] = static_cast<Direction>(d - 1 - (b + stop));
    }
  }
  int dimension() const override { return cert_->bm.d; }

 private:
  std::shared_ptr<const LiftCertificate> cert_;
  std::vector<Index> pw_;
};

nlohmann::ordered_json plan_json(const LiftCertificate& c) {
  nlohmann::ordered_json j;
  j["b"] = c.bm.b;
  j["T"] = c.bm.T;
  nlohmann::ordered_json comp = nlohmann::ordered_json::array(), parts = nlohmann::ordered_json::array();
  for (const auto& g : c.bm.groups) {
    comp.push_back(g.size());
    nlohmann::ordered_json p = nlohmann::ordered_json::array();
    for (int col : g) p.push_back(c.bm.alpha[col]);
    parts.push_back(p);
  }
  j["composition"] = comp;
  j["partitions"] = parts;
  j["auxiliary"] = {c.plan.aux[0], c.plan.aux[1], c.plan.aux[2]};
  j["trade_sites"] = c.plan.nonaux.size() + c.plan.pair01.size() + c.plan.pair02.size();
  j["swaps"] = c.assignment.swaps;
  j["matching_fallback"] = c.plan.used_matching;
  return j;
}

}  // namespace

Decomposition lift_decomposition(LiftCertificate cert, Decomposition base, const std::string& kind,
                                 bool check_counts) {
  const BaseMulti& bm = cert.bm;
  if (cert.assignment.labels.size() != bm.vertices() * bm.T)
    fail(ErrorKind::InvalidInput, "assignment does not cover the base multigraph");
  for (int c = 0; c < bm.d && check_counts; ++c) {
    const auto& row = cert.assignment.counts[c];
    const std::int64_t A = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    const CountCheck cc = check_prefix_counts(LabelCounts::from_row(row), bm.m, A);
    if (!cc.ok) fail(ErrorKind::CertificateFailure, "tail counts of colour " + std::to_string(c) + ": " + cc.reason);
  }
  Decomposition dec;
  dec.params = {bm.d, bm.m};
  dec.recipe.kind = kind;
  dec.recipe.params = dec.params;
  dec.recipe.detail = plan_json(cert);
  dec.recipe.children.push_back(base.recipe);
  auto shared = std::make_shared<const LiftCertificate>(std::move(cert));
  dec.oracle = std::make_shared<LiftOracle>(shared);
  dec.lift = shared;
  dec.children.push_back(std::move(base));
  return dec;
}

Decomposition modular_trade_lift(Decomposition base, int d, const std::vector<int>& composition,
                                 const std::vector<std::vector<Residue>>& partitions, const std::string& kind) {
  LiftCertificate cert;
  cert.bm = base_cylinder(base, d, composition, partitions);
  cert.plan = choose_trade_vertices(cert.bm);
  cert.rho = universal_residue(d, cert.bm.T, cert.bm.m);
  cert.assignment = realize_residues(cert.bm, cert.plan, cert.rho);
  return lift_decomposition(std::move(cert), std::move(base), kind);
}

namespace {

using Clock = std::chrono::steady_clock;

// Stop rank -> label code under an all-ones tail (rho = T - 1).
inline std::uint8_t label_from_stop(int stop, int T) {
  if (stop == 0) return 0;
  if (stop == T - 1) return 1;
  return static_cast<std::uint8_t>(stop + 1);
}

}  // namespace

std::vector<CheckResult> lift_structural_checks(const Decomposition& dec, std::uint64_t budget) {
  if (!dec.lift) fail(ErrorKind::MalformedInput, "lift recipe without its certificate");
  const BaseMulti& meta = dec.lift->bm;
  const int d = dec.params.d, b = meta.b, T = d - b;
  const Residue m = dec.params.m;
  if (b < 1 || T < 2) fail(ErrorKind::MalformedCertificate, "lift base dimension out of range");
  const Index N = checked_pow(m, b), X = N * m;
  if (sat_mul(X, 2 * static_cast<Index>(d)) > budget)
    fail(ErrorKind::ResourceLimit, "lift base sweep needs " + std::to_string(sat_mul(X, 2 * d)) + " steps");

  std::vector<CheckResult> out;
  auto t0 = Clock::now();
  auto lap = [&] {
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    t0 = Clock::now();
    return s;
  };

  // Rank table read from the oracle at tail (1, ..., 1).
  std::vector<std::uint8_t> rank(static_cast<std::size_t>(X * d));
  CheckResult latin{"lift: local Latin on the base section", true, "", 0.0};
  {
    Vec u(b, 0);
    LayerPrefixPoint q;
    q.prefix.assign(d - 1, 1);
    std::vector<Direction> dirs(d);
    for (Index xi = 0; xi < X && latin.ok; ++xi) {
      const Residue v = static_cast<Residue>(xi / N);
      Residue S = v;
      for (int k = b; k >= 1; --k) {
        q.prefix[k - 1] = neg_mod(S, m);
        S = add_mod(S, u[k - 1], m);
      }
      q.layer = S;
      const Vec x = from_layer_prefix(q, dec.params);
      dec.oracle->directions_at(x.data(), dirs.data());
      std::uint64_t used[4] = {0, 0, 0, 0};
      for (int c = 0; c < d; ++c) {
        const int r = d - 1 - dirs[c];
        if (r < 0 || (used[r >> 6] >> (r & 63) & 1)) {
          latin.ok = false;
          latin.detail = "base vertex " + std::to_string(xi) + " repeats a direction";
          break;
        }
        used[r >> 6] |= std::uint64_t{1} << (r & 63);
        rank[xi * d + c] = static_cast<std::uint8_t>(r);
      }
      for (int j = 0; j < b; ++j) {
        if (++u[j] < m) break;
        u[j] = 0;
      }
    }
  }
  latin.seconds = lap();
  out.push_back(latin);
  if (!latin.ok) return out;

  CheckResult walk{"lift: base walks are single cycles of length m^(b+1)", true, "", 0.0};
  std::vector<std::vector<std::int64_t>> counts(d, std::vector<std::int64_t>(T, 0));
  {
    std::vector<Index> pw(b + 1);
    for (int j = 0; j <= b; ++j) pw[j] = checked_pow(m, j);
    std::vector<std::uint64_t> seen((X + 63) / 64);
    Vec coord(b + 1);
    for (int c = 0; c < d; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      std::fill(coord.begin(), coord.end(), 0);
      Index xi = 0, len = 0;
      seen[0] = 1;
      while (true) {
        const int r = rank[xi * d + c];
        const int g = std::min(r, b);
        if (r >= b) ++counts[c][label_from_stop(r - b, T)];
        if (++coord[g] == m) {
          coord[g] = 0;
          xi -= (m - 1) * pw[g];
        } else {
          xi += pw[g];
        }
        ++len;
        if (seen[xi / 64] >> (xi % 64) & 1) break;
        seen[xi / 64] |= std::uint64_t{1} << (xi % 64);
      }
      if (xi != 0 || len != X) {
        walk.ok = false;
        walk.detail += "colour " + std::to_string(c) + " closes after " + std::to_string(len) + "; ";
      }
    }
  }
  walk.seconds = lap();
  out.push_back(walk);

  CheckResult lengths{"lift: A_c divisible by m and at least m^b", true, "", 0.0};
  CheckResult prim{"lift: tail prefix counts are primitive", true, "", 0.0};
  for (int c = 0; c < d; ++c) {
    const std::int64_t A = std::accumulate(counts[c].begin(), counts[c].end(), std::int64_t{0});
    if (A % m != 0 || A < static_cast<std::int64_t>(N)) {
      lengths.ok = false;
      lengths.detail += "colour " + std::to_string(c) + " has A_c = " + std::to_string(A) + "; ";
    }
    const CountCheck cc = check_prefix_counts(LabelCounts::from_row(counts[c]), m, A);
    if (!cc.ok) {
      prim.ok = false;
      prim.detail += "colour " + std::to_string(c) + ": " + cc.reason + "; ";
    }
  }
  out.push_back(lengths);
  prim.seconds = lap();
  out.push_back(prim);

  CheckResult mt{"lift: modular-trade hypothesis", modular_trade_hypothesis(d, b, m), "", 0.0};
  mt.detail = "m^b = " + std::to_string(N) + ", m d T = " + std::to_string(static_cast<Index>(m) * d * T);
  if (mt.ok) mt.detail.clear();
  out.push_back(mt);

  CheckResult tails{"lift: tail independence (sampled)", true, "", 0.0};
  {
    std::mt19937_64 rng(0x7a11'5eedULL);
    std::uniform_int_distribution<Residue> coord(0, m - 1);
    Vec x(d);
    std::vector<Residue> z(d - 1);
    std::vector<Direction> dirs(d);
    for (int s = 0; s < 4096 && tails.ok; ++s) {
      for (auto& r : x) r = coord(rng);
      const Residue t = prefix_of(x.data(), d, m, z.data());
      Index xi = add_mod(t, z[0], m);
      Index p = 1;
      for (int k = 1; k < b; ++k) {
        p *= m;
        xi += sub_mod(z[k], z[k - 1], m) * p;
      }
      xi += N * neg_mod(z[b - 1], m);
      dec.oracle->directions_at(x.data(), dirs.data());
      for (int c = 0; c < d; ++c) {
        const int rec = rank[xi * d + c];
        int expect = rec;
        if (rec >= b) {
          const Label l{label_from_stop(rec - b, T)};
          expect = b + apply_label({z.data() + b, static_cast<std::size_t>(T - 1)}, 0, l, m).stop;
        }
        if (d - 1 - dirs[c] != expect) {
          tails.ok = false;
          tails.detail = "vertex " + std::to_string(vertex_index(x, m)) + " colour " + std::to_string(c);
          break;
        }
      }
    }
  }
  tails.seconds = lap();
  out.push_back(tails);
  return out;
}

}  // namespace hamdec
