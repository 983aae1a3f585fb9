#include "hamdec/rootflat.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>

namespace hamdec {

Index root_state_count(const Params& p) { return checked_pow(p.m, p.d - 1); }

Index root_state_index(const Residue* w, const Params& p) {
  return vertex_index({w, static_cast<std::size_t>(p.d - 1)}, p.m);
}

void root_state_from_index(Index idx, const Params& p, Residue* w) {
  Residue sum = 0;
  for (int j = 0; j < p.d - 1; ++j) {
    w[j] = static_cast<Residue>(idx % p.m);
    idx /= p.m;
    sum = add_mod(sum, w[j], p.m);
  }
  w[p.d - 1] = neg_mod(sum, p.m);
}

std::uint32_t zero_mask(const Residue* w, int d) {
  std::uint32_t mask = 0;
  for (int i = 0; i < d; ++i)
    if (w[i] == 0) mask |= 1u << i;
  return mask;
}

namespace {

[[noreturn]] void missing_entry(const char* what, Residue t) {
  fail(ErrorKind::MalformedCertificate, std::string(what) + " undefined at layer " + std::to_string(t));
}

}  // namespace

void layer_directions(const Schedule& s, Residue t, const Residue* w, Direction* out) {
  const int d = s.params.d;
  const Residue m = s.params.m;
  const LayerRule& rule = s.layers[t];
  if (const auto* tr = std::get_if<TranslationRule>(&rule)) {
    std::copy(tr->dir_of_color.begin(), tr->dir_of_color.end(), out);
  } else if (const auto* zs = std::get_if<ZeroSetSelectorRule>(&rule)) {
    const std::uint32_t mask = zero_mask(w, d);
    for (int c = 0; c < d; ++c) {
      int v = zs->equivariant ? zs->selector[shift_mask(mask, c, d)] : zs->per_color[c][mask];
      if (v < 0) missing_entry("zero-set selector", t);
      out[c] = static_cast<Direction>((c + v) % d);
    }
  } else if (const auto* pl = std::get_if<PrefixLabelRule>(&rule)) {
    Residue z = 0;
    int r = d - 1;
    for (int j = 1; j < d; ++j) {
      z = add_mod(z, w[d - j], m);
      if (z == t) {
        r = j;
        break;
      }
    }
    for (int c = 0; c < d; ++c) out[c] = static_cast<Direction>(d - 1 - stop_rank_for(pl->assignment[c], r));
  } else {
    const auto& tb = std::get<TableRule>(rule);
    const Index idx = root_state_index(w, s.params);
    for (int c = 0; c < d; ++c) {
      int v = tb.dir[idx * d + c];
      if (v < 0) missing_entry("table rule", t);
      out[c] = static_cast<Direction>(v);
    }
  }
}

Direction layer_direction(const Schedule& s, Residue t, const Residue* w, int color) {
  const int d = s.params.d;
  const LayerRule& rule = s.layers[t];
  if (const auto* tr = std::get_if<TranslationRule>(&rule)) return tr->dir_of_color[color];
  if (const auto* zs = std::get_if<ZeroSetSelectorRule>(&rule)) {
    const std::uint32_t mask = zero_mask(w, d);
    int v = zs->equivariant ? zs->selector[shift_mask(mask, color, d)] : zs->per_color[color][mask];
    if (v < 0) missing_entry("zero-set selector", t);
    return static_cast<Direction>((color + v) % d);
  }
  if (const auto* pl = std::get_if<PrefixLabelRule>(&rule)) {
    const Residue m = s.params.m;
    Residue z = 0;
    int r = d - 1;
    for (int j = 1; j < d; ++j) {
      z = add_mod(z, w[d - j], m);
      if (z == t) {
        r = j;
        break;
      }
    }
    return static_cast<Direction>(d - 1 - stop_rank_for(pl->assignment[color], r));
  }
  const auto& tb = std::get<TableRule>(rule);
  int v = tb.dir[root_state_index(w, s.params) * d + color];
  if (v < 0) missing_entry("table rule", t);
  return static_cast<Direction>(v);
}

void validate_schedule(const Schedule& s) {
  validate_params(s.params);
  const int d = s.params.d;
  if (s.layers.size() != s.params.m)
    fail(ErrorKind::MalformedCertificate, "schedule has " + std::to_string(s.layers.size()) + " layers, expected m");
  for (std::size_t t = 0; t < s.layers.size(); ++t) {
    const LayerRule& rule = s.layers[t];
    const std::string where = " at layer " + std::to_string(t);
    if (const auto* tr = std::get_if<TranslationRule>(&rule)) {
      if (tr->dir_of_color.size() != static_cast<std::size_t>(d))
        fail(ErrorKind::MalformedCertificate, "translation rule size" + where);
      for (auto v : tr->dir_of_color)
        if (v >= d) fail(ErrorKind::MalformedCertificate, "translation direction out of range" + where);
    } else if (const auto* zs = std::get_if<ZeroSetSelectorRule>(&rule)) {
      if (d > 24) fail(ErrorKind::UnsupportedParameters, "zero-set selectors need d <= 24");
      const std::size_t size = std::size_t{1} << d;
      if (zs->equivariant ? zs->selector.size() != size
                          : (zs->per_color.size() != static_cast<std::size_t>(d) ||
                             std::any_of(zs->per_color.begin(), zs->per_color.end(),
                                         [&](const auto& v) { return v.size() != size; })))
        fail(ErrorKind::MalformedCertificate, "zero-set selector size" + where);
    } else if (const auto* pl = std::get_if<PrefixLabelRule>(&rule)) {
      if (pl->assignment.size() != static_cast<std::size_t>(d))
        fail(ErrorKind::MalformedCertificate, "prefix-label assignment size" + where);
      for (auto l : pl->assignment)
        if (!label_valid(l, d)) fail(ErrorKind::MalformedCertificate, "label outside S_d" + where);
    } else {
      const auto& tb = std::get<TableRule>(rule);
      if (tb.dir.size() != sat_mul(root_state_count(s.params), static_cast<Index>(d)))
        fail(ErrorKind::MalformedCertificate, "table rule size" + where);
    }
  }
}

Direction schedule_direction(const Schedule& s, std::span<const Residue> x, int color) {
  check_vertex(x, s.params);
  const int d = s.params.d;
  const Residue m = s.params.m;
  Residue t = 0;
  for (Residue v : x) t = add_mod(t, v, m);
  Vec w(x.begin(), x.end());
  w[d - 1] = sub_mod(w[d - 1], t, m);
  return layer_direction(s, t, w.data(), color);
}

namespace {

class ScheduleOracle final : public Oracle {
 public:
  explicit ScheduleOracle(std::shared_ptr<const Schedule> s) : s_(std::move(s)) {}
  void directions_at(const Residue* x, Direction* out) const override {
    const int d = s_->params.d;
    const Residue m = s_->params.m;
    Residue w[64] = {};
    Residue t = 0;
    for (int j = 0; j < d; ++j) {
      w[j] = x[j];
      t = add_mod(t, x[j], m);
    }
    w[d - 1] = sub_mod(w[d - 1], t, m);
    layer_directions(*s_, t, w, out);
  }
  Direction direction(const Residue* x, int color) const override {
    const int d = s_->params.d;
    const Residue m = s_->params.m;
    Residue w[64] = {};
    Residue t = 0;
    for (int j = 0; j < d; ++j) {
      w[j] = x[j];
      t = add_mod(t, x[j], m);
    }
    w[d - 1] = sub_mod(w[d - 1], t, m);
    return layer_direction(*s_, t, w, color);
  }
  int dimension() const override { return s_->params.d; }

 private:
  std::shared_ptr<const Schedule> s_;
};

// Index of w + q_i given the index of w.
inline Index step_index(Index idx, const Residue* w, int i, int d, Residue m, const Index* pw) {
  if (i == d - 1) return idx;
  return w[i] + 1 == m ? idx - (m - 1) * pw[i] : idx + pw[i];
}

}  // namespace

Decomposition expand(const Schedule& s, Recipe recipe) {
  validate_schedule(s);
  auto shared = std::make_shared<const Schedule>(s);
  Decomposition dec;
  dec.params = s.params;
  dec.oracle = std::make_shared<ScheduleOracle>(shared);
  dec.schedule = shared;
  if (recipe.kind.empty()) recipe.kind = "schedule";
  recipe.params = s.params;
  dec.recipe = std::move(recipe);
  return dec;
}

void root_step(const Schedule& s, Residue t, Residue* w, int color) {
  const int d = s.params.d;
  const Residue m = s.params.m;
  const int i = layer_direction(s, t, w, color);
  if (i != d - 1) {
    w[i] = add_mod(w[i], 1, m);
    w[d - 1] = sub_mod(w[d - 1], 1, m);
  }
}

namespace {

// One colour's return map as a program: layers whose direction ignores w collapse
// into a single translation, so a return costs one step per state-dependent layer.
struct ReturnProgram {
  struct Op {
    int layer = -1;           // state-dependent layer, or -1 for a translation
    std::vector<Residue> by;  // translation amounts on w_0..w_{d-2}
  };
  std::vector<Op> ops;
  Index cost = 0;  // steps per return
};

ReturnProgram compile_return(const Schedule& s, int color) {
  const int d = s.params.d;
  const Residue m = s.params.m;
  ReturnProgram prog;
  for (Residue t = 0; t < m; ++t) {
    if (const auto* tr = std::get_if<TranslationRule>(&s.layers[t])) {
      if (prog.ops.empty() || prog.ops.back().layer >= 0) prog.ops.push_back({-1, std::vector<Residue>(d - 1, 0)});
      const int i = tr->dir_of_color[color];
      if (i != d - 1) prog.ops.back().by[i] = add_mod(prog.ops.back().by[i], 1, m);
    } else {
      prog.ops.push_back({static_cast<int>(t), {}});
    }
  }
  prog.cost = prog.ops.size();
  return prog;
}

void run_return(const Schedule& s, const ReturnProgram& prog, Residue* w, int color) {
  const int d = s.params.d;
  const Residue m = s.params.m;
  for (const auto& op : prog.ops) {
    if (op.layer >= 0) {
      root_step(s, static_cast<Residue>(op.layer), w, color);
      continue;
    }
    Residue total = 0;
    for (int i = 0; i + 1 < d; ++i) {
      w[i] = add_mod(w[i], op.by[i], m);
      total = add_mod(total, op.by[i], m);
    }
    w[d - 1] = sub_mod(w[d - 1], total, m);
  }
}

Index return_cost(const Schedule& s) {
  Index worst = 0;
  for (int c = 0; c < s.params.d; ++c) worst = std::max(worst, compile_return(s, c).cost);
  return worst;
}

}  // namespace

std::vector<std::uint32_t> return_map(const Schedule& s, int color, std::uint64_t budget) {
  validate_schedule(s);
  const Params& p = s.params;
  const Index n = root_state_count(p);
  const ReturnProgram prog = compile_return(s, color);
  if (sat_mul(n, prog.cost) > budget || n > UINT32_MAX) fail(ErrorKind::ResourceLimit, "return map exceeds budget");
  std::vector<std::uint32_t> out(n);
  Vec w(static_cast<std::size_t>(p.d));
  for (Index idx = 0; idx < n; ++idx) {
    root_state_from_index(idx, p, w.data());
    run_return(s, prog, w.data(), color);
    out[idx] = static_cast<std::uint32_t>(root_state_index(w.data(), p));
  }
  return out;
}

bool RfReport::passed() const {
  return !resource_limited && ran_rf1 && ran_rf2 && ran_rf3 && rf1 && rf2 && rf3;
}

RfReport verify_rf(const Schedule& s, RfMode mode, std::uint64_t budget, unsigned jobs) {
  validate_schedule(s);
  const Params& p = s.params;
  const int d = p.d;
  const Residue m = p.m;
  RfReport rep;
  rep.params = p;
  const Index n = root_state_count(p);
  // Translation layers satisfy RF1 and RF2 by a single permutation check.
  std::vector<Residue> dependent;
  for (Residue t = 0; t < m; ++t) {
    if (const auto* tr = std::get_if<TranslationRule>(&s.layers[t])) {
      std::vector<char> used(static_cast<std::size_t>(d), 0);
      for (Direction dir : tr->dir_of_color) used[dir] = 1;
      if (std::count(used.begin(), used.end(), 1) != d) {
        rep.ran_rf1 = true;
        rep.failures.push_back("RF1 fails at translation layer " + std::to_string(t));
        return rep;
      }
    } else {
      dependent.push_back(t);
    }
  }
  const Index steps =
      sat_mul(sat_mul(n, static_cast<Index>(d)), static_cast<Index>(dependent.size()) + return_cost(s));
  if (steps > budget) {
    rep.resource_limited = true;
    rep.failures.push_back("root-flat checks need " + std::to_string(steps) + " steps, budget " + std::to_string(budget));
    return rep;
  }
  std::vector<Index> pw(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pw[i] = checked_pow(m, i);
  std::mutex mu;
  auto note = [&](std::string msg) {
    std::lock_guard<std::mutex> lock(mu);
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };

  const bool want12 = mode == RfMode::rf1 || mode == RfMode::rf2 || mode == RfMode::all;
  if (want12) {
    bool ok1 = true, ok2 = true;
    parallel_for(dependent.size(), jobs, [&](Index lo, Index hi) {
      std::vector<std::uint64_t> seen(static_cast<std::size_t>(d) * ((n + 63) / 64));
      std::vector<Residue> w(static_cast<std::size_t>(d));
      std::vector<Direction> dirs(static_cast<std::size_t>(d));
      std::vector<char> used(static_cast<std::size_t>(d));
      bool l1 = true, l2 = true;
      for (Index k = lo; k < hi; ++k) {
        const Residue t = dependent[k];
        std::fill(seen.begin(), seen.end(), 0);
        for (Index idx = 0; idx < n; ++idx) {
          root_state_from_index(idx, p, w.data());
          layer_directions(s, t, w.data(), dirs.data());
          std::fill(used.begin(), used.end(), 0);
          for (int c = 0; c < d; ++c) {
            if (used[dirs[c]] && l1) {
              l1 = false;
              note("RF1 fails at layer " + std::to_string(t) + ", root state " + std::to_string(idx));
            }
            used[dirs[c]] = 1;
            const Index img = step_index(idx, w.data(), dirs[c], d, m, pw.data());
            std::uint64_t& word = seen[c * ((n + 63) / 64) + img / 64];
            const std::uint64_t bit = std::uint64_t{1} << (img % 64);
            if ((word & bit) && l2) {
              l2 = false;
              note("RF2 fails at layer " + std::to_string(t) + ", color " + std::to_string(c) + ": image " +
                   std::to_string(img) + " hit twice");
            }
            word |= bit;
          }
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      ok1 = ok1 && l1;
      ok2 = ok2 && l2;
    });
    rep.ran_rf1 = rep.ran_rf2 = true;
    rep.rf1 = ok1;
    rep.rf2 = ok2;
  }

  if (mode == RfMode::rf3 || mode == RfMode::all) {
    rep.return_cycles.assign(static_cast<std::size_t>(d), {});
    std::vector<char> color_ok(static_cast<std::size_t>(d), 1);
    parallel_for(static_cast<Index>(d), jobs, [&](Index lo, Index hi) {
      std::vector<std::uint64_t> visited((n + 63) / 64);
      std::vector<Residue> w(static_cast<std::size_t>(d));
      for (Index c = lo; c < hi; ++c) {
        const ReturnProgram prog = compile_return(s, static_cast<int>(c));
        std::fill(visited.begin(), visited.end(), 0);
        std::vector<Index> cycles;
        bool ok = true;
        for (Index start = 0; start < n && ok; ++start) {
          if (visited[start / 64] >> (start % 64) & 1) continue;
          root_state_from_index(start, p, w.data());
          Index cur = start, len = 0;
          while (true) {
            visited[cur / 64] |= std::uint64_t{1} << (cur % 64);
            run_return(s, prog, w.data(), static_cast<int>(c));
            cur = root_state_index(w.data(), p);
            ++len;
            if (cur == start) break;
            if (visited[cur / 64] >> (cur % 64) & 1) {
              ok = false;
              note("RF3: return map of color " + std::to_string(c) + " is not injective");
              break;
            }
          }
          if (ok) cycles.push_back(len);
        }
        std::lock_guard<std::mutex> lock(mu);
        rep.return_cycles[c] = std::move(cycles);
        color_ok[c] = ok;
      }
    });
    rep.ran_rf3 = true;
    rep.rf3 = true;
    for (int c = 0; c < d; ++c) {
      if (!color_ok[c] || rep.return_cycles[c].size() != 1 || rep.return_cycles[c][0] != n) {
        if (color_ok[c])
          note("RF3: return map of color " + std::to_string(c) + " splits into " +
               std::to_string(rep.return_cycles[c].size()) + " cycles");
        rep.rf3 = false;
      }
    }
  }
  return rep;
}

namespace {

// reach[k][r]: some k values drawn from `pool` sum to r mod m.
std::vector<std::vector<char>> sum_reach(const std::vector<Residue>& pool, int kmax, Residue m) {
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(kmax) + 1, std::vector<char>(m, 0));
  reach[0][0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    const auto& prev = reach[k - 1];
    if (std::all_of(prev.begin(), prev.end(), [](char v) { return v != 0; }) && !pool.empty()) {
      std::fill(reach[k].begin(), reach[k].end(), 1);
      continue;
    }
    for (Residue r = 0; r < m; ++r)
      for (Residue o : pool)
        if (prev[sub_mod(r, o, m)]) {
          reach[k][r] = 1;
          break;
        }
  }
  return reach;
}

}  // namespace

std::optional<RfReport> verify_rf_symmetric(const Schedule& s, std::uint64_t budget) {
  validate_schedule(s);
  const Params& p = s.params;
  const int d = p.d;
  const Residue m = p.m;
  if (d > 12 || m < 3) return std::nullopt;
  // Shape: translations by a cyclic shift of colours, one equivariant selector.
  const ZeroSetSelectorRule* sel = nullptr;
  Residue sel_layer = 0;
  for (Residue t = 0; t < m; ++t) {
    if (const auto* tr = std::get_if<TranslationRule>(&s.layers[t])) {
      const int k = tr->dir_of_color[0];
      for (int c = 0; c < d; ++c)
        if (tr->dir_of_color[c] != (c + k) % d) return std::nullopt;
    } else if (const auto* zs = std::get_if<ZeroSetSelectorRule>(&s.layers[t]); zs && zs->equivariant && !sel) {
      sel = zs;
      sel_layer = t;
    } else {
      return std::nullopt;
    }
  }
  if (!sel) return std::nullopt;
  const Index n = root_state_count(p);
  const ReturnProgram prog0 = compile_return(s, 0);
  const std::uint32_t masks = 1u << d;
  const Index patterns = checked_pow(4, d);
  constexpr int kConjugacySamples = 256;
  const Index steps = sat_add(sat_add(sat_mul(n, prog0.cost), sat_mul(patterns, static_cast<Index>(d))),
                              sat_mul(kConjugacySamples * static_cast<Index>(d), 2 * prog0.cost + 4));
  RfReport rep;
  rep.params = p;
  if (steps > budget) {
    rep.resource_limited = true;
    rep.failures.push_back("symmetry-reduced root-flat checks need " + std::to_string(steps) + " steps, budget " +
                           std::to_string(budget));
    return rep;
  }
  auto selector_at = [&](std::uint32_t mask, int c) { return static_cast<int>(sel->selector[shift_mask(mask, c, d)]); };
  // Rotating coordinates by c rotates the zero mask; the selector must commute with it.
  for (std::uint32_t z = 0; z < masks; ++z)
    for (int c = 1; c < d; ++c)
      if (selector_at(shift_mask(z, d - c, d), c) != selector_at(z, 0)) return std::nullopt;

  std::vector<Residue> nonzero, other;
  for (Residue v = 1; v < m; ++v) {
    nonzero.push_back(v);
    if (v != 1 && v != m - 1) other.push_back(v);
  }
  const auto zero_sum = sum_reach(nonzero, d, m);
  const auto star_sum = sum_reach(other, d, m);

  // RF1: the colour permutation depends on the zero mask alone.
  rep.ran_rf1 = true;
  rep.rf1 = true;
  for (std::uint32_t z = 0; z < masks && rep.rf1; ++z) {
    const int free = d - std::popcount(z);
    if (!zero_sum[free][0]) continue;
    std::uint32_t used = 0;
    for (int c = 0; c < d; ++c) {
      const int v = selector_at(z, c);
      if (v < 0) {
        rep.rf1 = false;
        rep.failures.push_back("RF1: selector undefined at realizable mask " + std::to_string(z));
        break;
      }
      used |= 1u << ((c + v) % d);
    }
    if (rep.rf1 && used != masks - 1) {
      rep.rf1 = false;
      rep.failures.push_back("RF1 fails at zero mask " + std::to_string(z));
    }
  }

  // RF2: P_c = T sigma_c P_0 sigma_c^{-1}, so colour 0 suffices. Classify each
  // coordinate of an image y as 0, 1, -1 or other; y - q_i has its zero mask fixed by the class pattern.
  rep.ran_rf2 = true;
  rep.rf2 = true;
  std::vector<int> cls(static_cast<std::size_t>(d));
  for (Index code = 0; code < patterns && rep.rf2; ++code) {
    Index rest = code;
    int stars = 0;
    Residue fixed = 0;
    for (int j = 0; j < d; ++j) {
      cls[j] = static_cast<int>(rest % 4);  // 0: zero, 1: one, 2: minus one, 3: other
      rest /= 4;
      if (cls[j] == 3) ++stars;
      if (cls[j] == 1) fixed = add_mod(fixed, 1, m);
      if (cls[j] == 2) fixed = sub_mod(fixed, 1, m);
    }
    if (!star_sum[stars][neg_mod(fixed, m)]) continue;
    int preimages = 0;
    for (int i = 0; i < d; ++i) {
      std::uint32_t z = 0;
      for (int j = 0; j < d; ++j) {
        const int want = (i == d - 1) ? 0 : (j == i ? 1 : (j == d - 1 ? 2 : 0));
        if (cls[j] == want) z |= 1u << j;
      }
      const int v = selector_at(z, 0);
      if (v < 0) {
        rep.rf2 = false;
        rep.failures.push_back("RF2: selector undefined at realizable mask " + std::to_string(z));
        break;
      }
      if (v == i) ++preimages;
    }
    if (rep.rf2 && preimages != 1) {
      rep.rf2 = false;
      rep.failures.push_back("RF2: class pattern " + std::to_string(code) + " has " + std::to_string(preimages) +
                             " preimages");
    }
  }

  // RF3: R_c = psi_c R_0 psi_c^{-1} with psi_c = B_c^{-1} sigma_c B_0, B_c the translations
  // before the selector. Walk colour 0 and spot-check the conjugacy.
  if (!rep.rf1 || !rep.rf2) return rep;
  rep.ran_rf3 = true;
  std::vector<std::uint64_t> visited((n + 63) / 64);
  std::vector<Index> cycles;
  bool injective = true;
  Vec w(static_cast<std::size_t>(d));
  for (Index start = 0; start < n && injective; ++start) {
    if (visited[start / 64] >> (start % 64) & 1) continue;
    root_state_from_index(start, p, w.data());
    Index cur = start, len = 0;
    while (true) {
      visited[cur / 64] |= std::uint64_t{1} << (cur % 64);
      run_return(s, prog0, w.data(), 0);
      cur = root_state_index(w.data(), p);
      ++len;
      if (cur == start) break;
      if (visited[cur / 64] >> (cur % 64) & 1) {
        injective = false;
        rep.failures.push_back("RF3: return map of color 0 is not injective");
        break;
      }
    }
    if (injective) cycles.push_back(len);
  }
  auto translate = [&](Residue* x, int color, int sign) {
    for (Residue t = 0; t < sel_layer; ++t) {
      const int i = std::get<TranslationRule>(s.layers[t]).dir_of_color[color];
      if (i == d - 1) continue;
      x[i] = sign > 0 ? add_mod(x[i], 1, m) : sub_mod(x[i], 1, m);
      x[d - 1] = sign > 0 ? sub_mod(x[d - 1], 1, m) : add_mod(x[d - 1], 1, m);
    }
  };
  auto psi = [&](const Vec& x, int c) {
    Vec y = x;
    translate(y.data(), 0, +1);
    Vec r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[j] = y[(j - c + d) % d];
    translate(r.data(), c, -1);
    return r;
  };
  std::mt19937_64 rng(0x5eed'f1a7ULL ^ (static_cast<std::uint64_t>(d) << 32) ^ m);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  bool conjugate = true;
  for (int sample = 0; sample < kConjugacySamples && conjugate; ++sample) {
    root_state_from_index(pick(rng), p, w.data());
    Vec r0 = w;
    run_return(s, prog0, r0.data(), 0);
    for (int c = 1; c < d && conjugate; ++c) {
      Vec x = psi(w, c);
      run_return(s, compile_return(s, c), x.data(), c);
      if (x != psi(r0, c)) {
        conjugate = false;
        rep.failures.push_back("RF3: return map of color " + std::to_string(c) + " is not conjugate to color 0");
      }
    }
  }
  rep.rf3 = injective && conjugate && cycles.size() == 1 && cycles[0] == n;
  if (injective && !rep.rf3 && conjugate)
    rep.failures.push_back("RF3: return map of color 0 splits into " + std::to_string(cycles.size()) + " cycles");
  rep.return_cycles.assign(static_cast<std::size_t>(d), cycles);
  return rep;
}

}  // namespace hamdec
