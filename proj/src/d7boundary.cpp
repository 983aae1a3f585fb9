#include "hamdec/d7boundary.hpp"

#include <algorithm>
#include <bit>

#include "hamdec/golden.hpp"

namespace hamdec {

namespace {

constexpr int kD = 7;

void require_boundary_modulus(Residue m) {
  if (m != 3 && m != 5) fail(ErrorKind::UnsupportedParameters, "boundary compilers exist for m in {3, 5} only");
}

void validate_compiler(const ZeroSetCompiler& zc) {
  require_boundary_modulus(zc.m);
  if (zc.theta.size() != 128) fail(ErrorKind::InvalidInput, "selector must have 128 entries");
  if (zc.alpha.size() != zc.m) fail(ErrorKind::InvalidInput, "need one offset per layer");
  for (int v : zc.theta)
    if (v < -1 || v >= kD) fail(ErrorKind::InvalidInput, "selector value out of range");
  for (std::size_t t = 0; t < zc.alpha.size(); ++t)
    if (t != 1 && (zc.alpha[t] < 0 || zc.alpha[t] >= kD)) fail(ErrorKind::InvalidInput, "offset out of range");
}

}  // namespace

ZeroSetCompiler embedded_compiler(Residue m) {
  require_boundary_modulus(m);
  const auto& theta = m == 3 ? golden::theta3() : golden::theta5();
  ZeroSetCompiler zc;
  zc.m = m;
  zc.theta.assign(theta.begin(), theta.end());
  zc.alpha = m == 3 ? golden::alpha3() : golden::alpha5();
  return zc;
}

Schedule boundary_schedule(const ZeroSetCompiler& zc) {
  validate_compiler(zc);
  Schedule s{{kD, zc.m}, {}};
  for (Residue t = 0; t < zc.m; ++t) {
    if (t == 1) {
      s.layers.push_back(ZeroSetSelectorRule{zc.theta, true, {}});
      continue;
    }
    TranslationRule tr;
    for (int c = 0; c < kD; ++c) tr.dir_of_color.push_back(static_cast<Direction>((c + zc.alpha[t]) % kD));
    s.layers.push_back(std::move(tr));
  }
  return s;
}

Schedule boundary_schedule(Residue m) { return boundary_schedule(embedded_compiler(m)); }

Mc7Report mc7_check(const ZeroSetCompiler& zc) {
  validate_compiler(zc);
  const Params p{kD, zc.m};
  const Residue m = zc.m;
  const Index n = root_state_count(p);
  Mc7Report rep;
  rep.states = n;
  rep.latin = rep.exact_cover = rep.six_zero_masks_absent = true;
  Residue w[kD], v[kD];
  for (Index idx = 0; idx < n; ++idx) {
    root_state_from_index(idx, p, w);
    const std::uint32_t mask = zero_mask(w, kD);
    if (std::popcount(mask) == 6) rep.six_zero_masks_absent = false;
    std::uint32_t used = 0;
    for (int c = 0; c < kD; ++c) {
      const int th = zc.theta[shift_mask(mask, c, kD)];
      if (th < 0) {
        rep.latin = false;
        break;
      }
      used |= 1u << ((c + th) % kD);
    }
    if (used != 0x7f) rep.latin = false;
    int hits = 0;
    for (int i = 0; i < kD; ++i) {
      std::copy(w, w + kD, v);
      if (i != kD - 1) {
        v[i] = sub_mod(v[i], 1, m);
        v[kD - 1] = add_mod(v[kD - 1], 1, m);
      }
      if (zc.theta[zero_mask(v, kD)] == i) ++hits;
    }
    if (hits != 1) rep.exact_cover = false;
  }
  return rep;
}

Mc7Report mc7_check(Residue m) { return mc7_check(embedded_compiler(m)); }

Index RankCertificate::value_count() const {
  Index total = 0;
  for (const auto& r : ranks) total += r.size();
  return total;
}

RankCertificate generate_rank(const Schedule& s, std::uint64_t budget) {
  const RfReport rf = verify_rf(s, RfMode::all, budget);
  if (!rf.passed()) fail(ErrorKind::CertificateFailure, "schedule fails the root-flat checks; no rank certificate");
  const Index n = root_state_count(s.params);
  RankCertificate cert;
  cert.m = s.params.m;
  for (int c = 0; c < s.params.d; ++c) {
    const auto R = return_map(s, c, budget);
    std::vector<std::uint32_t> rank(n);
    std::uint32_t cur = 0;
    for (Index step = 0; step < n; ++step) {
      rank[cur] = static_cast<std::uint32_t>(step);
      cur = R[cur];
    }
    if (cur != 0) fail(ErrorKind::CertificateFailure, "return orbit does not close at the origin");
    cert.ranks.push_back(std::move(rank));
  }
  return cert;
}

bool RankReport::ok() const {
  return !colors.empty() &&
         std::all_of(colors.begin(), colors.end(), [](const RankColorCheck& c) { return c.permutation && c.increment; });
}

RankReport verify_rank(const RankCertificate& cert, const Schedule& s, std::uint64_t budget) {
  RankReport rep;
  if (cert.m != s.params.m) fail(ErrorKind::InvalidInput, "certificate and schedule moduli differ");
  const Index n = root_state_count(s.params);
  rep.target = n;
  rep.colors.assign(static_cast<std::size_t>(s.params.d), {});
  if (cert.ranks.size() != static_cast<std::size_t>(s.params.d)) return rep;
  for (int c = 0; c < s.params.d; ++c) {
    const auto& rank = cert.ranks[c];
    if (rank.size() != n) continue;
    std::vector<char> seen(n, 0);
    bool perm = true;
    for (std::uint32_t v : rank) {
      if (v >= n || seen[v]) {
        perm = false;
        break;
      }
      seen[v] = 1;
    }
    const auto R = return_map(s, c, budget);
    bool inc = true;
    for (Index w = 0; w < n && inc; ++w) inc = rank[R[w]] == (rank[w] + 1) % n;
    rep.colors[c] = {perm, inc};
  }
  return rep;
}

}  // namespace hamdec
