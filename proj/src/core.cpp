#include "hamdec/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace hamdec {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::UnsupportedParameters: return "unsupported-parameters";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::MalformedCertificate: return "malformed-certificate";
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::SchemaError: return "schema-error";
    case ErrorKind::InfeasibleDegrees: return "infeasible-degrees";
    case ErrorKind::CertificateFailure: return "certificate-failure";
    case ErrorKind::InternalError: return "internal-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

void validate_params(const Params& p) {
  if (p.d < 2 || p.d > 64) fail(ErrorKind::InvalidParameters, "dimension must be in [2, 64], got " + std::to_string(p.d));
  if (p.m < 2) fail(ErrorKind::InvalidParameters, "modulus must be >= 2, got " + std::to_string(p.m));
}

void require_odd_modulus(const Params& p, const char* who) {
  validate_params(p);
  if (p.m % 2 == 0 || p.m < 3)
    fail(ErrorKind::UnsupportedParameters,
         std::string(who) + " requires odd m >= 3, got m=" + std::to_string(p.m));
}

std::string to_string(const Params& p) {
  return "(d=" + std::to_string(p.d) + ", m=" + std::to_string(p.m) + ")";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HAMDEC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

Residue reduce(std::int64_t v, Residue m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool is_unit(std::int64_t v, Residue m) { return gcd64(v, m) == 1; }

Residue inverse_mod(Residue a, Residue m) {
  std::int64_t t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = t - q * nt;
    std::swap(t, nt);
    r = r - q * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(ErrorKind::InvalidInput, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return reduce(t, m);
}

Index checked_pow(Index m, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) {
    if (m != 0 && r > UINT64_MAX / m)
      fail(ErrorKind::ResourceLimit, std::to_string(m) + "^" + std::to_string(e) + " exceeds the machine word");
    r *= m;
  }
  return r;
}

Index sat_mul(Index a, Index b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

Index vertex_index(std::span<const Residue> x, Residue m) {
  Index idx = 0;
  for (std::size_t j = x.size(); j-- > 0;) idx = idx * m + x[j];
  return idx;
}

void vertex_from_index(Index idx, Residue m, std::span<Residue> out) {
  for (auto& v : out) {
    v = static_cast<Residue>(idx % m);
    idx /= m;
  }
}

Vec vertex_from_index(Index idx, int d, Residue m) {
  Vec x(static_cast<std::size_t>(d));
  vertex_from_index(idx, m, x);
  return x;
}

void check_vertex(std::span<const Residue> x, const Params& p) {
  if (x.size() != static_cast<std::size_t>(p.d))
    fail(ErrorKind::InvalidInput, "vertex has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(p.d));
  for (Residue v : x)
    if (v >= p.m) fail(ErrorKind::InvalidInput, "coordinate " + std::to_string(v) + " not in [0, m)");
}

Residue layer_sum(std::span<const Residue> x, const Params& p) {
  check_vertex(x, p);
  Residue t = 0;
  for (Residue v : x) t = add_mod(t, v, p.m);
  return t;
}

Residue prefix_of(const Residue* x, int d, Residue m, Residue* z) {
  Residue t = 0;
  for (int j = 0; j < d; ++j) t = add_mod(t, x[j], m);
  Residue suffix = 0;
  for (int j = 1; j < d; ++j) {
    suffix = add_mod(suffix, x[d - j], m);
    z[j - 1] = sub_mod(suffix, t, m);
  }
  return t;
}

LayerPrefixPoint to_layer_prefix(std::span<const Residue> x, const Params& p) {
  check_vertex(x, p);
  LayerPrefixPoint q;
  q.prefix.resize(static_cast<std::size_t>(p.d - 1));
  q.layer = prefix_of(x.data(), p.d, p.m, q.prefix.data());
  return q;
}

Vec from_layer_prefix(const LayerPrefixPoint& q, const Params& p) {
  if (q.prefix.size() != static_cast<std::size_t>(p.d - 1) || q.layer >= p.m)
    fail(ErrorKind::InvalidInput, "layer-prefix point does not match dimension");
  Vec x(static_cast<std::size_t>(p.d));
  // sigma_j = z_j + t is the sum of the last j coordinates; sigma_d = t.
  Residue prev = 0;
  for (int j = 1; j < p.d; ++j) {
    Residue sigma = add_mod(q.prefix[j - 1], q.layer, p.m);
    x[p.d - j] = sub_mod(sigma, prev, p.m);
    prev = sigma;
  }
  x[0] = sub_mod(q.layer, prev, p.m);
  return x;
}

LayerPrefixPoint apply_stop(const LayerPrefixPoint& q, int r, const Params& p) {
  if (r < 0 || r >= p.d) fail(ErrorKind::InvalidInput, "stop rank " + std::to_string(r) + " out of range");
  LayerPrefixPoint out = q;
  out.layer = add_mod(out.layer, 1, p.m);
  for (int j = 0; j < r; ++j) out.prefix[j] = sub_mod(out.prefix[j], 1, p.m);
  return out;
}

unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void parallel_for(Index n, unsigned jobs, const std::function<void(Index, Index)>& fn) {
  if (jobs <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  Index chunks = std::min<Index>(jobs, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  for (Index c = 0; c < chunks; ++c) {
    Index lo = n * c / chunks, hi = n * (c + 1) / chunks;
    pool.emplace_back([&, c, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hamdec
