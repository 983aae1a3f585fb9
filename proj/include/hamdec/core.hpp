#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamdec {

using Residue = std::uint32_t;
using Index = std::uint64_t;
using Direction = std::uint8_t;
using Vec = std::vector<Residue>;

enum class ErrorKind {
  InvalidInput,
  InvalidParameters,
  UnsupportedParameters,
  ResourceLimit,
  MalformedCertificate,
  MalformedInput,
  SchemaError,
  InfeasibleDegrees,
  CertificateFailure,
  InternalError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

struct Params {
  int d = 0;
  Residue m = 0;

  bool operator==(const Params&) const = default;
};

// Throws invalid-parameters unless d >= 2 and m >= 2.
void validate_params(const Params& p);
// Additionally requires m odd and m >= 3, as every family except d = 2 does.
void require_odd_modulus(const Params& p, const char* who);

std::string to_string(const Params& p);

// Step budget used by exhaustive verification. HAMDEC_BUDGET overrides.
constexpr std::uint64_t kDefaultBudget = 200'000'000ULL;
std::uint64_t default_budget();

inline Residue add_mod(Residue a, Residue b, Residue m) {
  Residue s = a + b;
  return s >= m ? s - m : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue m) {
  return add_mod(a, b == 0 ? 0 : m - b, m);
}
inline Residue neg_mod(Residue a, Residue m) { return a == 0 ? 0 : m - a; }
inline Residue mul_mod(Residue a, Residue b, Residue m) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % m);
}
// Reduces any signed integer into [0, m).
Residue reduce(std::int64_t v, Residue m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
bool is_unit(std::int64_t v, Residue m);
// Inverse of a unit modulo m.
Residue inverse_mod(Residue a, Residue m);

// m^e; throws resource-limit when the result leaves 64 bits.
Index checked_pow(Index m, int e);
// Saturating product, used for budget comparisons.
Index sat_mul(Index a, Index b);
inline Index sat_add(Index a, Index b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

// Number of vertices m^d, guarded.
inline Index vertex_count(const Params& p) { return checked_pow(p.m, p.d); }

// index = sum_j x_j m^j
Index vertex_index(std::span<const Residue> x, Residue m);
void vertex_from_index(Index idx, Residue m, std::span<Residue> out);
Vec vertex_from_index(Index idx, int d, Residue m);

// Throws invalid-input unless x has d residues in [0, m).
void check_vertex(std::span<const Residue> x, const Params& p);

Residue layer_sum(std::span<const Residue> x, const Params& p);

struct LayerPrefixPoint {
  Residue layer = 0;
  Vec prefix;  // z_1 .. z_{d-1}, stored at positions 0 .. d-2

  bool operator==(const LayerPrefixPoint&) const = default;
};

LayerPrefixPoint to_layer_prefix(std::span<const Residue> x, const Params& p);
Vec from_layer_prefix(const LayerPrefixPoint& q, const Params& p);
// Layer advances by one; the first r prefix coordinates decrement.
LayerPrefixPoint apply_stop(const LayerPrefixPoint& q, int r, const Params& p);

// Allocation-free prefix computation: z has d-1 slots, returns the layer.
Residue prefix_of(const Residue* x, int d, Residue m, Residue* z);

inline int direction_of_rank(int d, int r) { return d - 1 - r; }

// Runs fn(begin, end) over [0, n) split into at most jobs chunks.
void parallel_for(Index n, unsigned jobs, const std::function<void(Index, Index)>& fn);
unsigned default_jobs();

}  // namespace hamdec
