#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace whk {

// Dense element id inside a FiniteGroup, in [0, order). Identity is always 0.
using Elem = std::uint16_t;

// Hard caps. Polycyclic groups stay cheap well past these; table-backed
// groups (quotients, central products) carry an order^2 multiplication table.
inline constexpr std::size_t kMaxGroupOrder = 60000;
inline constexpr std::size_t kMaxTableOrder = 8192;

// Default enumeration bound for constructed groups (3^6 scale, configurable
// per call site).
inline constexpr std::size_t kDefaultMaxOrder = 1000;

// Malformed group-spec strings, bad CLI input.
struct spec_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested computation exceeds the configured size bounds.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Even primes (and non-primes) are rejected everywhere.
struct unsupported_prime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition, or an internal consistency
// assertion failed.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Operation outside the supported family of groups.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_odd_prime(long p);

std::int64_t ipow(std::int64_t base, int exp);
std::int64_t binomial(int n, int k);

// Largest a with p^a | v; v must be nonzero.
int valuation(std::int64_t v, int p);

// log_p(v) for exact powers of p; throws contract_error otherwise.
int plog(std::int64_t v, int p);

// Deterministic rng for sampled property checks (SplitMix64).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform value in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
};

// Runs f(0..n-1), serially or on `workers` threads. Each index is handled
// exactly once; callers keep determinism by writing to disjoint slots.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& f);

}  // namespace whk
