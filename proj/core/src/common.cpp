#include "whk/common.hpp"

#include <atomic>
#include <thread>

namespace whk {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::int64_t{1} << 62) / base)
      throw contract_error("ipow overflow");
    r *= base;
  }
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: product of i consecutive ints
  }
  return r;
}

int valuation(std::int64_t v, int p) {
  if (v == 0) throw contract_error("valuation of zero");
  int a = 0;
  while (v % p == 0) {
    v /= p;
    ++a;
  }
  return a;
}

int plog(std::int64_t v, int p) {
  int a = 0;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++a;
  }
  if (v != 1) throw contract_error("plog: argument is not a power of p");
  return a;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& f) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<int>(workers, static_cast<int>(n));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

}  // namespace whk
