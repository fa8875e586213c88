#pragma once
// Shared plumbing: exact rationals, error taxonomy, compensated summation,
// deterministic block-parallel reduction.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace g2rmt {

using Rational = mpq_class;
using Integer = mpz_class;
using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

// Error kinds mirror the CLI exit-code contract:
//   check (1)  an internal verification failed (Weil bound, unitarity, RH, ...)
//   usage (2)  bad argument, domain violation, malformed input file
//   cap   (3)  a configured resource limit would be exceeded
enum class ErrKind { check = 1, usage = 2, cap = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

[[noreturn]] inline void fail_check(const std::string& m) { throw Error(ErrKind::check, m); }
[[noreturn]] inline void fail_usage(const std::string& m) { throw Error(ErrKind::usage, m); }
[[noreturn]] inline void fail_cap(const std::string& m) { throw Error(ErrKind::cap, m); }

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();  // "55" or "-3/2"
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Neumaier-compensated accumulator; deterministic for a fixed add order.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// Deterministic parallel reduction: the work range is cut into fixed-size
// blocks regardless of thread count, each block is summed serially in index
// order, and block results are combined in block order. Results are therefore
// bit-identical for any thread count (including 1).
struct Parallel {
  int threads = 1;
  std::size_t block = 1 << 14;
};

// fn(begin, end, acc) must accumulate the half-open index range into acc.
template <typename Acc, typename Fn>
std::vector<Acc> block_map(std::size_t n, const Parallel& par, Fn&& fn) {
  std::size_t bs = par.block ? par.block : 1;
  std::size_t nblocks = n ? (n - 1) / bs + 1 : 0;
  std::vector<Acc> out(nblocks);
  int nthreads = par.threads > 0 ? par.threads : 1;
  if (nthreads == 1 || nblocks <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      fn(b * bs, std::min(n, (b + 1) * bs), out[b]);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      try {
        for (;;) {
          std::size_t b = next.fetch_add(1);
          if (b >= nblocks) return;
          fn(b * bs, std::min(n, (b + 1) * bs), out[b]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

template <typename Fn>
double block_sum(std::size_t n, const Parallel& par, Fn&& per_index) {
  auto blocks = block_map<Kahan>(n, par, [&](std::size_t b, std::size_t e, Kahan& acc) {
    for (std::size_t i = b; i < e; ++i) acc.add(per_index(i));
  });
  Kahan total;
  for (const auto& k : blocks) total.add(k.value());
  return total.value();
}

template <typename Fn>
cplx block_sum_c(std::size_t n, const Parallel& par, Fn&& per_index) {
  auto blocks = block_map<KahanC>(n, par, [&](std::size_t b, std::size_t e, KahanC& acc) {
    for (std::size_t i = b; i < e; ++i) acc.add(per_index(i));
  });
  KahanC total;
  for (const auto& k : blocks) total.add(k.value());
  return total.value();
}

// Small deterministic PRNG for property tests and MC spot checks.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace g2rmt
