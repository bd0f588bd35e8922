#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/permanent.hpp"
#include "scottperm/random_instances.hpp"
#include "scottperm/scott_engine.hpp"
#include "scottperm/verify.hpp"

namespace scottperm {

inline constexpr std::size_t kOracleCap = 10;

struct BenchOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t m_min = 2;
  std::size_t m_max = 8;
  std::uint64_t seed = 1;
  std::size_t max_n = kOracleCap;  // largest n that still runs the oracle leg
  int samples = 3;                 // timing is the minimum over this many samples
  double min_sample_ms = 5.0;      // each sample repeats the call until this long
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> oracle_ms;
  double theorem1_ms = 0.0;
  std::optional<bool> agree;
};

namespace detail {

// Per-call milliseconds: repeat until the sample is long enough to time,
// keep the fastest sample.
template <class F>
double time_call(F&& f, int samples, double min_sample_ms) {
  using clock = std::chrono::steady_clock;
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::size_t calls = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
      f();
      ++calls;
      elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    } while (elapsed < min_sample_ms);
    const double per_call = elapsed / static_cast<double>(calls);
    best = s == 0 ? per_call : std::min(best, per_call);
  }
  return best;
}

}  // namespace detail

/// One row per (n, m) with n <= m in the requested ranges; each row times
/// the definition-level oracle against the exact determinant route on a
/// seeded random coprime instance.
inline std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.n_min < 1 || opts.n_min > opts.n_max || opts.m_min > opts.m_max) {
    throw Error(ErrorKind::BadParams, "bench ranges must satisfy 1 <= n_min <= n_max and m_min <= m_max");
  }
  if (opts.max_n > kOracleCap) throw Error(ErrorKind::BadParams, "oracle leg is capped at n <= 10");
  std::mt19937_64 rng(opts.seed);
  std::vector<BenchRow> rows;
  for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
    for (std::size_t m = std::max(opts.m_min, n); m <= opts.m_max; ++m) {
      const Instance inst = random_coprime_instance(rng, n, m);
      BenchRow row;
      row.n = n;
      row.m = m;
      Rational exact;
      row.theorem1_ms = detail::time_call([&] { exact = scott_permanent(inst.p, inst.q).value; }, opts.samples,
                                          opts.min_sample_ms);
      if (n <= opts.max_n) {
        Complex numeric;
        row.oracle_ms = detail::time_call([&] { numeric = brute_permanent(inst.x, inst.y); }, opts.samples,
                                          opts.min_sample_ms);
        row.agree = approx_equal(to_complex(exact), numeric);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace scottperm
