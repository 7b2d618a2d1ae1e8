#pragma once

// Data-parallel kernels. Each has a serial path that is the reference the
// OpenMP path is tested against; both produce bit-identical results because
// work is split into fixed units and reduced in a fixed order.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "twostate/rng.hpp"

namespace twostate {

enum class Execution { kSerial, kParallel };

/// out[i] = f(i) for i in [0, n).
template <class F>
auto grid_map(std::size_t n, F&& f, Execution ex = Execution::kParallel)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  const auto count = static_cast<std::int64_t>(n);
  if (ex == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Number of independent RNG substreams a Monte Carlo run is split into. Fixed
/// so results do not depend on the thread count.
inline constexpr std::size_t kSubstreams = 64;

namespace detail {

struct Welford {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

}  // namespace detail

/// Sample mean and standard error of `sample(rng)` over `samples` draws.
template <class Sampler>
MeanEstimate mc_mean(std::size_t samples, RngSeed seed, Sampler&& sample,
                     Execution ex = Execution::kParallel) {
  std::vector<detail::Welford> partial(kSubstreams);
  auto run_stream = [&](std::size_t k) {
    const std::size_t count = samples / kSubstreams + (k < samples % kSubstreams ? 1 : 0);
    Rng rng(derive_seed(seed, k));
    detail::Welford acc;
    for (std::size_t i = 0; i < count; ++i) acc.push(sample(rng));
    partial[k] = acc;
  };
  const auto streams = static_cast<std::int64_t>(kSubstreams);
  if (ex == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < streams; ++k) run_stream(static_cast<std::size_t>(k));
  } else {
    for (std::int64_t k = 0; k < streams; ++k) run_stream(static_cast<std::size_t>(k));
  }
  detail::Welford total;
  for (const auto& p : partial) total.merge(p);
  MeanEstimate est;
  est.mean = total.mean;
  est.samples = total.n;
  if (total.n > 1) {
    est.std_error = std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n));
  }
  return est;
}

}  // namespace twostate
