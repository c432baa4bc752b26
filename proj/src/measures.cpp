#include "gbm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbm/gauss.hpp"

namespace gbm {

namespace {

// Points per RNG block. Hits are counted per block and summed as integers, so
// the estimate is identical no matter how blocks are distributed over threads.
constexpr std::int64_t kBlockSize = 8192;
constexpr double kTwoPi = 6.28318530717958647692;

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// splitmix64; one independent stream per block.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() { return mix64(state += kGamma); }
};

SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block) {
  // The start state must go through the finalizer: raw seed + kGamma * block
  // offsets would make neighboring blocks shifted copies of one stream.
  return SplitMix64{mix64(seed + kGamma * (block + 1))};
}

double unit_open(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53; // (0, 1]
}

double unit_half_open(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53; // [0, 1)
}

std::int64_t block_hits(const Wedge& w, std::int64_t samples, std::uint64_t seed,
                        std::int64_t block) {
  SplitMix64 g = block_stream(seed, static_cast<std::uint64_t>(block));
  const std::int64_t begin = block * kBlockSize;
  const std::int64_t end = std::min(samples, begin + kBlockSize);
  std::int64_t hits = 0;
  for (std::int64_t i = begin; i < end; ++i) {
    const double u1 = unit_open(g.next());
    const double u2 = unit_half_open(g.next());
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    if (contains(w, Point{r * std::cos(angle), r * std::sin(angle)})) ++hits;
  }
  return hits;
}

MonteCarloEstimate finish_estimate(std::int64_t hits, std::int64_t samples,
                                   std::uint64_t seed) {
  const double mean = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples));
  return MonteCarloEstimate{mean, se, samples, seed};
}

void check_sample_count(std::int64_t samples) {
  if (samples < 1000)
    throw std::domain_error("wedge_measure_montecarlo: samples must be >= 1000");
}

}

QuadratureResult wedge_measure(const Wedge& w, const QuadratureConfig& cfg) {
  cfg.validate();
  // Integrate T(x tan(alpha) - shift) density(x) at half the tolerance, then
  // double. |T| <= 1 makes the density itself the envelope.
  QuadratureConfig half = cfg;
  half.abs_tol = 0.5 * cfg.abs_tol;
  half.truncation_tail = 0.5 * cfg.truncation_tail;
  const double slope = std::tan(w.alpha);
  const double shift = w.shift;
  const auto integrand = [slope, shift](double x) {
    return gaussian_tail(x * slope - shift) * gaussian_density(x);
  };
  try {
    const QuadratureResult r = integrate_semi_infinite(integrand, kInvSqrt2Pi, half);
    return QuadratureResult{2.0 * r.value, 2.0 * r.error_bound, r.evaluations};
  } catch (const ConvergenceError& e) {
    const QuadratureResult& b = e.best_estimate();
    throw ConvergenceError("wedge_measure: quadrature did not converge",
                           QuadratureResult{2.0 * b.value, 2.0 * b.error_bound,
                                            b.evaluations});
  }
}

double apex_wedge_measure_closed(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= kHalfPi)
    throw std::domain_error("apex_wedge_measure_closed: alpha must lie in [0, pi/2)");
  return 0.5 - alpha / kPi;
}

double strip_measure_closed(double halfwidth) {
  if (!std::isfinite(halfwidth) || halfwidth <= 0.0)
    throw std::domain_error("strip_measure_closed: halfwidth must be > 0");
  return 1.0 - 2.0 * gaussian_tail(halfwidth);
}

MonteCarloEstimate wedge_measure_montecarlo_serial(const Wedge& w,
                                                   std::int64_t samples,
                                                   std::uint64_t seed) {
  check_sample_count(samples);
  const std::int64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::int64_t hits = 0;
  for (std::int64_t b = 0; b < blocks; ++b) hits += block_hits(w, samples, seed, b);
  return finish_estimate(hits, samples, seed);
}

MonteCarloEstimate wedge_measure_montecarlo(const Wedge& w, std::int64_t samples,
                                            std::uint64_t seed) {
  check_sample_count(samples);
  const std::int64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t b = 0; b < blocks; ++b) hits += block_hits(w, samples, seed, b);
  return finish_estimate(hits, samples, seed);
}

}
