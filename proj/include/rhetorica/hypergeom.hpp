#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rhetorica {

// Sampling-without-replacement urn: a population of `population` tokens of
// which `successes` carry the term, sampled `sample` at a time.
struct UrnParams {
  std::uint64_t population = 0;  // N
  std::uint64_t successes = 0;   // K
  std::uint64_t sample = 0;      // n
};

// Exact hypergeometric distribution over the draw count.
//
// Weights are built by the mode-outward ratio recurrence
//   p(k+1)/p(k) = (K-k)(n-k) / ((k+1)(N-K-n+k+1))
// anchored at w(mode) = 1 and normalized by the summed weights, so no
// log-gamma differences enter and normalization is exact by construction.
// Every ratio factor is an exact small integer in double, which also makes
// pmf bit-for-bit symmetric under swapping successes and sample size.
// Construction is O(support); queries are O(1) except the interval search.
class HypergeomDist {
 public:
  // Throws std::domain_error when successes or sample exceed the
  // population, or the population exceeds 2^53 (exactness limit).
  explicit HypergeomDist(UrnParams params);

  const UrnParams& params() const { return params_; }
  std::uint64_t support_min() const { return lo_; }
  std::uint64_t support_max() const { return hi_; }

  double pmf(std::uint64_t k) const;  // 0 outside the support
  // P(draws <= k); 0 below the support, exactly 1 at and above its top.
  double cdf(std::uint64_t k) const;

  double mean() const;    // n*K/N
  double stddev() const;

  // Two-sided interval at total mass alpha, alpha/2 per tail:
  // lower = smallest k with cdf(k) >= alpha/2,
  // upper = smallest k with cdf(k) >= 1 - alpha/2.
  // Throws std::domain_error unless 0 < alpha < 1.
  std::pair<std::uint64_t, std::uint64_t> confidence_interval(
      double alpha) const;

 private:
  UrnParams params_;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

// One-shot conveniences; each builds the full distribution.
double hypergeom_pmf(UrnParams params, std::uint64_t k);
double hypergeom_cdf(UrnParams params, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> confidence_interval(UrnParams params,
                                                            double alpha);

}  // namespace rhetorica
