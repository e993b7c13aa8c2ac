#include "rhetorica/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhetorica {

HypergeomDist::HypergeomDist(UrnParams params) : params_(params) {
  const std::uint64_t N = params.population;
  const std::uint64_t K = params.successes;
  const std::uint64_t n = params.sample;
  if (K > N) throw std::domain_error("successes exceed population");
  if (n > N) throw std::domain_error("sample exceeds population");
  if (N > (1ull << 53))
    throw std::domain_error("population exceeds 2^53, counts no longer exact");

  lo_ = (n + K > N) ? n + K - N : 0;
  hi_ = std::min(n, K);
  const auto len = static_cast<std::size_t>(hi_ - lo_ + 1);

  auto mode = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(n + 1) * (K + 1) / (N + 2));
  mode = std::clamp(mode, lo_, hi_);

  // All ratio factors are integers below 2^53, hence exact doubles; the
  // whole table costs one multiply and one divide per support point.
  std::vector<double> weights(len);
  weights[mode - lo_] = 1.0;
  for (std::uint64_t k = mode; k < hi_; ++k) {
    const double num =
        static_cast<double>(K - k) * static_cast<double>(n - k);
    const double den = static_cast<double>(k + 1) *
                       static_cast<double>(N - K - n + k + 1);
    weights[k - lo_ + 1] = weights[k - lo_] * (num / den);
  }
  for (std::uint64_t k = mode; k > lo_; --k) {
    const double num =
        static_cast<double>(k) * static_cast<double>(N - K - n + k);
    const double den = static_cast<double>(K - k + 1) *
                       static_cast<double>(n - k + 1);
    weights[k - lo_ - 1] = weights[k - lo_] * (num / den);
  }

  std::vector<long double> prefix(len);
  long double run = 0.0L;
  for (std::size_t i = 0; i < len; ++i) {
    run += weights[i];
    prefix[i] = run;
  }
  const long double total = run;
  pmf_.resize(len);
  cdf_.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    pmf_[i] = static_cast<double>(weights[i] / total);
    cdf_[i] = static_cast<double>(prefix[i] / total);
  }
}

double HypergeomDist::pmf(std::uint64_t k) const {
  if (k < lo_ || k > hi_) return 0.0;
  return pmf_[k - lo_];
}

double HypergeomDist::cdf(std::uint64_t k) const {
  if (k < lo_) return 0.0;
  if (k >= hi_) return 1.0;
  return cdf_[k - lo_];
}

double HypergeomDist::mean() const {
  if (lo_ == hi_) return static_cast<double>(lo_);
  return static_cast<double>(static_cast<long double>(params_.sample) *
                             params_.successes / params_.population);
}

double HypergeomDist::stddev() const {
  if (lo_ == hi_) return 0.0;
  const auto N = static_cast<long double>(params_.population);
  const long double p = static_cast<long double>(params_.successes) / N;
  const long double var = static_cast<long double>(params_.sample) * p *
                          (1.0L - p) *
                          ((N - static_cast<long double>(params_.sample)) /
                           (N - 1.0L));
  return static_cast<double>(std::sqrt(var));
}

std::pair<std::uint64_t, std::uint64_t> HypergeomDist::confidence_interval(
    double alpha) const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie strictly between 0 and 1");
  const double half = alpha / 2.0;
  const auto lo_it = std::lower_bound(cdf_.begin(), cdf_.end(), half);
  const auto hi_it = std::lower_bound(cdf_.begin(), cdf_.end(), 1.0 - half);
  const std::uint64_t lower =
      lo_ + static_cast<std::uint64_t>(lo_it - cdf_.begin());
  const std::uint64_t upper =
      lo_ + static_cast<std::uint64_t>(hi_it - cdf_.begin());
  return {lower, upper};
}

double hypergeom_pmf(UrnParams params, std::uint64_t k) {
  return HypergeomDist(params).pmf(k);
}

double hypergeom_cdf(UrnParams params, std::uint64_t k) {
  return HypergeomDist(params).cdf(k);
}

std::pair<std::uint64_t, std::uint64_t> confidence_interval(UrnParams params,
                                                            double alpha) {
  return HypergeomDist(params).confidence_interval(alpha);
}

}  // namespace rhetorica
