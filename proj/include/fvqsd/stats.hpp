#pragma once

#include <cstddef>
#include <span>

namespace fvqsd {

/// Pairwise (cascade) summation; the result depends only on the order of `values`.
double pairwise_sum(std::span<const double> values);

struct MeanEstimate {
  double mean = 0.0;
  double se = 0.0;  ///< standard error of the mean; 0 when count < 2
  std::size_t count = 0;
};

/// Sample mean and i.i.d. standard error.
MeanEstimate mean_estimate(std::span<const double> values);

/// Mean with a batch-means standard error for autocorrelated series:
/// the series is cut into `batches` contiguous blocks of equal length
/// (a remainder at the end is dropped from the SE, not from the mean).
MeanEstimate batch_means(std::span<const double> values, std::size_t batches);

struct CovarianceEstimate {
  double covariance = 0.0;  ///< plug-in: mean(ab) - mean(a) mean(b)
  double se = 0.0;
  std::size_t count = 0;
};

CovarianceEstimate covariance_estimate(std::span<const double> a, std::span<const double> b);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

}  // namespace fvqsd
