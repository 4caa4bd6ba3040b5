#include "fvqsd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fvqsd/error.hpp"

namespace fvqsd {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MeanEstimate mean_estimate(std::span<const double> values) {
  MeanEstimate est;
  est.count = values.size();
  if (values.empty()) return est;
  const auto n = static_cast<double>(values.size());
  est.mean = pairwise_sum(values) / n;
  if (values.size() < 2) return est;
  std::vector<double> sq(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) sq[k] = (values[k] - est.mean) * (values[k] - est.mean);
  est.se = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
  return est;
}

MeanEstimate batch_means(std::span<const double> values, std::size_t batches) {
  if (batches < 2) throw Error(ErrorCode::InvalidArgument, "batch means needs at least two batches");
  MeanEstimate est = mean_estimate(values);
  const std::size_t length = values.size() / batches;
  if (length == 0) {
    throw Error(ErrorCode::InvalidArgument, "fewer samples than batches");
  }
  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    means[b] = pairwise_sum(values.subspan(b * length, length)) / static_cast<double>(length);
  }
  est.se = mean_estimate(means).se;
  return est;
}

CovarianceEstimate covariance_estimate(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "samples differ in length");
  CovarianceEstimate est;
  est.count = a.size();
  if (a.empty()) return est;
  // Shifting by the first sample keeps constant data exactly at zero covariance.
  std::vector<double> da(a.size());
  std::vector<double> db(b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    da[k] = a[k] - a[0];
    db[k] = b[k] - b[0];
  }
  const double mean_a = mean_estimate(da).mean;
  const double mean_b = mean_estimate(db).mean;
  std::vector<double> centered(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) centered[k] = (da[k] - mean_a) * (db[k] - mean_b);
  const MeanEstimate prod = mean_estimate(centered);
  est.covariance = prod.mean;
  est.se = prod.se;
  return est;
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const auto n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

}  // namespace fvqsd
