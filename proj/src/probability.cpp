#include "fvqsd/probability.hpp"

#include <cmath>
#include <string>

#include "fvqsd/error.hpp"

namespace fvqsd {
namespace {

void check_nonnegative(const std::vector<double>& w) {
  if (w.empty()) throw Error(ErrorCode::DimensionMismatch, "probability vector must be nonempty");
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (!std::isfinite(w[x]) || w[x] < 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight " + std::to_string(x) + " must be finite and nonnegative");
    }
  }
}

void check_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
}

}  // namespace

ProbabilityVector ProbabilityVector::from_weights(std::vector<double> weights) {
  check_nonnegative(weights);
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "weights sum to " + std::to_string(total) + ", not 1");
  }
  return ProbabilityVector(std::move(weights));
}

ProbabilityVector ProbabilityVector::normalized(std::vector<double> weights) {
  check_nonnegative(weights);
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "weights have zero mass");
  for (double& w : weights) w /= total;
  return ProbabilityVector(std::move(weights));
}

ProbabilityVector ProbabilityVector::delta(std::size_t size, std::size_t site) {
  if (site >= size) throw Error(ErrorCode::DimensionMismatch, "delta site out of range");
  std::vector<double> w(size, 0.0);
  w[site] = 1.0;
  return ProbabilityVector(std::move(w));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::DimensionMismatch, "probability vector must be nonempty");
  return ProbabilityVector(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
  check_same_size(a, b);
  double d = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) d += std::abs(a[x] - b[x]);
  return d;
}

double tv_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  return tv_distance(a.weights(), b.weights());
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
  check_same_size(a, b);
  double d = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) d += (a[x] - b[x]) * (a[x] - b[x]);
  return std::sqrt(d);
}

double l2_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  return l2_distance(a.weights(), b.weights());
}

}  // namespace fvqsd
