#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fvqsd {

/// Nonnegative weights on the sites summing to one within 1e-10.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;

  /// Validates an already normalized vector.
  static ProbabilityVector from_weights(std::vector<double> weights);
  /// Rescales a nonnegative vector with positive mass to unit sum.
  static ProbabilityVector normalized(std::vector<double> weights);
  static ProbabilityVector delta(std::size_t size, std::size_t site);
  static ProbabilityVector uniform(std::size_t size);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t x) const noexcept { return weights_[x]; }
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  explicit ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

/// Sum_x |a(x) - b(x)| (no factor 1/2).
double tv_distance(std::span<const double> a, std::span<const double> b);
double tv_distance(const ProbabilityVector& a, const ProbabilityVector& b);

/// (Sum_x (a(x) - b(x))^2)^{1/2}.
double l2_distance(std::span<const double> a, std::span<const double> b);
double l2_distance(const ProbabilityVector& a, const ProbabilityVector& b);

}  // namespace fvqsd
