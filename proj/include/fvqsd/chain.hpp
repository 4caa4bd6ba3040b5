#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fvqsd/dense_matrix.hpp"

namespace fvqsd {

/// Largest accepted transition or absorption rate.
inline constexpr double kMaxRate = 1e6;

/// Default Poisson tail mass for uniformization.
inline constexpr double kDefaultTransientTol = 1e-12;

/// Unvalidated chain description as read from disk. Diagonal entries of
/// `rates` are ignored.
struct RawChain {
  std::vector<std::string> states;
  std::vector<std::vector<double>> rates;
  std::vector<double> absorption;
};

struct ValidationOptions {
  /// Reject chains with no absorption at all. Numerical routines (transient
  /// analysis, forward equation) remain meaningful without absorption, so
  /// tests and the semigroup tooling may switch this off.
  bool require_absorption = true;
};

/// A continuous-time Markov chain on a finite set of sites plus a cemetery
/// state. Immutable after validation.
class AbsorbingChain {
 public:
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }

  /// Sub-generator restricted to the sites. Off-diagonal entries are the jump
  /// rates, the diagonal is minus the total exit rate including absorption, so
  /// row x sums to -absorption(x).
  const DenseMatrix& generator() const noexcept { return generator_; }
  double rate(std::size_t x, std::size_t y) const noexcept { return generator_(x, y); }

  std::span<const double> absorption() const noexcept { return absorption_; }
  double absorption(std::size_t x) const noexcept { return absorption_[x]; }

  /// Total exit rate -q(x,x).
  double exit_rate(std::size_t x) const noexcept { return -generator_(x, x); }
  double max_exit_rate() const noexcept { return max_exit_rate_; }

  /// Maximum absorption rate C.
  double max_absorption() const noexcept { return max_absorption_; }

  /// Maximum jump rate within the sites, q̄ = max_x sum_{y != x} q(x,y).
  double max_jump_rate() const noexcept { return max_jump_rate_; }

  /// p(x,y) = q(x,y)/q̄ off the diagonal; rows sum to one.
  const DenseMatrix& jump_kernel() const noexcept { return jump_kernel_; }

  /// Index of a site by name, or size() if absent.
  std::size_t index_of(const std::string& name) const noexcept;

 private:
  friend AbsorbingChain validate(const RawChain&, ValidationOptions);

  std::vector<std::string> states_;
  DenseMatrix generator_;
  std::vector<double> absorption_;
  DenseMatrix jump_kernel_;
  double max_exit_rate_ = 0.0;
  double max_absorption_ = 0.0;
  double max_jump_rate_ = 0.0;
};

/// Throws Error with NegativeRate, RateTooLarge, DimensionMismatch,
/// NotIrreducibleOnLambda or NoAbsorption.
AbsorbingChain validate(const RawChain& raw, ValidationOptions options = {});

/// w = mu · exp(t Q) for the sub-generator Q, by uniformization. `mu` may be
/// any nonnegative vector; each component is accurate to `tol` times the mass
/// of `mu`.
std::vector<double> transient_vector(const AbsorbingChain& chain, std::span<const double> mu,
                                     double t, double tol = kDefaultTransientTol);

struct UniquenessCondition {
  bool holds = false;
  double left = 0.0;   ///< sum_z min_{x != z} q(x,z); 0 for a single site
  double right = 0.0;  ///< max_x q(x,0)
};

/// Diagnostic for the sufficient condition sum_z inf_{x != z} q(x,z) > max_x q(x,0).
UniquenessCondition check_uniqueness_condition(const AbsorbingChain& chain);

namespace detail {

/// Propagates `v` in place through exp(t Q). With `renormalize` set the vector
/// is rescaled to unit mass after every uniformization block. Returns the
/// natural log of the mass of the unnormalized result v·exp(tQ).
double propagate_uniformized(const AbsorbingChain& chain, std::vector<double>& v, double t,
                             double tol, bool renormalize);

}  // namespace detail

}  // namespace fvqsd
