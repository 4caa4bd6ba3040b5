#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fvqsd/chain.hpp"
#include "fvqsd/probability.hpp"

namespace fvqsd {

/// Survival mass below which the conditioned law is not computed.
inline constexpr double kMinSurvival = 1e-300;

/// Law at time t of the chain started from `mu`, conditioned on not having
/// been absorbed. Throws SurvivalUnderflow when the survival probability is
/// below kMinSurvival.
ProbabilityVector conditioned_law(const AbsorbingChain& chain, const ProbabilityVector& mu, double t,
                                  double tol = kDefaultTransientTol);

/// Largest step accepted by forward_ode: 0.1 / max_x |q(x,x)|.
double max_ode_step(const AbsorbingChain& chain);

/// Integrates the nonlinear forward equation
///   v_x' = sum_y q(y,x) v_y + v_x sum_y q(y,0) v_y
/// with classical RK4 at a fixed step no larger than `step`. Throws
/// StepTooLarge or NormalizationDrift (mass drift above 1e-6).
ProbabilityVector forward_ode(const AbsorbingChain& chain, const ProbabilityVector& mu, double t,
                              double step);

struct QsdSolution {
  ProbabilityVector nu;
  double alpha = 0.0;     ///< top eigenvalue of the sub-generator
  double residual = 0.0;  ///< sup |nu Q - alpha nu|
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<double> theta_estimate;
};

/// Quasi-stationary distribution by power iteration on I + hQ,
/// h = 0.5 / max_x |q(x,x)|, from the uniform vector. Stops when successive
/// iterates differ by less than `tol` in sup norm and the residual is at most
/// `tol` (or the rounding floor 64 eps max|q(x,x)| n, if larger). On hitting
/// `max_iter` the last iterate is returned with converged == false.
QsdSolution qsd(const AbsorbingChain& chain, double tol = 1e-12, std::size_t max_iter = 1'000'000);

struct DecayFit {
  double theta = 0.0;  ///< minus the fitted slope
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> times;
  std::vector<double> distances;  ///< ||T_t mu - nu|| at each time
};

/// Least-squares fit of log ||T_t mu - nu|| against t over `t_grid`
/// (at least 4 increasing times). Throws DistanceUnderflow when a distance
/// falls below 1e-12.
DecayFit decay_rate_estimate(const AbsorbingChain& chain, const ProbabilityVector& mu,
                             const ProbabilityVector& nu, std::span<const double> t_grid);

}  // namespace fvqsd
