#include "fvqsd/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fvqsd/error.hpp"

namespace fvqsd {
namespace {

void check_dimension(const AbsorbingChain& chain, const ProbabilityVector& mu) {
  if (mu.size() != chain.size()) {
    throw Error(ErrorCode::DimensionMismatch, "initial law has " + std::to_string(mu.size()) +
                                                  " entries, chain has " + std::to_string(chain.size()));
  }
}

// Right-hand side of the conditioned forward equation.
void conditioned_drift(const AbsorbingChain& chain, std::span<const double> v, std::span<double> out) {
  const std::size_t n = chain.size();
  double killing = 0.0;
  for (std::size_t y = 0; y < n; ++y) killing += chain.absorption(y) * v[y];
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t y = 0; y < n; ++y) {
    const auto row = chain.generator().row(y);
    for (std::size_t x = 0; x < n; ++x) out[x] += row[x] * v[y];
  }
  for (std::size_t x = 0; x < n; ++x) out[x] += killing * v[x];
}

}  // namespace

ProbabilityVector conditioned_law(const AbsorbingChain& chain, const ProbabilityVector& mu, double t,
                                  double tol) {
  check_dimension(chain, mu);
  std::vector<double> v(mu.weights().begin(), mu.weights().end());
  const double log_survival = detail::propagate_uniformized(chain, v, t, tol, true);
  if (!(log_survival >= std::log(kMinSurvival))) {
    throw Error(ErrorCode::SurvivalUnderflow,
                "survival probability at t=" + std::to_string(t) + " is below 1e-300");
  }
  return ProbabilityVector::normalized(std::move(v));
}

double max_ode_step(const AbsorbingChain& chain) {
  const double rate = chain.max_exit_rate();
  return rate > 0.0 ? 0.1 / rate : std::numeric_limits<double>::infinity();
}

ProbabilityVector forward_ode(const AbsorbingChain& chain, const ProbabilityVector& mu, double t,
                              double step) {
  check_dimension(chain, mu);
  if (!std::isfinite(t)) throw Error(ErrorCode::NonFiniteTime, "time must be finite");
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "time must be nonnegative");
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  if (step > max_ode_step(chain) * (1.0 + 1e-12)) {
    throw Error(ErrorCode::StepTooLarge, "step " + std::to_string(step) + " exceeds 0.1/max|q(x,x)| = " +
                                             std::to_string(max_ode_step(chain)));
  }
  const std::size_t n = chain.size();
  std::vector<double> v(mu.weights().begin(), mu.weights().end());
  if (t == 0.0) return mu;

  const auto steps = static_cast<std::size_t>(std::ceil(t / step));
  const double h = t / static_cast<double>(steps);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t s = 0; s < steps; ++s) {
    conditioned_drift(chain, v, k1);
    for (std::size_t x = 0; x < n; ++x) tmp[x] = v[x] + 0.5 * h * k1[x];
    conditioned_drift(chain, tmp, k2);
    for (std::size_t x = 0; x < n; ++x) tmp[x] = v[x] + 0.5 * h * k2[x];
    conditioned_drift(chain, tmp, k3);
    for (std::size_t x = 0; x < n; ++x) tmp[x] = v[x] + h * k3[x];
    conditioned_drift(chain, tmp, k4);
    for (std::size_t x = 0; x < n; ++x) v[x] += h / 6.0 * (k1[x] + 2.0 * k2[x] + 2.0 * k3[x] + k4[x]);
  }

  double mass = 0.0;
  for (double& w : v) {
    w = std::max(w, 0.0);
    mass += w;
  }
  if (!(std::abs(mass - 1.0) <= 1e-6)) {
    throw Error(ErrorCode::NormalizationDrift,
                "mass drifted to " + std::to_string(mass) + " during integration");
  }
  return ProbabilityVector::normalized(std::move(v));
}

QsdSolution qsd(const AbsorbingChain& chain, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorCode::ToleranceNotPositive, "tolerance must be positive");
  const std::size_t n = chain.size();
  QsdSolution sol;
  const double rate = chain.max_exit_rate();
  if (rate == 0.0) {
    sol.nu = ProbabilityVector::uniform(n);
    sol.converged = true;
    return sol;
  }

  const double h = 0.5 / rate;
  DenseMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m(x, y) = h * chain.rate(x, y) + (x == y ? 1.0 : 0.0);
  }

  // sup |nu Q - alpha nu| with alpha from the Rayleigh quotient of I + hQ.
  auto residual_of = [&](const std::vector<double>& v, double& alpha) {
    double rho = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) rho += v[x] * m(x, y);
    }
    alpha = (rho - 1.0) / h;
    double r = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      double lhs = 0.0;
      for (std::size_t x = 0; x < n; ++x) lhs += v[x] * chain.rate(x, y);
      r = std::max(r, std::abs(lhs - alpha * v[y]));
    }
    return r;
  };
  // Below this the residual is dominated by rounding in nu Q.
  const double residual_floor =
      64.0 * std::numeric_limits<double>::epsilon() * rate * static_cast<double>(n);
  const double residual_target = std::max(tol, residual_floor);

  std::vector<double> nu(n, 1.0 / static_cast<double>(n)), next(n);
  for (sol.iterations = 1; sol.iterations <= max_iter; ++sol.iterations) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      const auto row = m.row(x);
      for (std::size_t y = 0; y < n; ++y) next[y] += nu[x] * row[y];
    }
    double mass = 0.0;
    for (double w : next) mass += w;
    double diff = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      next[x] /= mass;
      diff = std::max(diff, std::abs(next[x] - nu[x]));
    }
    nu.swap(next);
    if (diff < tol && residual_of(nu, sol.alpha) <= residual_target) {
      sol.converged = true;
      break;
    }
  }
  if (!sol.converged) sol.iterations = max_iter;
  sol.residual = residual_of(nu, sol.alpha);
  sol.nu = ProbabilityVector::normalized(std::move(nu));
  return sol;
}

DecayFit decay_rate_estimate(const AbsorbingChain& chain, const ProbabilityVector& mu,
                             const ProbabilityVector& nu, std::span<const double> t_grid) {
  if (t_grid.size() < 4) throw Error(ErrorCode::InvalidArgument, "t_grid needs at least 4 times");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k - 1])) throw Error(ErrorCode::UnsortedTimes, "t_grid must be increasing");
  }
  DecayFit fit;
  for (double t : t_grid) {
    const double d = tv_distance(conditioned_law(chain, mu, t), nu);
    if (!(d > 1e-12)) {
      throw Error(ErrorCode::DistanceUnderflow,
                  "distance to the QSD is below 1e-12 at t=" + std::to_string(t));
    }
    fit.times.push_back(t);
    fit.distances.push_back(d);
  }

  const auto count = static_cast<double>(fit.times.size());
  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t k = 0; k < fit.times.size(); ++k) {
    mean_t += fit.times[k];
    mean_y += std::log(fit.distances[k]);
  }
  mean_t /= count;
  mean_y /= count;
  double stt = 0.0, sty = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < fit.times.size(); ++k) {
    const double dt = fit.times[k] - mean_t;
    const double dy = std::log(fit.distances[k]) - mean_y;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  fit.slope = sty / stt;
  fit.intercept = mean_y - fit.slope * mean_t;
  fit.theta = -fit.slope;
  fit.r_squared = syy > 0.0 ? (sty * sty) / (stt * syy) : 1.0;
  return fit;
}

}  // namespace fvqsd
