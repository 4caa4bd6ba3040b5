#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fvqsd/chain.hpp"
#include "fvqsd/configuration.hpp"
#include "fvqsd/fv_simulator.hpp"
#include "fvqsd/parallel.hpp"
#include "fvqsd/probability.hpp"
#include "fvqsd/stats.hpp"

namespace fvqsd {

/// 1{x=y}/N + (2/N)(e^{2Ct} - 1).
double correlation_bound(std::size_t particles, double max_absorption, double t, bool same_site);

struct CorrelationEstimate {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t particles = 0;
  double t = 0.0;
  double covariance = 0.0;  ///< E[m_x m_y] - E[m_x] E[m_y], plug-in
  double se = 0.0;
  std::size_t replicas = 0;
  double bound = 0.0;
};

/// Covariances of (m_x(xi_t), m_y(xi_t)) over independent replicas of the
/// simulator started from `xi0`, one estimate per requested pair.
std::vector<CorrelationEstimate> correlation_experiment(
    const AbsorbingChain& chain, const ParticleConfiguration& xi0, double t,
    std::span<const std::pair<std::size_t, std::size_t>> pairs, std::size_t replicas,
    std::uint64_t master_seed, const Execution& exec = {});

CorrelationEstimate correlation_experiment(const AbsorbingChain& chain, const ParticleConfiguration& xi0,
                                           double t, std::size_t x, std::size_t y, std::size_t replicas,
                                           std::uint64_t master_seed, const Execution& exec = {});

/// Mean empirical measure E[m(xi_t)] at each time, with i.i.d. standard errors.
/// result[k][x] is the estimate for times[k], site x.
std::vector<std::vector<MeanEstimate>> occupation_means(const AbsorbingChain& chain,
                                                        const ParticleConfiguration& xi0,
                                                        std::span<const double> times, std::size_t replicas,
                                                        std::uint64_t master_seed, const Execution& exec = {});

struct CurvePoint {
  std::size_t particles = 0;
  double estimate = 0.0;
  double se = 0.0;
  std::size_t worst_profile = 0;        ///< convergence: profile attaining the max
  std::vector<double> profile_estimates;  ///< convergence: one entry per profile
  std::vector<MeanEstimate> mean_measure;  ///< qsd_profile: mean m(x) per site
};

struct ConvergenceCurve {
  std::vector<CurvePoint> points;  ///< increasing in particles
};

/// Point masses on every site followed by the uniform profile.
std::vector<ProbabilityVector> extreme_profiles(const AbsorbingChain& chain);

/// For each N: max over profiles of the Monte Carlo mean of
/// ||m(xi_t) - T_t m(xi_0)|| with xi_0 = expand_profile(profile, N).
ConvergenceCurve convergence_experiment(const AbsorbingChain& chain,
                                        std::span<const ProbabilityVector> profiles, double t,
                                        std::span<const std::size_t> particle_counts, std::size_t replicas,
                                        std::uint64_t master_seed, const Execution& exec = {});

/// Number of batches per run used for batch-means standard errors.
inline constexpr std::size_t kBatchesPerRun = 20;

/// For each N: mean over stationary samples of ||m - nu||, pooled over
/// `runs` independent long runs, with batch-means standard errors.
ConvergenceCurve qsd_profile_experiment(const AbsorbingChain& chain, const ProbabilityVector& nu,
                                        std::span<const std::size_t> particle_counts,
                                        const StationaryParams& params, std::size_t runs,
                                        std::uint64_t master_seed, const Execution& exec = {});

struct ProductMomentEstimate {
  std::size_t particles = 0;
  double estimate = 0.0;  ///< stationary mean of prod_{x in U} m_x
  double se = 0.0;
  double target = 0.0;  ///< prod_{x in U} nu(x)
};

ProductMomentEstimate product_moment_experiment(const AbsorbingChain& chain, const ProbabilityVector& nu,
                                                std::span<const std::size_t> subset, std::size_t particles,
                                                const StationaryParams& params, std::size_t runs,
                                                std::uint64_t master_seed, const Execution& exec = {});

}  // namespace fvqsd
