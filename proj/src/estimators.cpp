#include "fvqsd/estimators.hpp"

#include <cmath>
#include <string>

#include "fvqsd/error.hpp"
#include "fvqsd/rng.hpp"
#include "fvqsd/semigroup.hpp"

namespace fvqsd {
namespace {

void check_replicas(std::size_t replicas) {
  if (replicas == 0) throw Error(ErrorCode::InvalidArgument, "replicas must be positive");
}

void check_increasing(std::span<const std::size_t> counts) {
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < 2) throw Error(ErrorCode::InvalidArgument, "particle counts must be at least 2");
    if (k > 0 && counts[k] <= counts[k - 1]) {
      throw Error(ErrorCode::InvalidArgument, "particle counts must be strictly increasing");
    }
  }
}

// Stationary samples of every run, in run order: samples[run][k].
std::vector<std::vector<ProbabilityVector>> stationary_runs(const AbsorbingChain& chain, std::size_t particles,
                                                            const StationaryParams& params, std::size_t runs,
                                                            std::uint64_t master_seed, const Execution& exec) {
  check_replicas(runs);
  if (params.n_samples < kBatchesPerRun) {
    throw Error(ErrorCode::InvalidArgument, "n_samples must be at least 20 for batch means");
  }
  const FvSimulator sim(chain);
  std::vector<std::vector<ProbabilityVector>> samples(runs);
  for_each_replica(runs, exec, [&](std::size_t r) {
    samples[r] = sim.stationary(chain, particles, params, ReplicaSeed{master_seed, r});
  });
  return samples;
}

// Pools per-run series: mean over every sample, SE from the batch means of all runs.
MeanEstimate pooled_batch_means(const std::vector<std::vector<double>>& series) {
  std::vector<double> all;
  std::vector<double> batch_means_all;
  for (const auto& s : series) {
    all.insert(all.end(), s.begin(), s.end());
    const std::size_t length = s.size() / kBatchesPerRun;
    for (std::size_t b = 0; b < kBatchesPerRun; ++b) {
      batch_means_all.push_back(pairwise_sum(std::span(s).subspan(b * length, length)) /
                                static_cast<double>(length));
    }
  }
  MeanEstimate est = mean_estimate(all);
  est.se = mean_estimate(batch_means_all).se;
  return est;
}

}  // namespace

double correlation_bound(std::size_t particles, double max_absorption, double t, bool same_site) {
  const auto n = static_cast<double>(particles);
  return (same_site ? 1.0 / n : 0.0) + 2.0 / n * std::expm1(2.0 * max_absorption * t);
}

std::vector<CorrelationEstimate> correlation_experiment(
    const AbsorbingChain& chain, const ParticleConfiguration& xi0, double t,
    std::span<const std::pair<std::size_t, std::size_t>> pairs, std::size_t replicas,
    std::uint64_t master_seed, const Execution& exec) {
  check_replicas(replicas);
  const std::size_t n = chain.size();
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
  const FvSimulator sim(chain);
  std::vector<std::vector<double>> m(n, std::vector<double>(replicas));
  for_each_replica(replicas, exec, [&](std::size_t r) {
    const ProbabilityVector mr = empirical_measure(sim.simulate(xi0, t, ReplicaSeed{master_seed, r}));
    for (std::size_t x = 0; x < n; ++x) m[x][r] = mr[x];
  });

  std::vector<CorrelationEstimate> out;
  for (const auto& [x, y] : pairs) {
    const CovarianceEstimate cov = covariance_estimate(m[x], m[y]);
    CorrelationEstimate est;
    est.x = x;
    est.y = y;
    est.particles = xi0.size();
    est.t = t;
    est.covariance = cov.covariance;
    est.se = cov.se;
    est.replicas = replicas;
    est.bound = correlation_bound(xi0.size(), chain.max_absorption(), t, x == y);
    out.push_back(est);
  }
  return out;
}

CorrelationEstimate correlation_experiment(const AbsorbingChain& chain, const ParticleConfiguration& xi0,
                                           double t, std::size_t x, std::size_t y, std::size_t replicas,
                                           std::uint64_t master_seed, const Execution& exec) {
  const std::pair<std::size_t, std::size_t> pair{x, y};
  return correlation_experiment(chain, xi0, t, std::span(&pair, 1), replicas, master_seed, exec).front();
}

std::vector<std::vector<MeanEstimate>> occupation_means(const AbsorbingChain& chain,
                                                        const ParticleConfiguration& xi0,
                                                        std::span<const double> times, std::size_t replicas,
                                                        std::uint64_t master_seed, const Execution& exec) {
  check_replicas(replicas);
  const std::size_t n = chain.size();
  const FvSimulator sim(chain);
  // values[k * n + x][r]
  std::vector<std::vector<double>> values(times.size() * n, std::vector<double>(replicas));
  for_each_replica(replicas, exec, [&](std::size_t r) {
    const auto path = sim.trajectory(xi0, times, ReplicaSeed{master_seed, r});
    for (std::size_t k = 0; k < path.size(); ++k) {
      const ProbabilityVector m = empirical_measure(path[k]);
      for (std::size_t x = 0; x < n; ++x) values[k * n + x][r] = m[x];
    }
  });
  std::vector<std::vector<MeanEstimate>> out(times.size(), std::vector<MeanEstimate>(n));
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) out[k][x] = mean_estimate(values[k * n + x]);
  }
  return out;
}

std::vector<ProbabilityVector> extreme_profiles(const AbsorbingChain& chain) {
  std::vector<ProbabilityVector> profiles;
  for (std::size_t x = 0; x < chain.size(); ++x) profiles.push_back(ProbabilityVector::delta(chain.size(), x));
  profiles.push_back(ProbabilityVector::uniform(chain.size()));
  return profiles;
}

ConvergenceCurve convergence_experiment(const AbsorbingChain& chain,
                                        std::span<const ProbabilityVector> profiles, double t,
                                        std::span<const std::size_t> particle_counts, std::size_t replicas,
                                        std::uint64_t master_seed, const Execution& exec) {
  check_replicas(replicas);
  check_increasing(particle_counts);
  if (profiles.empty()) throw Error(ErrorCode::InvalidArgument, "at least one initial profile is required");
  const FvSimulator sim(chain);
  const ReplicaSeed root{master_seed, 0};

  ConvergenceCurve curve;
  for (std::size_t a = 0; a < particle_counts.size(); ++a) {
    CurvePoint point;
    point.particles = particle_counts[a];
    for (std::size_t b = 0; b < profiles.size(); ++b) {
      const ParticleConfiguration xi0 = expand_profile(chain, profiles[b], point.particles);
      const ProbabilityVector target = conditioned_law(chain, empirical_measure(xi0), t);
      const std::uint64_t seed = root.child(a * 65536 + b).master_seed;
      std::vector<double> dist(replicas);
      for_each_replica(replicas, exec, [&](std::size_t r) {
        dist[r] = tv_distance(empirical_measure(sim.simulate(xi0, t, ReplicaSeed{seed, r})), target);
      });
      const MeanEstimate est = mean_estimate(dist);
      point.profile_estimates.push_back(est.mean);
      if (b == 0 || est.mean > point.estimate) {
        point.estimate = est.mean;
        point.se = est.se;
        point.worst_profile = b;
      }
    }
    curve.points.push_back(std::move(point));
  }
  return curve;
}

ConvergenceCurve qsd_profile_experiment(const AbsorbingChain& chain, const ProbabilityVector& nu,
                                        std::span<const std::size_t> particle_counts,
                                        const StationaryParams& params, std::size_t runs,
                                        std::uint64_t master_seed, const Execution& exec) {
  check_increasing(particle_counts);
  if (nu.size() != chain.size()) throw Error(ErrorCode::DimensionMismatch, "nu does not match the chain");
  const std::size_t n = chain.size();
  const ReplicaSeed root{master_seed, 0};

  ConvergenceCurve curve;
  for (std::size_t a = 0; a < particle_counts.size(); ++a) {
    const auto samples =
        stationary_runs(chain, particle_counts[a], params, runs, root.child(a).master_seed, exec);
    std::vector<std::vector<double>> dist(runs);
    std::vector<std::vector<std::vector<double>>> site(n, std::vector<std::vector<double>>(runs));
    for (std::size_t r = 0; r < runs; ++r) {
      for (const ProbabilityVector& m : samples[r]) {
        dist[r].push_back(tv_distance(m, nu));
        for (std::size_t x = 0; x < n; ++x) site[x][r].push_back(m[x]);
      }
    }
    CurvePoint point;
    point.particles = particle_counts[a];
    const MeanEstimate est = pooled_batch_means(dist);
    point.estimate = est.mean;
    point.se = est.se;
    for (std::size_t x = 0; x < n; ++x) point.mean_measure.push_back(pooled_batch_means(site[x]));
    curve.points.push_back(std::move(point));
  }
  return curve;
}

ProductMomentEstimate product_moment_experiment(const AbsorbingChain& chain, const ProbabilityVector& nu,
                                                std::span<const std::size_t> subset, std::size_t particles,
                                                const StationaryParams& params, std::size_t runs,
                                                std::uint64_t master_seed, const Execution& exec) {
  if (subset.empty()) throw Error(ErrorCode::InvalidArgument, "the site subset U must be nonempty");
  if (nu.size() != chain.size()) throw Error(ErrorCode::DimensionMismatch, "nu does not match the chain");
  for (std::size_t x : subset) {
    if (x >= chain.size()) throw Error(ErrorCode::InvalidArgument, "site index out of range");
  }
  const auto samples = stationary_runs(chain, particles, params, runs, master_seed, exec);
  std::vector<std::vector<double>> product(runs);
  for (std::size_t r = 0; r < runs; ++r) {
    for (const ProbabilityVector& m : samples[r]) {
      double p = 1.0;
      for (std::size_t x : subset) p *= m[x];
      product[r].push_back(p);
    }
  }
  ProductMomentEstimate out;
  out.particles = particles;
  const MeanEstimate est = pooled_batch_means(product);
  out.estimate = est.mean;
  out.se = est.se;
  out.target = 1.0;
  for (std::size_t x : subset) out.target *= nu[x];
  return out;
}

}  // namespace fvqsd
