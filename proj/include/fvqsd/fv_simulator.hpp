#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fvqsd/chain.hpp"
#include "fvqsd/configuration.hpp"
#include "fvqsd/probability.hpp"
#include "fvqsd/rng.hpp"

namespace fvqsd {

struct StationaryParams {
  double burn_in = 50.0;
  std::size_t n_samples = 500;
  double spacing = 1.0;
};

/// Event-driven (Gillespie) simulation of the Fleming-Viot particle system:
/// each particle jumps x -> y at rate q(x,y) and, at rate q(x,0), copies the
/// position of a uniformly chosen other particle. Holds only precomputed
/// per-site tables, so one instance can be shared across threads.
class FvSimulator {
 public:
  explicit FvSimulator(const AbsorbingChain& chain);

  std::size_t sites() const noexcept { return exit_rate_.size(); }

  /// One sample of xi_t started from xi0.
  ParticleConfiguration simulate(const ParticleConfiguration& xi0, double t,
                                 const ReplicaSeed& seed) const;

  /// Configurations at each of `record_times` (nondecreasing, first >= 0)
  /// along one realization. Throws UnsortedTimes.
  std::vector<ParticleConfiguration> trajectory(const ParticleConfiguration& xi0,
                                                std::span<const double> record_times,
                                                const ReplicaSeed& seed) const;

  /// Empirical measures at burn_in + k * spacing, k = 1..n_samples, along one
  /// long run started from the balanced profile.
  std::vector<ProbabilityVector> stationary(const AbsorbingChain& chain, std::size_t particles,
                                            const StationaryParams& params,
                                            const ReplicaSeed& seed) const;

 private:
  struct Transition {
    double cumulative;
    Site target;
    bool absorb;
  };

  template <class OnRecord>
  void run(ParticleConfiguration& xi, std::span<const double> times, StreamRng& rng,
           OnRecord&& on_record) const;

  std::vector<double> exit_rate_;
  std::vector<std::vector<Transition>> transitions_;
  double max_exit_rate_ = 0.0;
};

ParticleConfiguration simulate(const AbsorbingChain& chain, const ParticleConfiguration& xi0, double t,
                               const ReplicaSeed& seed);

std::vector<ParticleConfiguration> simulate_trajectory(const AbsorbingChain& chain,
                                                       const ParticleConfiguration& xi0,
                                                       std::span<const double> record_times,
                                                       const ReplicaSeed& seed);

std::vector<ProbabilityVector> stationary_sampler(const AbsorbingChain& chain, std::size_t particles,
                                                  const StationaryParams& params,
                                                  const ReplicaSeed& seed);

}  // namespace fvqsd
