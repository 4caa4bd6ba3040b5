#include "fvqsd/fv_simulator.hpp"

#include <cmath>
#include <string>

#include "fvqsd/error.hpp"

namespace fvqsd {
namespace {

// Exact total rate is recomputed this often to bound floating-point drift.
constexpr std::size_t kRateRefreshEvents = 4096;

void check_times(std::span<const double> times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k])) throw Error(ErrorCode::NonFiniteTime, "record times must be finite");
    if (times[k] < 0.0) throw Error(ErrorCode::UnsortedTimes, "record times must be nonnegative");
    if (k > 0 && times[k] < times[k - 1]) {
      throw Error(ErrorCode::UnsortedTimes, "record times must be sorted");
    }
  }
}

}  // namespace

FvSimulator::FvSimulator(const AbsorbingChain& chain)
    : exit_rate_(chain.size()), transitions_(chain.size()), max_exit_rate_(chain.max_exit_rate()) {
  const std::size_t n = chain.size();
  for (std::size_t x = 0; x < n; ++x) {
    double cumulative = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || chain.rate(x, y) <= 0.0) continue;
      cumulative += chain.rate(x, y);
      transitions_[x].push_back({cumulative, static_cast<Site>(y), false});
    }
    if (chain.absorption(x) > 0.0) {
      cumulative += chain.absorption(x);
      transitions_[x].push_back({cumulative, 0, true});
    }
    exit_rate_[x] = cumulative;
  }
}

template <class OnRecord>
void FvSimulator::run(ParticleConfiguration& xi, std::span<const double> times, StreamRng& rng,
                      OnRecord&& on_record) const {
  const std::size_t particles = xi.size();
  if (xi.sites() != sites()) throw Error(ErrorCode::DimensionMismatch, "configuration does not match chain");

  auto total_rate = [&] {
    double r = 0.0;
    for (Site s : xi.positions()) r += exit_rate_[s];
    return r;
  };
  double rate = total_rate();
  double now = 0.0;
  std::size_t next_record = 0;
  std::size_t events = 0;

  while (next_record < times.size()) {
    if (rate <= 0.0) {
      while (next_record < times.size()) on_record(next_record++, xi);
      return;
    }
    const double event_time = now + rng.exponential(rate);
    while (next_record < times.size() && times[next_record] < event_time) {
      on_record(next_record++, xi);
    }
    if (next_record == times.size()) return;
    now = event_time;

    // Particle i with probability exit(xi(i)) / R, by rejection.
    std::size_t i = 0;
    do {
      i = rng.below(particles);
    } while (!(rng.uniform() * max_exit_rate_ < exit_rate_[xi[i]]));

    const Site from = xi[i];
    const auto& table = transitions_[from];
    const double u = rng.uniform() * exit_rate_[from];
    std::size_t pick = 0;
    while (pick + 1 < table.size() && table[pick].cumulative <= u) ++pick;

    Site to = table[pick].target;
    if (table[pick].absorb) {
      std::size_t j = 0;
      do {
        j = rng.below(particles);
      } while (j == i);
      to = xi[j];
    }
    xi.set(i, to);
    rate += exit_rate_[to] - exit_rate_[from];
    if (++events % kRateRefreshEvents == 0) rate = total_rate();
  }
}

ParticleConfiguration FvSimulator::simulate(const ParticleConfiguration& xi0, double t,
                                            const ReplicaSeed& seed) const {
  const double times[1] = {t};
  check_times(times);
  ParticleConfiguration xi = xi0;
  StreamRng rng(seed);
  run(xi, times, rng, [](std::size_t, const ParticleConfiguration&) {});
  return xi;
}

std::vector<ParticleConfiguration> FvSimulator::trajectory(const ParticleConfiguration& xi0,
                                                           std::span<const double> record_times,
                                                           const ReplicaSeed& seed) const {
  check_times(record_times);
  std::vector<ParticleConfiguration> out;
  out.reserve(record_times.size());
  ParticleConfiguration xi = xi0;
  StreamRng rng(seed);
  run(xi, record_times, rng, [&](std::size_t, const ParticleConfiguration& c) { out.push_back(c); });
  return out;
}

std::vector<ProbabilityVector> FvSimulator::stationary(const AbsorbingChain& chain, std::size_t particles,
                                                       const StationaryParams& params,
                                                       const ReplicaSeed& seed) const {
  if (!(params.burn_in > 0.0) || !(params.spacing > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "burn_in and spacing must be positive");
  }
  std::vector<double> times(params.n_samples);
  for (std::size_t k = 0; k < params.n_samples; ++k) {
    times[k] = params.burn_in + static_cast<double>(k + 1) * params.spacing;
  }
  std::vector<ProbabilityVector> out;
  out.reserve(params.n_samples);
  ParticleConfiguration xi = expand_profile(chain, ProbabilityVector::uniform(chain.size()), particles);
  StreamRng rng(seed);
  run(xi, times, rng,
      [&](std::size_t, const ParticleConfiguration& c) { out.push_back(empirical_measure(c)); });
  return out;
}

ParticleConfiguration simulate(const AbsorbingChain& chain, const ParticleConfiguration& xi0, double t,
                               const ReplicaSeed& seed) {
  return FvSimulator(chain).simulate(xi0, t, seed);
}

std::vector<ParticleConfiguration> simulate_trajectory(const AbsorbingChain& chain,
                                                       const ParticleConfiguration& xi0,
                                                       std::span<const double> record_times,
                                                       const ReplicaSeed& seed) {
  return FvSimulator(chain).trajectory(xi0, record_times, seed);
}

std::vector<ProbabilityVector> stationary_sampler(const AbsorbingChain& chain, std::size_t particles,
                                                  const StationaryParams& params,
                                                  const ReplicaSeed& seed) {
  return FvSimulator(chain).stationary(chain, particles, params, seed);
}

}  // namespace fvqsd
