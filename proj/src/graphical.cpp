#include "fvqsd/graphical.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "fvqsd/error.hpp"
#include "fvqsd/stats.hpp"

namespace fvqsd {
namespace {

// Next time of a Poisson process of the given rate; redrawn if rounding would
// repeat the previous time.
double next_arrival(StreamRng& rng, double previous, double rate) {
  double t = previous;
  while (t <= previous) t = previous + rng.exponential(rate);
  return t;
}

Site sample_row(StreamRng& rng, std::span<const double> cumulative) {
  const double u = rng.uniform() * cumulative.back();
  std::size_t y = 0;
  while (y + 1 < cumulative.size() && cumulative[y] <= u) ++y;
  return static_cast<Site>(y);
}

}  // namespace

MarkRealization::MarkRealization(std::size_t particles, std::size_t sites, double horizon,
                                 std::vector<std::vector<InternalMark>> internal,
                                 std::vector<std::vector<VoterMark>> voter)
    : sites_(sites), horizon_(horizon), internal_(std::move(internal)), voter_(std::move(voter)) {
  if (internal_.size() != particles || voter_.size() != particles) {
    throw Error(ErrorCode::DimensionMismatch, "mark lists must have one entry per particle");
  }
  if (!std::isfinite(horizon_) || horizon_ < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be finite and nonnegative");
  }
  auto check_time = [&](double t, double& previous, std::size_t i) {
    if (!(t >= 0.0 && t <= horizon_) || (previous >= 0.0 && !(t > previous))) {
      throw Error(ErrorCode::UnsortedTimes,
                  "marks of particle " + std::to_string(i) + " must be increasing within the window");
    }
    previous = t;
  };
  for (std::size_t i = 0; i < particles; ++i) {
    double previous = -1.0;
    for (std::size_t k = 0; k < internal_[i].size(); ++k) {
      const auto& m = internal_[i][k];
      check_time(m.time, previous, i);
      if (m.map.size() != sites_) throw Error(ErrorCode::DimensionMismatch, "internal mark map has wrong size");
      for (Site s : m.map) {
        if (s >= sites_) throw Error(ErrorCode::InvalidArgument, "internal mark maps outside the sites");
      }
      schedule_.push_back({m.time, static_cast<std::uint32_t>(i), MarkKind::Internal,
                           static_cast<std::uint32_t>(k)});
    }
    previous = -1.0;
    for (std::size_t k = 0; k < voter_[i].size(); ++k) {
      const auto& m = voter_[i][k];
      check_time(m.time, previous, i);
      if (m.source >= particles || m.source == i) {
        throw Error(ErrorCode::InvalidArgument, "voter mark source must be another particle");
      }
      if (m.fires.size() != sites_) throw Error(ErrorCode::DimensionMismatch, "voter mark field has wrong size");
      schedule_.push_back({m.time, static_cast<std::uint32_t>(i), MarkKind::Voter,
                           static_cast<std::uint32_t>(k)});
    }
  }
  std::sort(schedule_.begin(), schedule_.end(), [](const ScheduledMark& a, const ScheduledMark& b) {
    return std::tie(a.time, a.particle, a.kind) < std::tie(b.time, b.particle, b.kind);
  });
}

bool operator==(const MarkRealization& a, const MarkRealization& b) {
  if (a.sites_ != b.sites_ || a.horizon_ != b.horizon_ || a.particles() != b.particles()) return false;
  for (std::size_t i = 0; i < a.particles(); ++i) {
    const auto& ai = a.internal_[i];
    const auto& bi = b.internal_[i];
    if (ai.size() != bi.size()) return false;
    for (std::size_t k = 0; k < ai.size(); ++k) {
      if (ai[k].time != bi[k].time || ai[k].map != bi[k].map) return false;
    }
    const auto& av = a.voter_[i];
    const auto& bv = b.voter_[i];
    if (av.size() != bv.size()) return false;
    for (std::size_t k = 0; k < av.size(); ++k) {
      if (av[k].time != bv[k].time || av[k].source != bv[k].source || av[k].fires != bv[k].fires) return false;
    }
  }
  return true;
}

MarkRealization sample_marks(const AbsorbingChain& chain, std::size_t particles, double horizon,
                             const ReplicaSeed& seed) {
  if (particles < 2) throw Error(ErrorCode::InvalidArgument, "need at least two particles");
  if (!std::isfinite(horizon) || horizon < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be finite and nonnegative");
  }
  const std::size_t n = chain.size();
  const double jump_rate = chain.max_jump_rate();
  const double voter_rate = chain.max_absorption();

  std::vector<std::vector<double>> cumulative(n, std::vector<double>(n));
  for (std::size_t x = 0; x < n; ++x) {
    double c = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      c += chain.jump_kernel()(x, y);
      cumulative[x][y] = c;
    }
  }

  std::vector<std::vector<InternalMark>> internal(particles);
  std::vector<std::vector<VoterMark>> voter(particles);
  for (std::size_t i = 0; i < particles; ++i) {
    if (jump_rate > 0.0) {
      StreamRng rng(seed, 2 * i + 1);
      for (double t = next_arrival(rng, 0.0, jump_rate); t <= horizon; t = next_arrival(rng, t, jump_rate)) {
        InternalMark mark{t, std::vector<Site>(n)};
        for (std::size_t x = 0; x < n; ++x) mark.map[x] = sample_row(rng, cumulative[x]);
        internal[i].push_back(std::move(mark));
      }
    }
    if (voter_rate > 0.0) {
      StreamRng rng(seed, 2 * i + 2);
      for (double t = next_arrival(rng, 0.0, voter_rate); t <= horizon; t = next_arrival(rng, t, voter_rate)) {
        VoterMark mark{t, 0, std::vector<std::uint8_t>(n)};
        auto j = static_cast<std::uint32_t>(rng.below(particles - 1));
        mark.source = j >= i ? j + 1 : j;
        for (std::size_t x = 0; x < n; ++x) {
          const double q0 = chain.absorption(x);
          if (q0 >= voter_rate) {
            mark.fires[x] = 1;
          } else if (q0 > 0.0) {
            mark.fires[x] = rng.bernoulli(q0 / voter_rate) ? 1 : 0;
          }
        }
        voter[i].push_back(std::move(mark));
      }
    }
  }
  return MarkRealization(particles, n, horizon, std::move(internal), std::move(voter));
}

ParticleConfiguration evolve(const ParticleConfiguration& xi0, const MarkRealization& marks) {
  if (xi0.size() != marks.particles() || xi0.sites() != marks.sites()) {
    throw Error(ErrorCode::DimensionMismatch, "configuration does not match the mark realization");
  }
  ParticleConfiguration xi = xi0;
  for (const ScheduledMark& s : marks.schedule()) {
    const Site x = xi[s.particle];
    if (s.kind == MarkKind::Internal) {
      xi.set(s.particle, marks.internal(s.particle)[s.index].map[x]);
    } else {
      const VoterMark& v = marks.voter(s.particle)[s.index];
      if (v.fires[x]) xi.set(s.particle, xi[v.source]);
    }
  }
  return xi;
}

bool InfluenceSet::contains(std::uint32_t label) const noexcept {
  return std::binary_search(labels.begin(), labels.end(), label);
}

InfluenceSet influence_set(const MarkRealization& marks, std::uint32_t root) {
  if (root >= marks.particles()) throw Error(ErrorCode::InvalidArgument, "label out of range");
  std::vector<bool> member(marks.particles(), false);
  member[root] = true;
  InfluenceSet set{root, {root}};
  const auto schedule = marks.schedule();
  for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) {
    if (it->kind != MarkKind::Voter || !member[it->particle]) continue;
    const std::uint32_t j = marks.voter(it->particle)[it->index].source;
    if (!member[j]) {
      member[j] = true;
      set.labels.push_back(j);
    }
  }
  std::sort(set.labels.begin(), set.labels.end());
  return set;
}

std::vector<InfluenceSet> influence_sets(const MarkRealization& marks) {
  std::vector<InfluenceSet> sets;
  sets.reserve(marks.particles());
  for (std::size_t i = 0; i < marks.particles(); ++i) {
    sets.push_back(influence_set(marks, static_cast<std::uint32_t>(i)));
  }
  return sets;
}

bool intersects(const InfluenceSet& a, const InfluenceSet& b) noexcept {
  auto i = a.labels.begin();
  auto j = b.labels.begin();
  while (i != a.labels.end() && j != b.labels.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

OverlapEstimate overlap_probability(const AbsorbingChain& chain, std::size_t particles, double t,
                                    std::size_t replicas, std::uint64_t master_seed, const Execution& exec) {
  if (particles < 2) throw Error(ErrorCode::InvalidArgument, "need at least two particles");
  if (replicas == 0) throw Error(ErrorCode::InvalidArgument, "need at least one replica");
  std::vector<double> hit(replicas), size(replicas);
  for_each_replica(replicas, exec, [&](std::size_t r) {
    const MarkRealization marks = sample_marks(chain, particles, t, ReplicaSeed{master_seed, r});
    const InfluenceSet first = influence_set(marks, 0);
    const InfluenceSet second = influence_set(marks, 1);
    hit[r] = intersects(first, second) ? 1.0 : 0.0;
    size[r] = static_cast<double>(first.size());
  });

  OverlapEstimate est;
  est.particles = particles;
  est.horizon = t;
  est.replicas = replicas;
  const MeanEstimate hits = mean_estimate(hit);
  est.estimate = hits.mean;
  est.se = hits.se;
  const auto successes = static_cast<std::size_t>(std::llround(pairwise_sum(hit)));
  const Interval ci = wilson_interval(successes, replicas);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  const double c = chain.max_absorption();
  est.bound = std::expm1(2.0 * c * t) / static_cast<double>(particles - 1);
  const MeanEstimate sizes = mean_estimate(size);
  est.mean_size = sizes.mean;
  est.size_se = sizes.se;
  est.size_bound = std::exp(c * t);
  return est;
}

}  // namespace fvqsd
