#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fvqsd/chain.hpp"
#include "fvqsd/configuration.hpp"
#include "fvqsd/parallel.hpp"
#include "fvqsd/rng.hpp"

namespace fvqsd {

/// Internal mark (t, F): a particle at x jumps to F(x).
struct InternalMark {
  double time = 0.0;
  std::vector<Site> map;
};

/// Voter mark (t, j, zeta): a particle at x copies particle j's position if zeta(x) = 1.
struct VoterMark {
  double time = 0.0;
  std::uint32_t source = 0;
  std::vector<std::uint8_t> fires;
};

enum class MarkKind : std::uint8_t { Internal = 0, Voter = 1 };

struct ScheduledMark {
  double time;
  std::uint32_t particle;
  MarkKind kind;
  std::uint32_t index;  ///< position in that particle's internal or voter list
};

/// Realization of the internal (rate q̄) and voter (rate C) marked Poisson
/// processes of every particle on [0, horizon]. Immutable once built.
class MarkRealization {
 public:
  MarkRealization() = default;

  /// Validates shapes and per-particle time ordering and builds the merged
  /// schedule (ties broken by particle label, then internal before voter).
  MarkRealization(std::size_t particles, std::size_t sites, double horizon,
                  std::vector<std::vector<InternalMark>> internal,
                  std::vector<std::vector<VoterMark>> voter);

  std::size_t particles() const noexcept { return internal_.size(); }
  std::size_t sites() const noexcept { return sites_; }
  double horizon() const noexcept { return horizon_; }

  std::span<const InternalMark> internal(std::size_t i) const noexcept { return internal_[i]; }
  std::span<const VoterMark> voter(std::size_t i) const noexcept { return voter_[i]; }

  /// All marks in increasing time order.
  std::span<const ScheduledMark> schedule() const noexcept { return schedule_; }

  friend bool operator==(const MarkRealization& a, const MarkRealization& b);

 private:
  std::size_t sites_ = 0;
  double horizon_ = 0.0;
  std::vector<std::vector<InternalMark>> internal_;
  std::vector<std::vector<VoterMark>> voter_;
  std::vector<ScheduledMark> schedule_;
};

/// Samples marks for N particles on [0, horizon]. Each particle's two
/// processes use their own substreams of `seed`, so a shorter horizon yields
/// exactly the restriction of a longer one.
MarkRealization sample_marks(const AbsorbingChain& chain, std::size_t particles, double horizon,
                             const ReplicaSeed& seed);

/// Deterministic configuration at the end of the window, applying the marks forward in time.
ParticleConfiguration evolve(const ParticleConfiguration& xi0, const MarkRealization& marks);

/// Labels that can influence a particle's final position, in increasing order.
struct InfluenceSet {
  std::uint32_t root = 0;
  std::vector<std::uint32_t> labels;

  bool contains(std::uint32_t label) const noexcept;
  std::size_t size() const noexcept { return labels.size(); }
};

/// psi^i over the whole window for one label: scanning marks backward from
/// the window end, every voter mark of a current member adds its source label,
/// whatever the value of zeta.
InfluenceSet influence_set(const MarkRealization& marks, std::uint32_t root);

std::vector<InfluenceSet> influence_sets(const MarkRealization& marks);

bool intersects(const InfluenceSet& a, const InfluenceSet& b) noexcept;

struct OverlapEstimate {
  std::size_t particles = 0;
  double horizon = 0.0;
  std::size_t replicas = 0;
  double estimate = 0.0;  ///< frequency of psi^1 ∩ psi^2 != ∅
  double se = 0.0;
  double ci_low = 0.0;  ///< 95% Wilson interval
  double ci_high = 0.0;
  double bound = 0.0;  ///< (e^{2Ct} - 1) / (N - 1)
  double mean_size = 0.0;  ///< mean |psi^1|
  double size_se = 0.0;
  double size_bound = 0.0;  ///< e^{Ct}
};

/// Monte Carlo estimate of P(psi^1(t) ∩ psi^2(t) != ∅) and E|psi^1(t)|.
OverlapEstimate overlap_probability(const AbsorbingChain& chain, std::size_t particles, double t,
                                    std::size_t replicas, std::uint64_t master_seed,
                                    const Execution& exec = {});

/// Binary dump: "FVQSDMRK", u32 version, u32 N, u32 n, f64 horizon, then per
/// particle the internal marks (u64 count; f64 time, n x u32 map) and voter
/// marks (u64 count; f64 time, u32 source, n x u8 zeta). Little-endian.
void write_marks(std::ostream& out, const MarkRealization& marks);
MarkRealization read_marks(std::istream& in);

}  // namespace fvqsd
