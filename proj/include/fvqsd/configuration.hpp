#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fvqsd/chain.hpp"
#include "fvqsd/probability.hpp"

namespace fvqsd {

using Site = std::uint32_t;

/// Labeled positions of N >= 2 particles, each an index into the chain's sites.
class ParticleConfiguration {
 public:
  ParticleConfiguration() = default;
  /// Throws InvalidArgument if fewer than two particles or a site is out of range.
  ParticleConfiguration(std::vector<Site> positions, std::size_t sites);

  std::size_t size() const noexcept { return positions_.size(); }
  std::size_t sites() const noexcept { return sites_; }
  Site operator[](std::size_t i) const noexcept { return positions_[i]; }
  std::span<const Site> positions() const noexcept { return positions_; }

  /// Unchecked move of particle i; callers keep `site < sites()`.
  void set(std::size_t i, Site site) noexcept { positions_[i] = site; }

  friend bool operator==(const ParticleConfiguration&, const ParticleConfiguration&) = default;

 private:
  std::vector<Site> positions_;
  std::size_t sites_ = 0;
};

/// m(x) = #{i : xi(i) = x} / N.
ProbabilityVector empirical_measure(const ParticleConfiguration& xi);

/// Occupation counts eta(x).
std::vector<std::size_t> occupation(const ParticleConfiguration& xi);

/// Places floor(N * profile(x)) particles on each site and the remainder on
/// the site whose name sorts first. Particles are labeled site by site.
ParticleConfiguration expand_profile(const AbsorbingChain& chain, const ProbabilityVector& profile,
                                     std::size_t particles);

}  // namespace fvqsd
