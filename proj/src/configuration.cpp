#include "fvqsd/configuration.hpp"

#include <algorithm>
#include <cmath>

#include "fvqsd/error.hpp"

namespace fvqsd {

ParticleConfiguration::ParticleConfiguration(std::vector<Site> positions, std::size_t sites)
    : positions_(std::move(positions)), sites_(sites) {
  if (positions_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a configuration needs at least two particles");
  }
  for (Site s : positions_) {
    if (s >= sites_) throw Error(ErrorCode::InvalidArgument, "particle position out of range");
  }
}

ProbabilityVector empirical_measure(const ParticleConfiguration& xi) {
  std::vector<double> m(xi.sites(), 0.0);
  for (Site s : xi.positions()) m[s] += 1.0;
  const auto n = static_cast<double>(xi.size());
  for (double& w : m) w /= n;
  return ProbabilityVector::normalized(std::move(m));
}

std::vector<std::size_t> occupation(const ParticleConfiguration& xi) {
  std::vector<std::size_t> eta(xi.sites(), 0);
  for (Site s : xi.positions()) ++eta[s];
  return eta;
}

ParticleConfiguration expand_profile(const AbsorbingChain& chain, const ProbabilityVector& profile,
                                     std::size_t particles) {
  const std::size_t n = chain.size();
  if (profile.size() != n) throw Error(ErrorCode::DimensionMismatch, "profile length differs from chain size");
  if (particles < 2) throw Error(ErrorCode::InvalidArgument, "need at least two particles");

  std::vector<std::size_t> counts(n);
  std::size_t placed = 0;
  for (std::size_t x = 0; x < n; ++x) {
    counts[x] = static_cast<std::size_t>(std::floor(static_cast<double>(particles) * profile[x]));
    counts[x] = std::min(counts[x], particles - placed);
    placed += counts[x];
  }
  const auto& names = chain.states();
  const auto first = static_cast<std::size_t>(std::min_element(names.begin(), names.end()) - names.begin());
  counts[first] += particles - placed;

  std::vector<Site> positions;
  positions.reserve(particles);
  for (std::size_t x = 0; x < n; ++x) positions.insert(positions.end(), counts[x], static_cast<Site>(x));
  return ParticleConfiguration(std::move(positions), n);
}

}  // namespace fvqsd
