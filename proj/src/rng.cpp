#include "fvqsd/rng.hpp"

#include <cmath>

namespace fvqsd {
namespace {
__extension__ typedef unsigned __int128 uint128;
}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

ReplicaSeed ReplicaSeed::child(std::uint64_t tag) const noexcept {
  return ReplicaSeed{mix64(master_seed ^ mix64(tag + 0x632BE59BD9B4E019ULL)), replica_index};
}

std::uint64_t derive_stream_seed(const ReplicaSeed& seed, std::uint64_t substream) noexcept {
  std::uint64_t h = mix64(seed.master_seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (seed.replica_index * 0xD1B54A32D192ED03ULL + 1));
  h = mix64(h ^ (substream * 0x8CB92BA72F3D8DD7ULL + 2));
  return h;
}

double StreamRng::exponential(double rate) noexcept { return -std::log(uniform_open()) / rate; }

std::uint64_t StreamRng::below(std::uint64_t n) noexcept {
  uint128 m = static_cast<uint128>((*this)()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<uint128>((*this)()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace fvqsd
