#pragma once

#include <cstdint>
#include <limits>

namespace fvqsd {

/// Identifies one independent random stream: a pure function of
/// (master_seed, replica_index), independent of execution order.
struct ReplicaSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t replica_index = 0;

  /// Seed for a sub-experiment (grid point, process kind) derived from this one.
  ReplicaSeed child(std::uint64_t tag) const noexcept;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

std::uint64_t derive_stream_seed(const ReplicaSeed& seed, std::uint64_t substream = 0) noexcept;

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator, but the sampling
/// helpers below are used instead of <random> distributions so that outputs do
/// not depend on the standard library implementation.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  explicit StreamRng(std::uint64_t state) noexcept : state_(state) {}
  explicit StreamRng(const ReplicaSeed& seed, std::uint64_t substream = 0) noexcept
      : state_(derive_stream_seed(seed, substream)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1).
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) noexcept;

  /// Uniform integer on [0, n), unbiased (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t n) noexcept;

  bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace fvqsd
