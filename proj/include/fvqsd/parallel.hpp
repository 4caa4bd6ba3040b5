#pragma once

#include <cstddef>
#include <cstdint>

namespace fvqsd {

/// How replica loops are executed. Results never depend on this: each
/// replica draws from its own seeded stream and writes its own slot, and
/// reductions run serially afterwards.
struct Execution {
  int threads = 0;      ///< 0 = OpenMP default
  bool serial = false;  ///< force the serial reference loop
};

/// Reference loop, kept for testing the parallel kernels against.
template <class Body>
void for_each_replica_serial(std::size_t count, Body&& body) {
  for (std::size_t r = 0; r < count; ++r) body(r);
}

/// OpenMP replica loop. `body(r)` must only write state owned by replica r.
template <class Body>
void for_each_replica(std::size_t count, const Execution& exec, Body&& body) {
  if (exec.serial || exec.threads == 1) {
    for_each_replica_serial(count, body);
    return;
  }
  const auto n = static_cast<std::int64_t>(count);
  if (exec.threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(exec.threads)
    for (std::int64_t r = 0; r < n; ++r) body(static_cast<std::size_t>(r));
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < n; ++r) body(static_cast<std::size_t>(r));
  }
}

}  // namespace fvqsd
