#include "fvqsd/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "fvqsd/error.hpp"

namespace fvqsd {
namespace {

// Poisson mean per uniformization block; keeps e^{-lambda} far from underflow.
constexpr double kMaxBlockMean = 32.0;

void check_rate(double value, const std::string& where) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorCode::NegativeRate, where + " must be a finite nonnegative number");
  }
  if (value > kMaxRate) {
    throw Error(ErrorCode::RateTooLarge, where + " exceeds the maximum rate 1e6");
  }
}

bool reaches_all(const DenseMatrix& q, bool reversed) {
  const std::size_t n = q.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      const double r = reversed ? q(y, x) : q(x, y);
      if (y != x && r > 0.0 && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void check_time_and_tol(double t, double tol) {
  if (!std::isfinite(t)) throw Error(ErrorCode::NonFiniteTime, "time must be finite");
  if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "time must be nonnegative");
  if (!(tol > 0.0)) throw Error(ErrorCode::ToleranceNotPositive, "tolerance must be positive");
}

}  // namespace

std::size_t AbsorbingChain::index_of(const std::string& name) const noexcept {
  const auto it = std::find(states_.begin(), states_.end(), name);
  return static_cast<std::size_t>(it - states_.begin());
}

AbsorbingChain validate(const RawChain& raw, ValidationOptions options) {
  const std::size_t n = raw.states.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "states: at least one site is required");
  if (raw.rates.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "rates: expected " + std::to_string(n) + " rows, got " + std::to_string(raw.rates.size()));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (raw.rates[x].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "rates[" + std::to_string(x) + "]: expected " +
                                                    std::to_string(n) + " entries");
    }
  }
  if (raw.absorption.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "absorption: expected " + std::to_string(n) + " entries");
  }
  std::set<std::string> names;
  for (const auto& s : raw.states) {
    if (s.empty() || !names.insert(s).second) {
      throw Error(ErrorCode::InvalidArgument, "states: names must be nonempty and unique");
    }
  }

  AbsorbingChain chain;
  chain.states_ = raw.states;
  chain.generator_ = DenseMatrix(n, n);
  chain.absorption_ = raw.absorption;
  for (std::size_t x = 0; x < n; ++x) {
    check_rate(raw.absorption[x], "absorption[" + std::to_string(x) + "]");
    double out = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      check_rate(raw.rates[x][y], "rates[" + std::to_string(x) + "][" + std::to_string(y) + "]");
      chain.generator_(x, y) = raw.rates[x][y];
      out += raw.rates[x][y];
    }
    chain.generator_(x, x) = -(out + raw.absorption[x]);
    chain.max_jump_rate_ = std::max(chain.max_jump_rate_, out);
    chain.max_absorption_ = std::max(chain.max_absorption_, raw.absorption[x]);
    chain.max_exit_rate_ = std::max(chain.max_exit_rate_, out + raw.absorption[x]);
  }

  if (!reaches_all(chain.generator_, false) || !reaches_all(chain.generator_, true)) {
    throw Error(ErrorCode::NotIrreducibleOnLambda,
                "rates: the jump graph on the sites is not strongly connected");
  }
  if (options.require_absorption && chain.max_absorption_ <= 0.0) {
    throw Error(ErrorCode::NoAbsorption, "absorption: at least one site must have q(x,0) > 0");
  }

  chain.jump_kernel_ = DenseMatrix(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    double off = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const double p = chain.max_jump_rate_ > 0.0 ? chain.generator_(x, y) / chain.max_jump_rate_ : 0.0;
      chain.jump_kernel_(x, y) = p;
      off += p;
    }
    chain.jump_kernel_(x, x) = std::max(0.0, 1.0 - off);
  }
  return chain;
}

namespace detail {

double propagate_uniformized(const AbsorbingChain& chain, std::vector<double>& v, double t,
                             double tol, bool renormalize) {
  check_time_and_tol(t, tol);
  const std::size_t n = chain.size();
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from chain size");
  double initial_mass = 0.0;
  for (double w : v) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidArgument, "initial vector must be finite and nonnegative");
    }
    initial_mass += w;
  }
  if (initial_mass == 0.0) return -std::numeric_limits<double>::infinity();

  double log_factor = std::log(initial_mass);
  if (renormalize) {
    for (double& w : v) w /= initial_mass;
  }
  const double rate = chain.max_exit_rate();
  if (t == 0.0 || rate == 0.0) return log_factor;

  // P = I + Q / rate is substochastic with nonnegative entries.
  DenseMatrix p(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      p(x, y) = chain.rate(x, y) / rate + (x == y ? 1.0 : 0.0);
    }
    p(x, x) = std::max(0.0, p(x, x));
  }

  const auto blocks = static_cast<std::size_t>(std::max(1.0, std::ceil(rate * t / kMaxBlockMean)));
  const double lambda = rate * t / static_cast<double>(blocks);
  const double block_tol = tol / static_cast<double>(blocks);
  const auto max_terms = static_cast<std::size_t>(lambda + 40.0 * std::sqrt(lambda) + 200.0);

  std::vector<double> term(n), next(n), acc(n);
  for (std::size_t b = 0; b < blocks; ++b) {
    term = v;
    double weight = std::exp(-lambda);
    double cumulative = weight;
    for (std::size_t x = 0; x < n; ++x) acc[x] = weight * term[x];
    for (std::size_t k = 1; k <= max_terms; ++k) {
      if (1.0 - cumulative <= block_tol) break;
      if (static_cast<double>(k) > lambda && weight < 1e-300) break;
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t x = 0; x < n; ++x) {
        const double tx = term[x];
        if (tx == 0.0) continue;
        const auto row = p.row(x);
        for (std::size_t y = 0; y < n; ++y) next[y] += tx * row[y];
      }
      term.swap(next);
      weight *= lambda / static_cast<double>(k);
      cumulative += weight;
      for (std::size_t x = 0; x < n; ++x) acc[x] += weight * term[x];
    }
    if (renormalize) {
      double mass = 0.0;
      for (double w : acc) mass += w;
      if (mass <= 0.0) return -std::numeric_limits<double>::infinity();
      for (std::size_t x = 0; x < n; ++x) v[x] = acc[x] / mass;
      log_factor += std::log(mass);
    } else {
      v = acc;
    }
  }
  if (renormalize) return log_factor;
  double final_mass = 0.0;
  for (double w : v) final_mass += w;
  return std::log(final_mass);
}

}  // namespace detail

std::vector<double> transient_vector(const AbsorbingChain& chain, std::span<const double> mu,
                                     double t, double tol) {
  std::vector<double> w(mu.begin(), mu.end());
  detail::propagate_uniformized(chain, w, t, tol, false);
  return w;
}

UniquenessCondition check_uniqueness_condition(const AbsorbingChain& chain) {
  const std::size_t n = chain.size();
  UniquenessCondition result;
  result.right = chain.max_absorption();
  if (n > 1) {
    for (std::size_t z = 0; z < n; ++z) {
      double inf = std::numeric_limits<double>::infinity();
      for (std::size_t x = 0; x < n; ++x) {
        if (x != z) inf = std::min(inf, chain.rate(x, z));
      }
      result.left += inf;
    }
  }
  result.holds = result.left > result.right;
  return result;
}

}  // namespace fvqsd
