#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fvqsd/configuration.hpp"
#include "fvqsd/error.hpp"
#include "fvqsd/estimators.hpp"
#include "fvqsd/fv_simulator.hpp"
#include "fvqsd/semigroup.hpp"
#include "fvqsd/stats.hpp"
#include "oracles.hpp"

using namespace fvqsd;

namespace {

// Right-hand side of the evolution of E[m_x] written for one configuration:
//   sum_y q(y,x) m_y + N/(N-1) sum_y q(y,0) m_y m_x - q(x,0) m_x / (N-1).
// The last term accounts for an absorbed particle at x that cannot copy itself.
// Dropping it gives `uncorrected`.
double mean_drift(const AbsorbingChain& chain, std::span<const double> m, std::size_t x, std::size_t particles,
                  bool corrected) {
  const auto n = static_cast<double>(particles);
  double linear = 0.0;
  double absorbed = 0.0;
  for (std::size_t y = 0; y < chain.size(); ++y) {
    linear += chain.rate(y, x) * m[y];
    absorbed += chain.absorption(y) * m[y];
  }
  double drift = linear + n / (n - 1.0) * absorbed * m[x];
  if (corrected) drift -= chain.absorption(x) * m[x] / (n - 1.0);
  return drift;
}

}  // namespace

TEST_CASE("configuration basics") {
  const ParticleConfiguration xi({0, 0, 1}, 2);
  const auto m = empirical_measure(xi);
  CHECK(m[0] == doctest::Approx(2.0 / 3.0));
  CHECK(m[1] == doctest::Approx(1.0 / 3.0));
  CHECK(empirical_measure(ParticleConfiguration({1, 0, 0}, 2)) == m);
  CHECK(empirical_measure(ParticleConfiguration({0, 0, 0, 0}, 3)) == ProbabilityVector::delta(3, 0));
  CHECK(occupation(xi) == std::vector<std::size_t>{2, 1});
  CHECK_THROWS_AS(ParticleConfiguration({0}, 2), Error);
  CHECK_THROWS_AS(ParticleConfiguration({0, 2}, 2), Error);
}

TEST_CASE("profile expansion") {
  const auto chain = validate(oracle::three_site_chain());
  const auto xi = expand_profile(chain, ProbabilityVector::from_weights({0.5, 0.25, 0.25}), 10);
  // floor counts 5, 2, 2; the remainder goes to "a".
  CHECK(occupation(xi) == std::vector<std::size_t>{6, 2, 2});
  CHECK(xi[0] == 0);
  CHECK(xi[9] == 2);
  const auto single = expand_profile(chain, ProbabilityVector::delta(3, 1), 7);
  CHECK(occupation(single) == std::vector<std::size_t>{0, 7, 0});
}

TEST_CASE("t = 0 and single-site chains leave the configuration unchanged") {
  const auto golden = validate(oracle::golden_chain());
  const ParticleConfiguration xi0({0, 1, 1, 0}, 2);
  CHECK(simulate(golden, xi0, 0.0, {1, 0}) == xi0);

  const auto single = validate(oracle::single_site_chain(3.0));
  const ParticleConfiguration one({0, 0, 0}, 1);
  for (std::uint64_t r = 0; r < 20; ++r) CHECK(simulate(single, one, 5.0, {2, r}) == one);
}

TEST_CASE("trajectory records and errors") {
  const auto golden = validate(oracle::golden_chain());
  const ParticleConfiguration xi0({0, 0, 0, 1, 1}, 2);
  const std::vector<double> zero{0.0};
  CHECK(simulate_trajectory(golden, xi0, zero, {3, 0}).front() == xi0);

  for (std::uint64_t r = 0; r < 50; ++r) {
    const std::vector<double> two{0.0, 1.3};
    const auto path = simulate_trajectory(golden, xi0, two, {3, r});
    REQUIRE(path.size() == 2);
    CHECK(path[0] == xi0);
    CHECK(path[1] == simulate(golden, xi0, 1.3, {3, r}));
  }

  const std::vector<double> bad{1.0, 0.5};
  try {
    simulate_trajectory(golden, xi0, bad, {3, 0});
    FAIL("expected UnsortedTimes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsortedTimes);
  }
}

TEST_CASE("particle count and site range are conserved") {
  const auto chain = validate(oracle::three_site_chain());
  const ParticleConfiguration xi0({0, 1, 2, 0, 1, 2, 0}, 3);
  std::vector<double> times;
  for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k);
  for (std::uint64_t r = 0; r < 20; ++r) {
    for (const auto& xi : simulate_trajectory(chain, xi0, times, {4, r})) {
      CHECK(xi.size() == 7);
      CHECK(std::all_of(xi.positions().begin(), xi.positions().end(), [](Site s) { return s < 3; }));
    }
  }
}

TEST_CASE("marginal matches the exact occupancy chain") {
  const auto raw = oracle::golden_chain();
  const auto chain = validate(raw);
  const ParticleConfiguration xi0({0, 0, 0}, 2);
  const auto law = oracle::two_site_occupancy_law(raw, 3, 3, 1.0);
  double exact = 0.0;
  for (std::size_t k = 0; k < law.size(); ++k) exact += law[k] * static_cast<double>(k) / 3.0;

  const std::vector<double> times{1.0};
  const auto est = occupation_means(chain, xi0, times, 100000, 17)[0][0];
  CHECK(std::abs(est.mean - exact) <= 3.0 * est.se);
}

TEST_CASE("mean evolution identity holds exactly on the occupancy chain") {
  const auto raw = oracle::golden_chain();
  const auto chain = validate(raw);
  for (std::size_t particles : {2u, 3u, 5u, 9u}) {
    const double t = 0.7;
    const double h = 1e-4;
    auto moments = [&](double s) {
      const auto law = oracle::two_site_occupancy_law(raw, particles, 0, s);
      double first = 0.0;
      double drift_c = 0.0;
      double drift_u = 0.0;
      for (std::size_t k = 0; k < law.size(); ++k) {
        const double m0 = static_cast<double>(k) / static_cast<double>(particles);
        const std::vector<double> m{m0, 1.0 - m0};
        first += law[k] * m0;
        drift_c += law[k] * mean_drift(chain, m, 0, particles, true);
        drift_u += law[k] * mean_drift(chain, m, 0, particles, false);
      }
      return std::array<double, 3>{first, drift_c, drift_u};
    };
    const double derivative = (moments(t + h)[0] - moments(t - h)[0]) / (2.0 * h);
    const auto at = moments(t);
    CHECK(std::abs(derivative - at[1]) <= 1e-7);
    CHECK(std::abs(derivative - at[2]) > 1e-3);
  }
}

TEST_CASE("mean evolution identity holds for the simulator") {
  const auto chain = validate(oracle::golden_chain());
  const std::size_t particles = 5;
  const ParticleConfiguration xi0({0, 0, 0, 0, 1}, 2);
  const FvSimulator sim(chain);
  const double t = 0.5;
  const double dt = 0.02;
  const std::vector<double> times{t - dt, t, t + dt};
  const std::size_t replicas = 100000;
  std::vector<double> corrected(replicas);
  std::vector<double> uncorrected(replicas);
  for (std::size_t r = 0; r < replicas; ++r) {
    const auto path = sim.trajectory(xi0, times, {5, r});
    const auto before = empirical_measure(path[0]);
    const auto now = empirical_measure(path[1]);
    const auto after = empirical_measure(path[2]);
    const double slope = (after[0] - before[0]) / (2.0 * dt);
    corrected[r] = slope - mean_drift(chain, now.weights(), 0, particles, true);
    uncorrected[r] = slope - mean_drift(chain, now.weights(), 0, particles, false);
  }
  const auto c = mean_estimate(corrected);
  const auto u = mean_estimate(uncorrected);
  // Central differences leave an O(dt^2) bias, far below the statistical error here.
  const double bias_allowance = 5.0 * dt * dt;
  CHECK(std::abs(c.mean) <= 3.0 * c.se + bias_allowance);
  CHECK(std::abs(u.mean) > 3.0 * u.se + bias_allowance);
}

TEST_CASE("relabeling particles does not change the law of the empirical measure") {
  const auto chain = validate(oracle::three_site_chain());
  const ParticleConfiguration a({0, 0, 1, 2, 2, 2}, 3);
  const ParticleConfiguration b({2, 1, 2, 0, 2, 0}, 3);
  const std::vector<double> times{0.8};
  const auto ea = occupation_means(chain, a, times, 10000, 100)[0];
  const auto eb = occupation_means(chain, b, times, 10000, 200)[0];
  for (std::size_t x = 0; x < 3; ++x) {
    const double se = std::hypot(ea[x].se, eb[x].se);
    CHECK(std::abs(ea[x].mean - eb[x].mean) <= 3.0 * se);
  }
}

TEST_CASE("occupation approaches the QSD over time") {
  const auto chain = validate(oracle::golden_chain());
  const auto nu = qsd(chain).nu;
  const ParticleConfiguration xi0(std::vector<Site>(10, 0), 2);
  const std::vector<double> times{0.0, 1.0, 2.0};
  const auto means = occupation_means(chain, xi0, times, 20000, 9);
  std::vector<double> dist;
  for (const auto& row : means) dist.push_back(std::abs(row[0].mean - nu[0]) + std::abs(row[1].mean - nu[1]));
  CHECK(dist[1] < dist[0]);
  CHECK(dist[2] < dist[1]);
}

TEST_CASE("stationary sampler") {
  const StationaryParams params{10.0, 200, 0.5};
  const auto single = validate(oracle::single_site_chain(1.0));
  for (const auto& m : stationary_sampler(single, 5, params, {6, 0})) CHECK(m[0] == 1.0);

  const auto sym = validate(oracle::symmetric_chain(1.0));
  const auto samples = stationary_sampler(sym, 20, {50.0, 2000, 1.0}, {6, 1});
  CHECK(samples.size() == 2000);
  std::vector<double> m1;
  for (const auto& m : samples) m1.push_back(m[0]);
  const auto est = batch_means(m1, 20);
  CHECK(std::abs(est.mean - 0.5) <= 3.0 * est.se);

  CHECK_THROWS_AS(stationary_sampler(sym, 5, {0.0, 10, 1.0}, {6, 2}), Error);
}
