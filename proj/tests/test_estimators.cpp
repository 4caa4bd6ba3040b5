#include <doctest.h>

#include <cmath>

#include "fvqsd/estimators.hpp"
#include "fvqsd/rng.hpp"
#include "fvqsd/semigroup.hpp"
#include "oracles.hpp"

using namespace fvqsd;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) pairs.emplace_back(x, y);
  }
  return pairs;
}

}  // namespace

TEST_CASE("correlation bound values") {
  CHECK(correlation_bound(101, 1.0, 0.5, false) == doctest::Approx(0.034024).epsilon(1e-5));
  CHECK(correlation_bound(101, 1.0, 0.5, true) == doctest::Approx(1.0 / 101 + 2.0 / 101 * std::expm1(1.0)));
  CHECK(correlation_bound(10, 2.0, 0.0, false) == 0.0);
}

TEST_CASE("covariance at t = 0 is exactly zero") {
  const auto chain = validate(oracle::three_site_chain());
  const auto xi0 = expand_profile(chain, ProbabilityVector::uniform(3), 11);
  const auto pairs = all_pairs(3);
  for (const auto& est : correlation_experiment(chain, xi0, 0.0, pairs, 1000, 3)) {
    CHECK(est.covariance == 0.0);
    CHECK(est.se == 0.0);
  }
}

TEST_CASE("correlations respect the bound on a grid of sizes and times") {
  for (const auto& raw : {oracle::golden_chain(), oracle::three_site_chain()}) {
    const auto chain = validate(raw);
    const auto pairs = all_pairs(chain.size());
    for (std::size_t particles : {11u, 101u}) {
      const auto xi0 = expand_profile(chain, ProbabilityVector::uniform(chain.size()), particles);
      for (double t : {0.25, 0.5, 1.0}) {
        for (const auto& est : correlation_experiment(chain, xi0, t, pairs, 4000, 21)) {
          CHECK(est.se > 0.0);
          CHECK(std::abs(est.covariance) <= est.bound + 3.0 * est.se);
        }
      }
    }
  }
}

TEST_CASE("covariance scales like 1/N") {
  const auto chain = validate(oracle::golden_chain());
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}, {0, 1}};
  const auto small = correlation_experiment(chain, expand_profile(chain, ProbabilityVector::delta(2, 0), 10), 1.0,
                                            pairs, 20000, 5);
  const auto large = correlation_experiment(chain, expand_profile(chain, ProbabilityVector::delta(2, 0), 40), 1.0,
                                            pairs, 20000, 6);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    REQUIRE(std::abs(small[k].covariance) > 5.0 * small[k].se);
    REQUIRE(std::abs(large[k].covariance) > 5.0 * large[k].se);
    const double ratio = std::abs(small[k].covariance) / std::abs(large[k].covariance);
    CHECK(ratio >= 2.0);
    CHECK(ratio <= 8.0);
  }
}

TEST_CASE("convergence experiment degenerate cases") {
  const std::vector<std::size_t> counts{4, 8, 16};
  const auto single = validate(oracle::single_site_chain(1.0));
  const auto profiles = extreme_profiles(single);
  for (const auto& p : convergence_experiment(single, profiles, 1.0, counts, 200, 1).points) CHECK(p.estimate == 0.0);

  const auto golden = validate(oracle::golden_chain());
  const auto golden_profiles = extreme_profiles(golden);
  CHECK(golden_profiles.size() == 3);
  for (const auto& p : convergence_experiment(golden, golden_profiles, 0.0, counts, 200, 1).points) {
    CHECK(p.estimate == 0.0);
  }
  const std::vector<std::size_t> unsorted{8, 4};
  CHECK_THROWS(convergence_experiment(golden, golden_profiles, 1.0, unsorted, 10, 1));
}

TEST_CASE("stationary profile degenerate cases") {
  const std::vector<std::size_t> counts{4, 8};
  const StationaryParams params{10.0, 100, 0.5};
  const auto single = validate(oracle::single_site_chain(2.0));
  const auto nu1 = qsd(single).nu;
  for (const auto& p : qsd_profile_experiment(single, nu1, counts, params, 2, 1).points) CHECK(p.estimate == 0.0);

  const auto sym = validate(oracle::symmetric_chain(1.0));
  const auto nu = qsd(sym).nu;
  for (const auto& p : qsd_profile_experiment(sym, nu, counts, {20.0, 400, 1.0}, 4, 2).points) {
    for (const auto& m : p.mean_measure) CHECK(std::abs(m.mean - 0.5) <= 3.0 * m.se);
  }
}

TEST_CASE("product moment degenerate cases") {
  const StationaryParams params{10.0, 100, 0.5};
  const auto single = validate(oracle::single_site_chain(2.0));
  const std::vector<std::size_t> whole{0};
  const auto one = product_moment_experiment(single, qsd(single).nu, whole, 5, params, 2, 1);
  CHECK(one.estimate == 1.0);
  CHECK(one.target == 1.0);

  // A one-site product is the first moment of the stationary profile.
  const auto golden = validate(oracle::golden_chain());
  const auto nu = qsd(golden).nu;
  const std::vector<std::size_t> counts{12};
  const std::vector<std::size_t> first{0};
  const auto profile = qsd_profile_experiment(golden, nu, counts, params, 3, 44);
  const auto moment =
      product_moment_experiment(golden, nu, first, 12, params, 3, ReplicaSeed{44, 0}.child(0).master_seed);
  CHECK(moment.estimate == doctest::Approx(profile.points[0].mean_measure[0].mean).epsilon(1e-14));
  CHECK(moment.target == nu[0]);
}

TEST_CASE("stationary distance is dominated by the triangle inequality") {
  // E||m(xi_t) - T_t m(xi_0)|| + sup_mu ||T_t mu - nu|| >= E_lambda ||m - nu||.
  const auto chain = validate(oracle::golden_chain());
  const auto nu = qsd(chain).nu;
  const double t = 1.0;
  for (std::size_t particles : {10u, 40u}) {
    const std::vector<std::size_t> counts{particles};
    const auto profiles = extreme_profiles(chain);
    const auto conv = convergence_experiment(chain, profiles, t, counts, 4000, 3).points[0];
    double sup = 0.0;
    for (const auto& mu : profiles) sup = std::max(sup, tv_distance(conditioned_law(chain, mu, t), nu));
    const auto stat = qsd_profile_experiment(chain, nu, counts, {20.0, 400, 1.0}, 4, 4).points[0];
    CHECK(conv.estimate + sup >= stat.estimate - 3.0 * std::hypot(conv.se, stat.se));
  }
}
