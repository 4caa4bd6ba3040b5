#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fvqsd/error.hpp"
#include "fvqsd/graphical.hpp"
#include "fvqsd/stats.hpp"
#include "oracles.hpp"

using namespace fvqsd;

namespace {

MarkRealization empty_marks(std::size_t particles, std::size_t sites, double horizon) {
  return MarkRealization(particles, sites, horizon, std::vector<std::vector<InternalMark>>(particles),
                         std::vector<std::vector<VoterMark>>(particles));
}

}  // namespace

TEST_CASE("empty window") {
  const auto chain = validate(oracle::golden_chain());
  const auto marks = sample_marks(chain, 4, 0.0, {1, 0});
  CHECK(marks.schedule().empty());
  const ParticleConfiguration xi0({0, 1, 1, 0}, 2);
  CHECK(evolve(xi0, marks) == xi0);
  for (const auto& psi : influence_sets(marks)) CHECK(psi.labels == std::vector<std::uint32_t>{psi.root});
}

TEST_CASE("degenerate voter fields are exact") {
  const auto chain = validate(oracle::golden_chain());
  std::size_t seen = 0;
  for (std::uint64_t r = 0; r < 50; ++r) {
    const auto marks = sample_marks(chain, 5, 2.0, {2, r});
    for (std::size_t i = 0; i < 5; ++i) {
      for (const auto& v : marks.voter(i)) {
        CHECK(v.fires[0] == 1);
        CHECK(v.fires[1] == 0);
        CHECK(v.source != i);
        CHECK(v.source < 5);
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("internal marks respect the jump kernel") {
  const RawChain raw{{"a", "b", "c"}, {{0, 2, 0}, {0, 0, 1}, {0.5, 0, 0}}, {1, 0, 0}};
  const auto chain = validate(raw);
  for (std::uint64_t r = 0; r < 50; ++r) {
    const auto marks = sample_marks(chain, 3, 3.0, {3, r});
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& m : marks.internal(i)) {
        for (std::size_t x = 0; x < 3; ++x) CHECK(chain.jump_kernel()(x, m.map[x]) > 0.0);
      }
    }
  }
}

TEST_CASE("mark counts are Poisson with the right rates") {
  // Three-site chain: q̄ = 1.5, C = 0.5.
  const auto chain = validate(oracle::three_site_chain());
  const double horizon = 2.0;
  std::vector<double> internal;
  std::vector<double> voter;
  for (std::uint64_t r = 0; r < 4000; ++r) {
    const auto marks = sample_marks(chain, 3, horizon, {4, r});
    for (std::size_t i = 0; i < 3; ++i) {
      internal.push_back(static_cast<double>(marks.internal(i).size()));
      voter.push_back(static_cast<double>(marks.voter(i).size()));
    }
  }
  const auto mi = mean_estimate(internal);
  const auto mv = mean_estimate(voter);
  CHECK(std::abs(mi.mean - 3.0) <= 3.0 * mi.se);
  CHECK(std::abs(mv.mean - 1.0) <= 3.0 * mv.se);
  // Poisson: variance equals mean.
  CHECK(mi.se * mi.se * static_cast<double>(mi.count) == doctest::Approx(3.0).epsilon(0.05));
  CHECK(mv.se * mv.se * static_cast<double>(mv.count) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("one internal mark moves only its particle") {
  std::vector<std::vector<InternalMark>> internal(3);
  internal[0].push_back({0.5, {1, 0}});
  const MarkRealization marks(3, 2, 1.0, internal, std::vector<std::vector<VoterMark>>(3));
  const ParticleConfiguration xi0({0, 0, 1}, 2);
  CHECK(evolve(xi0, marks) == ParticleConfiguration({1, 0, 1}, 2));
  CHECK(evolve(xi0, empty_marks(3, 2, 1.0)) == xi0);
}

TEST_CASE("one voter mark grows the influence set whether or not it fires") {
  for (std::uint8_t fire : {0, 1}) {
    std::vector<std::vector<VoterMark>> voter(4);
    voter[0].push_back({0.3, 1, {fire, fire}});
    const MarkRealization marks(4, 2, 1.0, std::vector<std::vector<InternalMark>>(4), voter);
    const auto sets = influence_sets(marks);
    CHECK(sets[0].labels == std::vector<std::uint32_t>{0, 1});
    CHECK(sets[1].labels == std::vector<std::uint32_t>{1});
    CHECK(sets[2].labels == std::vector<std::uint32_t>{2});
    CHECK(sets[3].labels == std::vector<std::uint32_t>{3});
    const ParticleConfiguration xi0({0, 1, 0, 0}, 2);
    CHECK(evolve(xi0, marks)[0] == (fire ? 1 : 0));
  }
}

TEST_CASE("influence sets follow chains of voter marks backward") {
  // 2 copies from 1 at time 0.2, then 0 copies from 2 at time 0.6: both
  // marks can affect particle 0. Reversed order only the later one can.
  std::vector<std::vector<VoterMark>> voter(3);
  voter[2].push_back({0.2, 1, {1, 1}});
  voter[0].push_back({0.6, 2, {1, 1}});
  const MarkRealization marks(3, 2, 1.0, std::vector<std::vector<InternalMark>>(3), voter);
  CHECK(influence_set(marks, 0).labels == std::vector<std::uint32_t>{0, 1, 2});

  std::vector<std::vector<VoterMark>> reversed(3);
  reversed[2].push_back({0.6, 1, {1, 1}});
  reversed[0].push_back({0.2, 2, {1, 1}});
  const MarkRealization late(3, 2, 1.0, std::vector<std::vector<InternalMark>>(3), reversed);
  CHECK(influence_set(late, 0).labels == std::vector<std::uint32_t>{0, 2});
  CHECK(intersects(influence_set(late, 0), influence_set(late, 2)));
  CHECK_FALSE(intersects(influence_set(late, 0), influence_set(late, 1)));
}

TEST_CASE("invalid realizations are rejected") {
  std::vector<std::vector<VoterMark>> self(2);
  self[0].push_back({0.5, 0, {1, 1}});
  CHECK_THROWS_AS(MarkRealization(2, 2, 1.0, std::vector<std::vector<InternalMark>>(2), self), Error);
  std::vector<std::vector<InternalMark>> late(2);
  late[0].push_back({1.5, {0, 1}});
  CHECK_THROWS_AS(MarkRealization(2, 2, 1.0, late, std::vector<std::vector<VoterMark>>(2)), Error);
  std::vector<std::vector<InternalMark>> unsorted(2);
  unsorted[0].push_back({0.5, {0, 1}});
  unsorted[0].push_back({0.4, {0, 1}});
  CHECK_THROWS_AS(MarkRealization(2, 2, 1.0, unsorted, std::vector<std::vector<VoterMark>>(2)), Error);
}

TEST_CASE("shorter windows are restrictions and influence sets grow with the window") {
  const auto chain = validate(oracle::golden_chain());
  for (std::uint64_t r = 0; r < 200; ++r) {
    const auto short_marks = sample_marks(chain, 8, 0.4, {5, r});
    const auto long_marks = sample_marks(chain, 8, 1.0, {5, r});
    for (std::size_t i = 0; i < 8; ++i) {
      const auto s = short_marks.voter(i);
      const auto l = long_marks.voter(i);
      REQUIRE(s.size() <= l.size());
      for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s[k].time == l[k].time);
        CHECK(s[k].source == l[k].source);
      }
      const auto short_set = influence_set(short_marks, static_cast<std::uint32_t>(i));
      const auto long_set = influence_set(long_marks, static_cast<std::uint32_t>(i));
      for (auto label : short_set.labels) CHECK(long_set.contains(label));
    }
  }
}

TEST_CASE("positions depend only on coordinates in the influence set") {
  const auto chain = validate(oracle::three_site_chain());
  const std::size_t particles = 6;
  for (std::uint64_t r = 0; r < 300; ++r) {
    const auto marks = sample_marks(chain, particles, 1.0, {6, r});
    StreamRng rng(ReplicaSeed{66, r});
    std::vector<Site> base(particles);
    for (auto& s : base) s = static_cast<Site>(rng.below(3));
    const ParticleConfiguration xi0(base, 3);
    const auto reference = evolve(xi0, marks);
    for (std::uint32_t i = 0; i < particles; ++i) {
      const auto psi = influence_set(marks, i);
      for (int trial = 0; trial < 5; ++trial) {
        auto perturbed = base;
        for (std::uint32_t j = 0; j < particles; ++j) {
          if (!psi.contains(j)) perturbed[j] = static_cast<Site>(rng.below(3));
        }
        CHECK(evolve(ParticleConfiguration(perturbed, 3), marks)[i] == reference[i]);
      }
    }
  }
}

TEST_CASE("events on disjoint label sets are independent") {
  const auto chain = validate(oracle::golden_chain());
  const std::size_t replicas = 100000;
  struct Pair {
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
  };
  const std::vector<Pair> pairs{{{0}, {1}}, {{0, 2}, {1}}, {{0}, {1, 2}}};
  std::vector<std::array<std::array<double, 2>, 2>> table(pairs.size(), {{{0, 0}, {0, 0}}});
  for (std::uint64_t r = 0; r < replicas; ++r) {
    const auto marks = sample_marks(chain, 3, 0.5, {7, r});
    const auto first = influence_set(marks, 0);
    const auto second = influence_set(marks, 1);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      table[p][first.labels == pairs[p].a][second.labels == pairs[p].b] += 1.0;
    }
  }
  for (const auto& t : table) {
    const double n = static_cast<double>(replicas);
    double chi2 = 0.0;
    for (int u = 0; u < 2; ++u) {
      for (int v = 0; v < 2; ++v) {
        const double expected = (t[u][0] + t[u][1]) * (t[0][v] + t[1][v]) / n;
        REQUIRE(expected > 5.0);
        chi2 += (t[u][v] - expected) * (t[u][v] - expected) / expected;
      }
    }
    CHECK(chi2 < 10.83);  // 0.999 quantile, one degree of freedom
  }
}

TEST_CASE("evolved marginal matches the exact occupancy chain") {
  const auto raw = oracle::golden_chain();
  const auto chain = validate(raw);
  const auto law = oracle::two_site_occupancy_law(raw, 4, 4, 0.8);
  double exact = 0.0;
  for (std::size_t k = 0; k < law.size(); ++k) exact += law[k] * static_cast<double>(k) / 4.0;
  const ParticleConfiguration xi0({0, 0, 0, 0}, 2);
  std::vector<double> m0;
  for (std::uint64_t r = 0; r < 50000; ++r) {
    m0.push_back(empirical_measure(evolve(xi0, sample_marks(chain, 4, 0.8, {8, r})))[0]);
  }
  const auto est = mean_estimate(m0);
  CHECK(std::abs(est.mean - exact) <= 3.0 * est.se);
}

TEST_CASE("influence set size and overlap respect their bounds") {
  const auto chain = validate(oracle::golden_chain());
  const auto zero = overlap_probability(chain, 101, 0.0, 1000, 9);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.mean_size == 1.0);

  const auto est = overlap_probability(chain, 101, 0.5, 10000, 9);
  CHECK(est.bound == doctest::Approx(std::expm1(1.0) / 100.0));
  CHECK(est.estimate <= est.bound + 3.0 * est.se);
  CHECK(est.ci_low <= est.estimate);
  CHECK(est.mean_size <= est.size_bound + 3.0 * est.size_se);

  const auto n100 = overlap_probability(chain, 100, 0.5, 10000, 10);
  const auto n200 = overlap_probability(chain, 200, 0.5, 10000, 10);
  CHECK(n200.bound == doctest::Approx(n100.bound * 99.0 / 199.0));
  CHECK(n100.estimate <= n100.bound + 3.0 * n100.se);
  CHECK(n200.estimate <= n200.bound + 3.0 * n200.se);
}

TEST_CASE("binary dump round trip") {
  const auto chain = validate(oracle::three_site_chain());
  const auto marks = sample_marks(chain, 5, 1.5, {11, 3});
  std::stringstream buffer;
  write_marks(buffer, marks);
  const auto back = read_marks(buffer);
  CHECK(back == marks);
  CHECK(back.schedule().size() == marks.schedule().size());

  std::stringstream garbage("NOTMARKS and more bytes here");
  CHECK_THROWS_AS(read_marks(garbage), Error);
  std::string bytes;
  {
    std::stringstream s;
    write_marks(s, marks);
    bytes = s.str();
  }
  std::stringstream truncated(bytes.substr(0, bytes.size() / 2));
  CHECK_THROWS_AS(read_marks(truncated), Error);
}
