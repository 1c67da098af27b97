// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randmeas/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "randmeas/correlations.hpp"
#include "randmeas/ensembles.hpp"
#include "stats.hpp"

namespace randmeas {
namespace {

const char* const kNamedStates[] = {"product:2", "bell", "werner:0.577", "ghz:3",
                                    "ghz:4",     "w:3",  "w:4",          "cluster:4"};

TEST(ExactMomentTest, MatchesBruteForceOnAllSubsets) {
  for (const char* s : kNamedStates) {
    const DensityMatrix rho = make_state(parse_state_spec(s));
    for (Parties subset : nonempty_subsets(Parties::full(rho.n_qubits()))) {
      const MomentEstimate est = moment_exact_t2(correlation_tensor(rho, subset));
      EXPECT_TRUE(est.is_exact());
      EXPECT_NEAR(est.value, oracle::second_moment(rho.matrix(), subset.labels()), 1e-13)
          << s << " {" << subset.to_string() << "}";
    }
  }
}

// Values below come from the brute-force oracle, not from the library.
TEST(ExactMomentTest, ReferenceValues) {
  EXPECT_NEAR(oracle::second_moment(oracle::projector(oracle::ghz_ket(4)), {1, 2, 3, 4}), 1.0 / 9.0,
              1e-14);
  EXPECT_NEAR(oracle::second_moment(oracle::projector(oracle::ghz_ket(3)), {1, 2, 3}), 4.0 / 27.0,
              1e-14);
  EXPECT_NEAR(oracle::second_moment(oracle::projector(oracle::w_ket(4)), {1, 2, 3, 4}), 4.0 / 81.0,
              1e-14);
  const auto full = [](const char* s) {
    const DensityMatrix rho = make_state(parse_state_spec(s));
    return moment_exact_t2(correlation_tensor(rho, Parties::full(rho.n_qubits()))).value;
  };
  EXPECT_NEAR(full("ghz:4"), 1.0 / 9.0, 1e-14);
  EXPECT_NEAR(full("ghz:3"), 4.0 / 27.0, 1e-14);
  EXPECT_NEAR(full("w:3"), 11.0 / 81.0, 1e-14);
  EXPECT_NEAR(full("bell"), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(full("product:2"), 1.0 / 9.0, 1e-14);
}

TEST(DesignMomentTest, MatchesQuadratureOracle) {
  const SphericalDesign ico = design_points(5);
  const SphericalDesign oct = design_points(3);
  for (const char* s : {"bell", "ghz:3", "w:3", "werner:0.3"}) {
    const DensityMatrix rho = make_state(parse_state_spec(s));
    const Parties full = Parties::full(rho.n_qubits());
    for (int t = 1; t <= 5; ++t) {
      const double expected = oracle::moment_by_quadrature(rho.matrix(), full.labels(), t);
      EXPECT_NEAR(moment_design(rho, full, t, ico).value, expected, 1e-12) << s << " t=" << t;
      if (t <= 3) EXPECT_NEAR(moment_design(rho, full, t, oct).value, expected, 1e-12);
    }
  }
}

TEST(DesignMomentTest, GhzThreeFourthMoment) {
  // 3/8 (8/15)^3: only the 4 GHZ-type terms of the expanded fourth power survive.
  const DensityMatrix rho = make_state(StateSpec::ghz(3));
  EXPECT_NEAR(moment_design(rho, Parties::full(3), 4, design_points(5)).value, 64.0 / 1125.0,
              1e-13);
  EXPECT_NEAR(oracle::moment_by_quadrature(rho.matrix(), {1, 2, 3}, 4), 64.0 / 1125.0, 1e-13);
}

TEST(DesignMomentTest, RejectsInsufficientDesign) {
  const DensityMatrix rho = make_state(StateSpec::bell_psi_minus());
  try {
    moment_design(rho, Parties::full(2), 4, design_points(3));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("design order insufficient"), std::string::npos);
  }
  EXPECT_THROW(moment_design(rho, Parties::full(2), 4, half_design(design_points(5))),
               std::invalid_argument);
  EXPECT_THROW(moment_design_half(rho, Parties::full(2), 3, design_points(5)),
               std::invalid_argument);
}

TEST(DesignMomentTest, HalfDesignAgreesForEvenOrders) {
  RngStream rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_mixed_state(3, rng);
    for (int t : {2, 4}) {
      EXPECT_NEAR(moment_design_half(rho, Parties::full(3), t, design_points(5)).value,
                  moment_design(rho, Parties::full(3), t, design_points(5)).value, 1e-13);
    }
  }
}

TEST(MonteCarloMomentTest, AgreesWithExactWithinFourSigma) {
  for (const char* s : {"bell", "ghz:3", "w:3"}) {
    const DensityMatrix rho = make_state(parse_state_spec(s));
    const Parties full = Parties::full(rho.n_qubits());
    const SampleSet samples = sample_distribution(rho, full, 20000, RngStream(5));
    const MomentEstimate est = moment_mc(samples, 2);
    ASSERT_TRUE(est.std_error.has_value());
    const double exact = moment_exact_t2(correlation_tensor(rho, full)).value;
    EXPECT_LT(std::abs(est.value - exact), 4.0 * *est.std_error) << s;
    EXPECT_EQ(est.settings, 20000u);
  }
}

TEST(MonteCarloMomentTest, ValidatesInput) {
  const DensityMatrix rho = make_state(StateSpec::bell_psi_minus());
  const SampleSet one = sample_distribution(rho, Parties::full(2), 1, RngStream(1));
  EXPECT_THROW(moment_mc(one, 2), std::invalid_argument);
  const SampleSet many = sample_distribution(rho, Parties::full(2), 10, RngStream(1));
  EXPECT_THROW(moment_mc(many, 0), std::invalid_argument);
}

TEST(MonteCarloMomentTest, BootstrapMatchesPlugInError) {
  const DensityMatrix rho = make_state(StateSpec::ghz(3));
  const SampleSet samples = sample_distribution(rho, Parties::full(3), 5000, RngStream(8));
  const MomentEstimate est = moment_mc(samples, 2);
  const double boot = bootstrap_std_error(samples, 2, 1000, RngStream(9));
  EXPECT_NEAR(boot / *est.std_error, 1.0, 0.15);
}

TEST(MomentTableTest, CoversEverySubset) {
  const DensityMatrix rho = make_state(StateSpec::w(4));
  const MomentTable exact = exact_moment_table(rho);
  EXPECT_EQ(exact.size(), 15u);
  const MomentTable mc = monte_carlo_moment_table(rho, 2, 100, RngStream(3));
  EXPECT_EQ(mc.size(), 15u);
  EXPECT_TRUE(mc.begin()->second.std_error.has_value());
}

TEST(ShotTest, UStatisticMatchesSubsetEnumeration) {
  const DensityMatrix rho = make_state(StateSpec::ghz(3));
  const auto settings = random_settings(3, 40, RngStream(1));
  const ShotTable shots = simulate_shots(rho, Parties::full(3), settings, 7, RngStream(2));
  ASSERT_EQ(shots.outcomes.size(), 40u * 7u * 3u);
  for (int t = 1; t <= 4; ++t) {
    std::vector<double> per_setting;
    for (std::size_t s = 0; s < shots.setting_count(); ++s) {
      std::vector<int> products;
      for (std::size_t r = 0; r < 7; ++r) {
        products.push_back(shots.outcome(s, r, 0) * shots.outcome(s, r, 1) * shots.outcome(s, r, 2));
      }
      per_setting.push_back(oracle::u_statistic_brute(products, t));
    }
    EXPECT_NEAR(estimate_moment_from_shots(shots, t).value, testing::mean(per_setting), 1e-12)
        << "t=" << t;
  }
}

TEST(ShotTest, OutcomesFollowBornRule) {
  // |0><0| measured along z always gives +1; along x the outcomes are fair.
  const DensityMatrix zero = make_state(StateSpec::product_zero(1));
  const std::vector<std::vector<Direction>> along_z = {{Direction::ez()}};
  const ShotTable z = simulate_shots(zero, Parties::full(1), along_z, 200, RngStream(4));
  for (std::size_t r = 0; r < 200; ++r) ASSERT_EQ(z.outcome(0, r, 0), 1);
  const std::vector<std::vector<Direction>> along_x = {{Direction::ex()}};
  const ShotTable x = simulate_shots(zero, Parties::full(1), along_x, 20000, RngStream(4));
  double sum = 0.0;
  for (std::size_t r = 0; r < 20000; ++r) sum += x.outcome(0, r, 0);
  EXPECT_LT(std::abs(sum / 20000.0), 4.0 / std::sqrt(20000.0));
}

TEST(ShotTest, UnbiasedWhereNaiveIsBiased) {
  const DensityMatrix rho = make_state(StateSpec::bell_psi_minus());
  const auto settings = random_settings(2, 20000, RngStream(10));
  const ShotTable shots = simulate_shots(rho, Parties::full(2), settings, 2, RngStream(11));
  const MomentEstimate unbiased = estimate_moment_from_shots(shots, 2);
  EXPECT_LT(std::abs(unbiased.value - 1.0 / 3.0), 4.0 * *unbiased.std_error);
  // E[(mean of K products)^2] = E^2 + (1 - E^2) / K.
  const MomentEstimate naive = naive_moment_from_shots(shots, 2);
  EXPECT_NEAR(naive.value, 1.0 / 3.0 + (1.0 - 1.0 / 3.0) / 2.0, 0.02);
  EXPECT_THROW(estimate_moment_from_shots(shots, 3), std::invalid_argument);
}

TEST(ShotTest, MarginalOfRecordedShots) {
  const DensityMatrix rho = make_state(StateSpec::ghz(3));
  const auto settings = random_settings(3, 20000, RngStream(12));
  const ShotTable shots = simulate_shots(rho, Parties::full(3), settings, 3, RngStream(13));
  const MomentEstimate pair = estimate_moment_from_shots(shots, 2, Parties::parse("1,2"));
  EXPECT_LT(std::abs(pair.value - oracle::second_moment(rho.matrix(), {1, 2})), 4.0 * *pair.std_error);
  EXPECT_THROW(estimate_moment_from_shots(shots, 2, Parties::parse("4")), std::invalid_argument);
}

TEST(PurityFromMomentsTest, MatchesDirectPurity) {
  RngStream rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_mixed_state(3, rng);
    EXPECT_NEAR(purity_from_moments(values_of(exact_moment_table(rho)), Parties::full(3)),
                oracle::purity(rho.matrix()), 1e-12);
  }
  MomentValues incomplete = {{Parties::parse("1"), 0.1}};
  try {
    purity_from_moments(incomplete, Parties::full(2));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("{2}"), std::string::npos);
  }
}

}  // namespace
}  // namespace randmeas
