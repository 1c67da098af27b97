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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "randmeas/correlations.hpp"
#include "randmeas/parties.hpp"
#include "randmeas/qstate.hpp"
#include "randmeas/rng.hpp"
#include "randmeas/sampling.hpp"

namespace randmeas {

enum class MomentMethod { kMonteCarlo, kExactTensor, kDesign, kFiniteShot };

std::string to_string(MomentMethod method);

// t-th moment of the distribution of E over uniformly random local axes.
struct MomentEstimate {
  Parties subset;
  int order = 2;
  double value = 0.0;
  // Empty for exact methods.
  std::optional<double> std_error;
  MomentMethod method = MomentMethod::kExactTensor;

  // Provenance, filled where meaningful.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> settings;
  std::optional<std::size_t> shots;

  bool is_exact() const { return !std_error.has_value(); }
};

using MomentTable = std::map<Parties, MomentEstimate>;
using MomentValues = std::map<Parties, double>;

MomentValues values_of(const MomentTable& table);

// Sample mean of E^t with plug-in standard error sd(E^t)/sqrt(M). Needs M >= 2.
MomentEstimate moment_mc(const SampleSet& samples, int t);

// Standard error of the sample mean of E^t from `resamples` bootstrap draws.
double bootstrap_std_error(const SampleSet& samples, int t, int resamples, RngStream rng);

// 3^-k * sum T^2 (exact second moment of a k-party distribution).
MomentEstimate moment_exact_t2(const CorrelationTensor& tensor);

// Exact t-th moment by averaging E^t over all L^k tuples of design points.
// Requires design.degree >= t and a full (not antipodally halved) design.
MomentEstimate moment_design(const DensityMatrix& rho, Parties subset, int t,
                             const SphericalDesign& design);

// Even t only: the same value from one point per antipodal pair, (L/2)^k tuples.
MomentEstimate moment_design_half(const DensityMatrix& rho, Parties subset, int t,
                                  const SphericalDesign& design);

// Exact second moments for every non-empty subset of the state's parties.
MomentTable exact_moment_table(const DensityMatrix& rho);

// Monte-Carlo moments of order t for every non-empty subset; each subset
// consumes its own child stream rng.split(mask).
MomentTable monte_carlo_moment_table(const DensityMatrix& rho, int t, std::size_t samples,
                                     const RngStream& rng);

// Recorded +-1 outcomes of K repetitions for each of M measurement settings.
struct ShotTable {
  Parties subset;
  std::size_t shots_per_setting = 0;
  // settings[s][j]: axis of the j-th party (ascending label) in setting s.
  std::vector<std::vector<Direction>> settings;
  // Flat [setting][shot][party] storage of +-1.
  std::vector<std::int8_t> outcomes;
  std::uint64_t seed = 0;

  std::size_t setting_count() const { return settings.size(); }
  int party_count() const { return subset.size(); }
  std::int8_t outcome(std::size_t setting, std::size_t shot, int position) const;
};

// M settings with an independent uniform axis per party.
std::vector<std::vector<Direction>> random_settings(int parties, std::size_t count,
                                                    const RngStream& rng);

// Draws K joint outcomes per setting from the exact Born distribution over
// the 2^k outcome combinations of the parties in `subset`.
ShotTable simulate_shots(const DensityMatrix& rho, Parties subset,
                         std::span<const std::vector<Direction>> settings, std::size_t shots,
                         const RngStream& rng);

// Unbiased estimate of the order-t moment: per setting, the average over all
// ordered t-tuples of distinct shots of the product of their outcome
// products, then averaged over settings. `marginal` selects a subset of the
// table's parties (default: all of them).
MomentEstimate estimate_moment_from_shots(const ShotTable& shots, int t,
                                          std::optional<Parties> marginal = std::nullopt);

// Mean over settings of (sample mean of products)^t; biased for finite K.
MomentEstimate naive_moment_from_shots(const ShotTable& shots, int t,
                                       std::optional<Parties> marginal = std::nullopt);

// tr rho^2 = 2^-n (1 + sum_A 3^|A| m_A) over all non-empty subsets A of
// `parties`; m of the empty set is taken as 1.
double purity_from_moments(const MomentValues& moments, Parties parties);

}  // namespace randmeas
