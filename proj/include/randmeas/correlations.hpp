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

#include "randmeas/parties.hpp"
#include "randmeas/qstate.hpp"
#include "randmeas/rng.hpp"
#include "randmeas/sampling.hpp"

namespace randmeas {

// |E| may exceed 1 by at most this much before clamping; larger excursions
// indicate a bug and throw std::logic_error.
inline constexpr double kCorrelationSlack = 1e-9;
inline constexpr double kImaginaryResidue = 1e-10;

// u . sigma
Mat2 spin_operator(const Direction& u);

// Party label -> local measurement direction.
using DirectionMap = std::map<int, Direction>;

// <sigma_u1 ⊗ ... ⊗ sigma_uk> with identity on parties absent from `dirs`.
double correlation(const DensityMatrix& rho, const DirectionMap& dirs);

// Same, with directions given in ascending label order of `parties`.
double correlation(const DensityMatrix& rho, Parties parties, std::span<const Direction> dirs);

// Components T_{i1..ik}, i in {x,y,z}, for the parties of `subset`. The flat
// index is sum_j axis_j * 3^(k-1-j), so the first party varies slowest.
struct CorrelationTensor {
  Parties subset;
  std::vector<double> components;

  int order() const { return subset.size(); }
  double at(std::span<const int> axes) const;
  double squared_sum() const;
  // "xxyz"-style label of the component at flat index `index`.
  std::string label(std::size_t index) const;
};

CorrelationTensor correlation_tensor(const DensityMatrix& rho, Parties subset);

// Sum of squared tensor components over `subset`.
double correlation_length(const DensityMatrix& rho, Parties subset);

// Correlation values E measured along i.i.d. Haar-random local axes.
struct SampleSet {
  Parties subset;
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  std::size_t settings_count() const { return values.size(); }
};

// Sample i draws its local unitaries from rng.split(i), so the output does
// not depend on how the index range is partitioned.
SampleSet sample_distribution(const DensityMatrix& rho, Parties subset, std::size_t samples,
                              const RngStream& rng);

enum class ReferenceKind { kProduct2, kBell, kWerner, kMixedWhite };

// Closed-form density of E for two-qubit reference states under Haar-random
// local measurements.
class ReferenceDensity {
 public:
  ReferenceKind kind() const { return kind_; }
  double mixing() const { return p_; }
  // Delta peak at 0; pdf() is undefined and throws.
  bool is_delta() const { return kind_ == ReferenceKind::kMixedWhite; }

  double pdf(double e) const;
  double cdf(double e) const;
  std::string name() const;

 private:
  friend ReferenceDensity analytic_pdf(ReferenceKind, double);
  ReferenceKind kind_ = ReferenceKind::kBell;
  double p_ = 1.0;
};

// `p` is only read for kWerner; p = 0 yields the delta density.
ReferenceDensity analytic_pdf(ReferenceKind kind, double p = 1.0);

// Reference density for the full two-party distribution of a named state,
// when one exists.
std::optional<ReferenceDensity> reference_density_for(const StateSpec& spec);

struct Histogram {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
  double bin_lo(std::size_t i) const { return lo + bin_width() * static_cast<double>(i); }
  double density(std::size_t i) const;
};

inline constexpr int kDefaultHistogramBins = 81;

Histogram make_histogram(std::span<const double> values, int bins = kDefaultHistogramBins,
                         double lo = -1.0, double hi = 1.0);

}  // namespace randmeas
