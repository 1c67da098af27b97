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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "randmeas/moments.hpp"
#include "randmeas/parties.hpp"
#include "randmeas/qstate.hpp"

namespace randmeas {

struct CriteriaConfig {
  // Statistical inputs need margin > z * propagated standard error.
  double z = 3.0;
  // Exact inputs need margin > exact_tolerance; absorbs rounding for states
  // sitting exactly on a bound (W states, Bell x product on the 3-qubit line).
  double exact_tolerance = 1e-10;
  // c_k in the biseparability bound M_k <= c_k (1 - tr rho_A^2), keyed by k.
  // Sizes without an entry fall back to the pure-state factorization test,
  // which is only applied when the marginal is pure.
  std::map<int, double> bound_constants = {{2, 4.0 / 9.0}, {4, 8.0 / 81.0}};
};

// Outcome of one criterion. margin is oriented so that positive means the
// property (entanglement, exclusion) was detected.
struct Verdict {
  std::string criterion;
  Parties subset;
  double statistic = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  // Propagated standard error of the margin; empty for exact inputs.
  std::optional<double> error;
  bool detected = false;
  std::vector<std::string> provenance;
  std::string note;
};

// M_S = m_S - 1/2 sum_{A proper, non-empty} m_A m_{S\A}.
double m_quantifier(const MomentValues& moments, Parties full);

// Marginal-based GME test on the parties `subset`, using the configured
// bound for its size. `purity` defaults to the value implied by the moments.
Verdict m_bound_test(const MomentTable& moments, Parties subset, std::optional<double> purity,
                     const CriteriaConfig& config = {});

// Four-party instance: M_4 > 8/81 (1 - tr rho^2) certifies genuine
// four-partite entanglement.
Verdict gme_test_4(const MomentTable& moments, std::optional<double> purity = std::nullopt,
                   const CriteriaConfig& config = {});

struct StructureReport {
  // One verdict per subset of size >= 2 except the full set, ordered by size.
  std::vector<Verdict> marginals;
  Verdict full;

  std::vector<Parties> flagged_marginals() const;
};

// `purities` is keyed by subset; missing entries are derived from moments.
StructureReport structure_report(const MomentTable& moments, const MomentValues& purities,
                                 const CriteriaConfig& config = {});
// Exact moments and directly computed marginal purities.
StructureReport structure_report(const DensityMatrix& rho, const CriteriaConfig& config = {});

// Three-qubit biseparability line R4 >= (972 R2^2 + 90 R2 - 5)/425;
// statistic = RHS - R4, threshold 0.
Verdict bisep_line_3(double r2, double r4, const CriteriaConfig& config = {});
Verdict bisep_line_3(const MomentEstimate& r2, const MomentEstimate& r4,
                     const CriteriaConfig& config = {});

// chi(n) = (5 - 4/n) / 3^n, the largest R2 attainable in Conv(W^(n)).
double w_class_threshold(int n);

// R2 > chi(n) excludes the state from the convex hull of the W class.
Verdict w_class_witness(double r2, int n, const CriteriaConfig& config = {});
Verdict w_class_witness(const MomentEstimate& r2, int n, const CriteriaConfig& config = {});

// Correlation length above 1 (the pure-product value) signals entanglement.
Verdict entanglement_by_length(double length, int n, std::optional<double> error = std::nullopt,
                               const CriteriaConfig& config = {});

}  // namespace randmeas
