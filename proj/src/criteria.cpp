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

#include "randmeas/criteria.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace randmeas {
namespace {

double pow_int(double base, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void decide(Verdict& v, const CriteriaConfig& config) {
  v.margin = v.statistic - v.threshold;
  if (v.error) {
    v.detected = v.margin > config.z * *v.error;
  } else {
    v.detected = v.margin > config.exact_tolerance;
  }
}

std::vector<std::string> provenance_of(const MomentTable& moments, Parties subset) {
  std::set<std::string> tags;
  for (Parties a : nonempty_subsets(subset)) {
    if (auto it = moments.find(a); it != moments.end()) tags.insert(to_string(it->second.method));
  }
  return {tags.begin(), tags.end()};
}

const MomentEstimate& lookup(const MomentTable& moments, Parties subset) {
  auto it = moments.find(subset);
  if (it == moments.end()) {
    throw std::invalid_argument("missing second moment for subset {" + subset.to_string() + "}");
  }
  return it->second;
}

}  // namespace

double m_quantifier(const MomentValues& moments, Parties full) {
  if (full.size() < 2) throw std::invalid_argument("m_quantifier needs at least two parties");
  auto get = [&](Parties a) {
    auto it = moments.find(a);
    if (it == moments.end()) {
      throw std::invalid_argument("missing second moment for subset {" + a.to_string() + "}");
    }
    return it->second;
  };
  double cross = 0.0;
  for (Parties a : proper_nonempty_subsets(full)) cross += get(a) * get(full.without(a));
  return get(full) - 0.5 * cross;
}

Verdict m_bound_test(const MomentTable& moments, Parties subset, std::optional<double> purity,
                     const CriteriaConfig& config) {
  const int k = subset.size();
  if (k < 2) throw std::invalid_argument("M test needs at least two parties");
  MomentValues values;
  for (Parties a : nonempty_subsets(subset)) values.emplace(a, lookup(moments, a).value);

  Verdict v;
  v.criterion = "gme_m" + std::to_string(k);
  v.subset = subset;
  v.provenance = provenance_of(moments, subset);
  v.statistic = m_quantifier(values, subset);

  const bool purity_from_data = !purity.has_value();
  const double p = purity_from_data ? purity_from_moments(values, subset) : *purity;
  if (!(p > 0.0 && p <= 1.0 + config.exact_tolerance)) {
    throw std::invalid_argument("purity must lie in (0, 1], got " + std::to_string(p));
  }

  double c = 0.0;
  if (auto it = config.bound_constants.find(k); it != config.bound_constants.end()) {
    c = it->second;
    v.threshold = c * (1.0 - p);
  } else if (p >= 1.0 - config.exact_tolerance) {
    v.threshold = 0.0;
    v.note = "pure-state factorization test (no mixed-state bound configured for " +
             std::to_string(k) + " parties)";
  } else {
    v.threshold = std::numeric_limits<double>::infinity();
    v.note = "no mixed-state bound configured for " + std::to_string(k) + " parties";
  }

  // d margin / d m_A, with the purity term included only when the purity is
  // itself derived from these moments.
  const double scale = purity_from_data ? c / pow_int(2.0, k) : 0.0;
  double variance = 0.0;
  bool statistical = false;
  for (Parties a : nonempty_subsets(subset)) {
    const auto& est = lookup(moments, a);
    if (!est.std_error) continue;
    statistical = true;
    const double dm = (a == subset) ? 1.0 : -values.at(subset.without(a));
    const double grad = dm + scale * pow_int(3.0, a.size());
    variance += grad * grad * *est.std_error * *est.std_error;
  }
  if (statistical) v.error = std::sqrt(variance);
  decide(v, config);
  return v;
}

Verdict gme_test_4(const MomentTable& moments, std::optional<double> purity,
                   const CriteriaConfig& config) {
  Parties full;
  for (const auto& [subset, est] : moments) full = full | subset;
  if (full.size() != 4) {
    throw std::invalid_argument("gme4 criterion is proven for four qubits only; moments cover " +
                                std::to_string(full.size()) + " parties");
  }
  Verdict v = m_bound_test(moments, full, purity, config);
  v.criterion = "gme4";
  return v;
}

std::vector<Parties> StructureReport::flagged_marginals() const {
  std::vector<Parties> out;
  for (const auto& v : marginals) {
    if (v.detected) out.push_back(v.subset);
  }
  return out;
}

StructureReport structure_report(const MomentTable& moments, const MomentValues& purities,
                                 const CriteriaConfig& config) {
  Parties full;
  for (const auto& [subset, est] : moments) full = full | subset;
  if (full.size() < 2) throw std::invalid_argument("structure report needs at least two parties");
  auto purity_for = [&](Parties a) -> std::optional<double> {
    if (auto it = purities.find(a); it != purities.end()) return it->second;
    return std::nullopt;
  };
  StructureReport report;
  for (Parties a : nonempty_subsets(full)) {
    if (a.size() < 2 || a == full) continue;
    report.marginals.push_back(m_bound_test(moments, a, purity_for(a), config));
  }
  report.full = m_bound_test(moments, full, purity_for(full), config);
  return report;
}

StructureReport structure_report(const DensityMatrix& rho, const CriteriaConfig& config) {
  const MomentTable moments = exact_moment_table(rho);
  MomentValues purities;
  for (Parties a : nonempty_subsets(Parties::full(rho.n_qubits()))) {
    if (a.size() >= 2) purities.emplace(a, purity_direct(partial_trace(rho, a)));
  }
  return structure_report(moments, purities, config);
}

Verdict bisep_line_3(double r2, double r4, const CriteriaConfig& config) {
  MomentEstimate e2;
  e2.order = 2;
  e2.value = r2;
  MomentEstimate e4;
  e4.order = 4;
  e4.value = r4;
  return bisep_line_3(e2, e4, config);
}

Verdict bisep_line_3(const MomentEstimate& r2, const MomentEstimate& r4,
                     const CriteriaConfig& config) {
  if (r2.order != 2 || r4.order != 4) {
    throw std::invalid_argument("bisep3 needs a second and a fourth moment");
  }
  const double x = r2.value;
  const double rhs = (972.0 * x * x + 90.0 * x - 5.0) / 425.0;
  Verdict v;
  v.criterion = "bisep3";
  v.subset = r2.subset;
  v.statistic = rhs - r4.value;
  v.threshold = 0.0;
  v.provenance = {to_string(r2.method)};
  if (r4.method != r2.method) v.provenance.push_back(to_string(r4.method));
  if (r2.std_error || r4.std_error) {
    const double d2 = (1944.0 * x + 90.0) / 425.0 * r2.std_error.value_or(0.0);
    const double d4 = r4.std_error.value_or(0.0);
    v.error = std::sqrt(d2 * d2 + d4 * d4);
  }
  if (rhs >= 1.0) v.note = "bound right-hand side >= 1: outside the range where the line is informative";
  decide(v, config);
  return v;
}

double w_class_threshold(int n) {
  if (n < 3) throw std::invalid_argument("W class witness needs n >= 3, got " + std::to_string(n));
  return (5.0 - 4.0 / n) / pow_int(3.0, n);
}

Verdict w_class_witness(double r2, int n, const CriteriaConfig& config) {
  MomentEstimate e;
  e.order = 2;
  e.value = r2;
  e.subset = Parties::full(std::max(n, 1));
  return w_class_witness(e, n, config);
}

Verdict w_class_witness(const MomentEstimate& r2, int n, const CriteriaConfig& config) {
  Verdict v;
  v.criterion = "wclass";
  v.subset = r2.subset;
  v.threshold = w_class_threshold(n);
  v.statistic = r2.value;
  v.error = r2.std_error;
  v.provenance = {to_string(r2.method)};
  v.note = "detected means excluded from the convex hull of the W class (not a GME statement)";
  decide(v, config);
  return v;
}

Verdict entanglement_by_length(double length, int n, std::optional<double> error,
                               const CriteriaConfig& config) {
  if (length < 0.0) throw std::invalid_argument("correlation length must be non-negative");
  Verdict v;
  v.criterion = "length";
  v.subset = Parties::full(std::max(n, 1));
  v.statistic = length;
  v.threshold = 1.0;
  v.error = error;
  v.note = "entanglement (not necessarily genuine multipartite)";
  decide(v, config);
  return v;
}

}  // namespace randmeas
