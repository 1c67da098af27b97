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

namespace randmeas {
namespace {

double int_pow(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void require_order(int t) {
  if (t < 1) throw std::invalid_argument("moment order must be >= 1, got " + std::to_string(t));
}

// Pairwise sum of E^t over design tuples [lo, hi) in lexicographic order.
class DesignSum {
 public:
  DesignSum(const DensityMatrix& reduced, const std::vector<Direction>& points, int t)
      : reduced_(reduced),
        points_(points),
        t_(t),
        k_(reduced.n_qubits()),
        local_(Parties::full(reduced.n_qubits())),
        dirs_(static_cast<std::size_t>(reduced.n_qubits())) {}

  double sum(std::size_t lo, std::size_t hi) {
    if (hi - lo <= kLeaf) {
      double acc = 0.0;
      for (std::size_t i = lo; i < hi; ++i) acc += term(i);
      return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return sum(lo, mid) + sum(mid, hi);
  }

 private:
  static constexpr std::size_t kLeaf = 32;

  double term(std::size_t index) {
    const std::size_t base = points_.size();
    for (int pos = k_ - 1; pos >= 0; --pos) {
      dirs_[static_cast<std::size_t>(pos)] = points_[index % base];
      index /= base;
    }
    return int_pow(correlation(reduced_, local_, dirs_), t_);
  }

  const DensityMatrix& reduced_;
  const std::vector<Direction>& points_;
  int t_;
  int k_;
  Parties local_;
  std::vector<Direction> dirs_;
};

double design_average(const DensityMatrix& rho, Parties subset, int t,
                      const std::vector<Direction>& points) {
  if (subset.empty()) throw std::invalid_argument("moment_design: empty subset");
  const DensityMatrix reduced = partial_trace(rho, subset);
  std::size_t tuples = 1;
  for (int i = 0; i < subset.size(); ++i) tuples *= points.size();
  DesignSum summer(reduced, points, t);
  return summer.sum(0, tuples) / static_cast<double>(tuples);
}

// Sum over j of C(plus, j) C(minus, t - j) (-1)^(t - j), divided by C(K, t):
// the mean over t-subsets of distinct shots of the product of their signs.
double u_statistic(std::size_t plus, std::size_t minus, int t) {
  const double k = static_cast<double>(plus + minus);
  auto choose = [](double n, int r) {
    if (r < 0 || n < r) return 0.0;
    double out = 1.0;
    for (int i = 0; i < r; ++i) out *= (n - i) / (i + 1);
    return out;
  };
  double acc = 0.0;
  for (int j = 0; j <= t; ++j) {
    const double term = choose(static_cast<double>(plus), j) *
                        choose(static_cast<double>(minus), t - j);
    acc += ((t - j) % 2 == 0) ? term : -term;
  }
  return acc / choose(k, t);
}

std::vector<int> marginal_positions(const ShotTable& shots, std::optional<Parties> marginal) {
  const Parties chosen = marginal.value_or(shots.subset);
  if (chosen.empty() || !chosen.is_subset_of(shots.subset)) {
    throw std::invalid_argument("requested marginal {" + chosen.to_string() +
                                "} is not a non-empty subset of the recorded parties {" +
                                shots.subset.to_string() + "}");
  }
  std::vector<int> positions;
  for (int label : chosen.labels()) positions.push_back(shots.subset.position_of(label));
  return positions;
}

// Mean and standard error of per-setting values.
void summarize(const std::vector<double>& per_setting, MomentEstimate& out) {
  const double m = static_cast<double>(per_setting.size());
  double mean = 0.0;
  for (double v : per_setting) mean += v;
  mean /= m;
  out.value = mean;
  if (per_setting.size() >= 2) {
    double ss = 0.0;
    for (double v : per_setting) ss += (v - mean) * (v - mean);
    out.std_error = std::sqrt(ss / (m - 1.0) / m);
  }
}

}  // namespace

std::string to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::kMonteCarlo: return "monte_carlo";
    case MomentMethod::kExactTensor: return "exact_tensor";
    case MomentMethod::kDesign: return "design";
    case MomentMethod::kFiniteShot: return "finite_shot";
  }
  return "unknown";
}

MomentValues values_of(const MomentTable& table) {
  MomentValues out;
  for (const auto& [subset, est] : table) out.emplace(subset, est.value);
  return out;
}

MomentEstimate moment_mc(const SampleSet& samples, int t) {
  require_order(t);
  const std::size_t m = samples.values.size();
  if (m < 2) throw std::invalid_argument("moment_mc: need at least 2 samples for a standard error");
  double mean = 0.0;
  for (double e : samples.values) mean += int_pow(e, t);
  mean /= static_cast<double>(m);
  double ss = 0.0;
  for (double e : samples.values) {
    const double d = int_pow(e, t) - mean;
    ss += d * d;
  }
  MomentEstimate out;
  out.subset = samples.subset;
  out.order = t;
  out.value = mean;
  out.std_error = std::sqrt(ss / static_cast<double>(m - 1)) / std::sqrt(static_cast<double>(m));
  out.method = MomentMethod::kMonteCarlo;
  out.seed = samples.seed;
  out.settings = m;
  return out;
}

double bootstrap_std_error(const SampleSet& samples, int t, int resamples, RngStream rng) {
  require_order(t);
  const std::size_t m = samples.values.size();
  if (m < 2 || resamples < 2) throw std::invalid_argument("bootstrap needs >= 2 samples and resamples");
  std::vector<double> powered(m);
  for (std::size_t i = 0; i < m; ++i) powered[i] = int_pow(samples.values[i], t);
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& mean : means) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += powered[rng.next_u64() % m];
    mean = acc / static_cast<double>(m);
  }
  double avg = 0.0;
  for (double v : means) avg += v;
  avg /= resamples;
  double ss = 0.0;
  for (double v : means) ss += (v - avg) * (v - avg);
  return std::sqrt(ss / (resamples - 1));
}

MomentEstimate moment_exact_t2(const CorrelationTensor& tensor) {
  MomentEstimate out;
  out.subset = tensor.subset;
  out.order = 2;
  out.value = tensor.squared_sum() / int_pow(3.0, tensor.order());
  out.method = MomentMethod::kExactTensor;
  return out;
}

MomentEstimate moment_design(const DensityMatrix& rho, Parties subset, int t,
                             const SphericalDesign& design) {
  require_order(t);
  if (design.degree < t) {
    throw std::invalid_argument("design order insufficient for requested moment (design degree " +
                                std::to_string(design.degree) + ", moment order " +
                                std::to_string(t) + ")");
  }
  if (design.antipodal_half) {
    throw std::invalid_argument("moment_design needs a full design; use moment_design_half");
  }
  MomentEstimate out;
  out.subset = subset;
  out.order = t;
  out.value = design_average(rho, subset, t, design.points);
  out.method = MomentMethod::kDesign;
  return out;
}

MomentEstimate moment_design_half(const DensityMatrix& rho, Parties subset, int t,
                                  const SphericalDesign& design) {
  require_order(t);
  if (t % 2 != 0) {
    throw std::invalid_argument("antipodal reduction requires an even moment order, got " +
                                std::to_string(t));
  }
  if (design.degree < t) {
    throw std::invalid_argument("design order insufficient for requested moment (design degree " +
                                std::to_string(design.degree) + ", moment order " +
                                std::to_string(t) + ")");
  }
  const SphericalDesign half = design.antipodal_half ? design : half_design(design);
  MomentEstimate out;
  out.subset = subset;
  out.order = t;
  out.value = design_average(rho, subset, t, half.points);
  out.method = MomentMethod::kDesign;
  return out;
}

MomentTable exact_moment_table(const DensityMatrix& rho) {
  MomentTable table;
  for (Parties subset : nonempty_subsets(Parties::full(rho.n_qubits()))) {
    table.emplace(subset, moment_exact_t2(correlation_tensor(rho, subset)));
  }
  return table;
}

MomentTable monte_carlo_moment_table(const DensityMatrix& rho, int t, std::size_t samples,
                                     const RngStream& rng) {
  MomentTable table;
  for (Parties subset : nonempty_subsets(Parties::full(rho.n_qubits()))) {
    const SampleSet set = sample_distribution(rho, subset, samples, rng.split(subset.mask()));
    table.emplace(subset, moment_mc(set, t));
  }
  return table;
}

std::int8_t ShotTable::outcome(std::size_t setting, std::size_t shot, int position) const {
  const std::size_t k = static_cast<std::size_t>(party_count());
  return outcomes.at((setting * shots_per_setting + shot) * k + static_cast<std::size_t>(position));
}

std::vector<std::vector<Direction>> random_settings(int parties, std::size_t count,
                                                    const RngStream& rng) {
  std::vector<std::vector<Direction>> out(count);
  for (std::size_t s = 0; s < count; ++s) {
    RngStream draw = rng.split(s);
    out[s].resize(static_cast<std::size_t>(parties));
    for (auto& d : out[s]) d = uniform_direction(draw);
  }
  return out;
}

ShotTable simulate_shots(const DensityMatrix& rho, Parties subset,
                         std::span<const std::vector<Direction>> settings, std::size_t shots,
                         const RngStream& rng) {
  if (shots < 1) throw std::invalid_argument("simulate_shots: need at least one shot per setting");
  if (subset.empty()) throw std::invalid_argument("simulate_shots: empty subset");
  const DensityMatrix reduced = partial_trace(rho, subset);
  const int k = subset.size();
  const std::size_t outcomes_count = std::size_t{1} << k;

  ShotTable table;
  table.subset = subset;
  table.shots_per_setting = shots;
  table.seed = rng.seed();
  table.settings.assign(settings.begin(), settings.end());
  table.outcomes.resize(settings.size() * shots * static_cast<std::size_t>(k));

  std::vector<double> cumulative(outcomes_count);
  std::vector<Mat2> ops(static_cast<std::size_t>(k));
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const auto& setting = settings[s];
    if (static_cast<int>(setting.size()) != k) {
      throw std::invalid_argument("simulate_shots: setting " + std::to_string(s) + " has " +
                                  std::to_string(setting.size()) + " directions, expected " +
                                  std::to_string(k));
    }
    // Outcome index bit (k-1-j) set means party j read -1.
    double total = 0.0;
    for (std::size_t o = 0; o < outcomes_count; ++o) {
      for (int j = 0; j < k; ++j) {
        const double sign = ((o >> (k - 1 - j)) & 1) ? -1.0 : 1.0;
        ops[static_cast<std::size_t>(j)] =
            0.5 * (Mat2::Identity() + sign * spin_operator(setting[static_cast<std::size_t>(j)]));
      }
      total += std::max(0.0, local_product_expectation(reduced, ops).real());
      cumulative[o] = total;
    }
    RngStream draw = rng.split(s);
    for (std::size_t shot = 0; shot < shots; ++shot) {
      const double u = draw.uniform() * total;
      std::size_t o = 0;
      while (o + 1 < outcomes_count && u >= cumulative[o]) ++o;
      const std::size_t base = (s * shots + shot) * static_cast<std::size_t>(k);
      for (int j = 0; j < k; ++j) {
        table.outcomes[base + static_cast<std::size_t>(j)] = ((o >> (k - 1 - j)) & 1) ? -1 : 1;
      }
    }
  }
  return table;
}

MomentEstimate estimate_moment_from_shots(const ShotTable& shots, int t,
                                          std::optional<Parties> marginal) {
  require_order(t);
  const std::size_t k_shots = shots.shots_per_setting;
  if (k_shots < static_cast<std::size_t>(t)) {
    throw std::invalid_argument("need at least t shots per setting for unbiased order-t estimation");
  }
  if (shots.setting_count() == 0) throw std::invalid_argument("shot table has no settings");
  const auto positions = marginal_positions(shots, marginal);
  std::vector<double> per_setting(shots.setting_count());
  for (std::size_t s = 0; s < shots.setting_count(); ++s) {
    std::size_t plus = 0;
    for (std::size_t r = 0; r < k_shots; ++r) {
      int product = 1;
      for (int pos : positions) product *= shots.outcome(s, r, pos);
      if (product > 0) ++plus;
    }
    per_setting[s] = u_statistic(plus, k_shots - plus, t);
  }
  MomentEstimate out;
  out.subset = marginal.value_or(shots.subset);
  out.order = t;
  out.method = MomentMethod::kFiniteShot;
  out.seed = shots.seed;
  out.settings = shots.setting_count();
  out.shots = k_shots;
  summarize(per_setting, out);
  return out;
}

MomentEstimate naive_moment_from_shots(const ShotTable& shots, int t,
                                       std::optional<Parties> marginal) {
  require_order(t);
  if (shots.setting_count() == 0) throw std::invalid_argument("shot table has no settings");
  const auto positions = marginal_positions(shots, marginal);
  const std::size_t k_shots = shots.shots_per_setting;
  std::vector<double> per_setting(shots.setting_count());
  for (std::size_t s = 0; s < shots.setting_count(); ++s) {
    double sum = 0.0;
    for (std::size_t r = 0; r < k_shots; ++r) {
      int product = 1;
      for (int pos : positions) product *= shots.outcome(s, r, pos);
      sum += product;
    }
    per_setting[s] = int_pow(sum / static_cast<double>(k_shots), t);
  }
  MomentEstimate out;
  out.subset = marginal.value_or(shots.subset);
  out.order = t;
  out.method = MomentMethod::kFiniteShot;
  out.seed = shots.seed;
  out.settings = shots.setting_count();
  out.shots = k_shots;
  summarize(per_setting, out);
  return out;
}

double purity_from_moments(const MomentValues& moments, Parties parties) {
  if (parties.empty()) throw std::invalid_argument("purity_from_moments: empty party set");
  double acc = 1.0;  // empty set
  for (Parties subset : nonempty_subsets(parties)) {
    auto it = moments.find(subset);
    if (it == moments.end()) {
      throw std::invalid_argument("purity_from_moments: missing moment for subset {" +
                                  subset.to_string() + "}");
    }
    if (it->second < -1e-12) {
      throw std::invalid_argument("purity_from_moments: negative second moment for subset {" +
                                  subset.to_string() + "}");
    }
    acc += int_pow(3.0, subset.size()) * it->second;
  }
  return acc / int_pow(2.0, parties.size());
}

}  // namespace randmeas
