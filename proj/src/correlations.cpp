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

#include "randmeas/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace randmeas {
namespace {

double checked_real(Complex value) {
  if (std::abs(value.imag()) > kImaginaryResidue) {
    throw std::logic_error("correlation has imaginary residue " + std::to_string(value.imag()));
  }
  const double e = value.real();
  if (std::abs(e) > 1.0 + kCorrelationSlack) {
    throw std::logic_error("correlation " + std::to_string(e) + " outside [-1, 1]");
  }
  return std::clamp(e, -1.0, 1.0);
}

}  // namespace

Mat2 spin_operator(const Direction& u) {
  return u.x * pauli_x() + u.y * pauli_y() + u.z * pauli_z();
}

double correlation(const DensityMatrix& rho, const DirectionMap& dirs) {
  if (dirs.empty()) throw std::invalid_argument("correlation: no measured parties");
  std::vector<Mat2> ops(rho.n_qubits(), Mat2::Identity());
  for (const auto& [party, dir] : dirs) {
    if (party < 1 || party > rho.n_qubits()) {
      throw std::invalid_argument("correlation: party " + std::to_string(party) +
                                  " does not exist");
    }
    ops[party - 1] = spin_operator(dir);
  }
  return checked_real(local_product_expectation(rho, ops));
}

double correlation(const DensityMatrix& rho, Parties parties, std::span<const Direction> dirs) {
  if (parties.empty()) throw std::invalid_argument("correlation: no measured parties");
  if (static_cast<int>(dirs.size()) != parties.size()) {
    throw std::invalid_argument("correlation: direction count does not match parties");
  }
  if (parties.max_label() > rho.n_qubits()) {
    throw std::invalid_argument("correlation: party does not exist");
  }
  std::vector<Mat2> ops(rho.n_qubits(), Mat2::Identity());
  std::size_t i = 0;
  for (int label : parties.labels()) ops[label - 1] = spin_operator(dirs[i++]);
  return checked_real(local_product_expectation(rho, ops));
}

double CorrelationTensor::at(std::span<const int> axes) const {
  if (static_cast<int>(axes.size()) != order()) {
    throw std::invalid_argument("tensor index has wrong order");
  }
  std::size_t flat = 0;
  for (int axis : axes) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
    flat = flat * 3 + static_cast<std::size_t>(axis);
  }
  return components.at(flat);
}

double CorrelationTensor::squared_sum() const {
  double sum = 0.0;
  for (double c : components) sum += c * c;
  return sum;
}

std::string CorrelationTensor::label(std::size_t index) const {
  std::string out(static_cast<std::size_t>(order()), 'x');
  for (int pos = order() - 1; pos >= 0; --pos) {
    out[static_cast<std::size_t>(pos)] = "xyz"[index % 3];
    index /= 3;
  }
  return out;
}

CorrelationTensor correlation_tensor(const DensityMatrix& rho, Parties subset) {
  if (subset.empty()) throw std::invalid_argument("correlation_tensor: empty subset");
  if (subset.max_label() > rho.n_qubits()) {
    throw std::invalid_argument("correlation_tensor: party does not exist");
  }
  const Mat2 paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  const auto labels = subset.labels();
  const int k = subset.size();
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= 3;

  CorrelationTensor tensor;
  tensor.subset = subset;
  tensor.components.resize(count);
  std::vector<Mat2> ops(rho.n_qubits(), Mat2::Identity());
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    for (int pos = k - 1; pos >= 0; --pos) {
      ops[labels[pos] - 1] = paulis[rest % 3];
      rest /= 3;
    }
    tensor.components[flat] = checked_real(local_product_expectation(rho, ops));
  }
  return tensor;
}

double correlation_length(const DensityMatrix& rho, Parties subset) {
  return correlation_tensor(rho, subset).squared_sum();
}

SampleSet sample_distribution(const DensityMatrix& rho, Parties subset, std::size_t samples,
                              const RngStream& rng) {
  if (samples < 1) throw std::invalid_argument("sample_distribution: need at least one sample");
  if (subset.empty()) throw std::invalid_argument("sample_distribution: empty subset");
  const DensityMatrix reduced = partial_trace(rho, subset);
  const int k = subset.size();
  const Parties local = Parties::full(k);

  SampleSet out;
  out.subset = subset;
  out.seed = rng.seed();
  out.stream_id = rng.stream_id();
  out.values.resize(samples);
  std::vector<Direction> dirs(k);
  for (std::size_t i = 0; i < samples; ++i) {
    RngStream draw = rng.split(i);
    for (int q = 0; q < k; ++q) dirs[q] = rotated_z_axis(haar_unitary_2(draw));
    out.values[i] = correlation(reduced, local, dirs);
  }
  return out;
}

ReferenceDensity analytic_pdf(ReferenceKind kind, double p) {
  ReferenceDensity d;
  d.kind_ = kind;
  if (kind == ReferenceKind::kWerner) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("parameter p for werner must lie in [0,1]");
    }
    if (p == 0.0) d.kind_ = ReferenceKind::kMixedWhite;
    d.p_ = p;
  } else if (kind == ReferenceKind::kMixedWhite) {
    d.p_ = 0.0;
  }
  return d;
}

double ReferenceDensity::pdf(double e) const {
  if (e < -1.0 || e > 1.0) return 0.0;
  switch (kind_) {
    case ReferenceKind::kProduct2:
      return e == 0.0 ? std::numeric_limits<double>::infinity() : -0.5 * std::log(std::abs(e));
    case ReferenceKind::kBell:
      return 0.5;
    case ReferenceKind::kWerner:
      return std::abs(e) <= p_ ? 1.0 / (2.0 * p_) : 0.0;
    case ReferenceKind::kMixedWhite:
      break;
  }
  throw std::logic_error("delta density has no pointwise pdf");
}

double ReferenceDensity::cdf(double e) const {
  if (e < -1.0) return 0.0;
  if (e >= 1.0) return 1.0;
  switch (kind_) {
    case ReferenceKind::kProduct2: {
      // Integral of -ln|x|/2 from -1 to -y: (1 - y + y ln y)/2.
      const double y = std::abs(e);
      const double lower = y == 0.0 ? 0.5 : 0.5 * (1.0 - y + y * std::log(y));
      return e <= 0.0 ? lower : 1.0 - lower;
    }
    case ReferenceKind::kBell:
      return 0.5 * (e + 1.0);
    case ReferenceKind::kWerner:
      return std::clamp((e + p_) / (2.0 * p_), 0.0, 1.0);
    case ReferenceKind::kMixedWhite:
      return e >= 0.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

std::string ReferenceDensity::name() const {
  switch (kind_) {
    case ReferenceKind::kProduct2: return "product2";
    case ReferenceKind::kBell: return "bell";
    case ReferenceKind::kWerner: return "werner";
    case ReferenceKind::kMixedWhite: return "mixed_white";
  }
  return "unknown";
}

std::optional<ReferenceDensity> reference_density_for(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::kProductZero:
      if (spec.qubits == 2) return analytic_pdf(ReferenceKind::kProduct2);
      return std::nullopt;
    case StateKind::kBellPsiMinus:
      return analytic_pdf(ReferenceKind::kBell);
    case StateKind::kWerner:
      return analytic_pdf(ReferenceKind::kWerner, spec.parameter);
    default:
      return std::nullopt;
  }
}

double Histogram::density(std::size_t i) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts.at(i)) / (static_cast<double>(total) * bin_width());
}

Histogram make_histogram(std::span<const double> values, int bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("invalid histogram binning");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    if (v < lo || v > hi) continue;
    auto bin = static_cast<std::size_t>((v - lo) / (hi - lo) * bins);
    if (bin >= h.counts.size()) bin = h.counts.size() - 1;
    ++h.counts[bin];
    ++h.total;
  }
  return h;
}

}  // namespace randmeas
