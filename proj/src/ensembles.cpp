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

#include "randmeas/ensembles.hpp"

#include <cmath>
#include <stdexcept>

#include "randmeas/sampling.hpp"

namespace randmeas {

StateVector random_pure_vector(int n, RngStream& rng) {
  StateVector psi(Eigen::Index{1} << n);
  for (auto& a : psi) a = Complex(rng.normal(), rng.normal());
  return psi / psi.norm();
}

DensityMatrix random_mixed_state(int n, RngStream& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

std::vector<Mat2> random_local_unitaries(int n, RngStream& rng) {
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) out.push_back(haar_unitary_2(rng));
  return out;
}

StateVector block_product(int n, Parties block_a, const StateVector& psi_a,
                          const StateVector& psi_b) {
  const Parties full = Parties::full(n);
  const Parties block_b = full.without(block_a);
  if (block_a.empty() || block_b.empty() || !block_a.is_subset_of(full)) {
    throw std::invalid_argument("block_product needs a non-trivial bipartition");
  }
  const auto a_labels = block_a.labels();
  const auto b_labels = block_b.labels();
  auto gather = [n](Eigen::Index x, const std::vector<int>& labels) {
    Eigen::Index out = 0;
    for (int label : labels) out = (out << 1) | ((x >> (n - label)) & 1);
    return out;
  };
  StateVector psi(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    psi(x) = psi_a(gather(x, a_labels)) * psi_b(gather(x, b_labels));
  }
  return psi;
}

DensityMatrix random_biseparable_state(int n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("biseparable states need n >= 2");
  const std::uint32_t full_mask = Parties::full(n).mask();
  std::uint32_t mask = 0;
  while (mask == 0 || mask == full_mask) {
    mask = static_cast<std::uint32_t>(rng.next_u64()) & full_mask;
  }
  const Parties a = Parties::from_mask(mask);
  const StateVector psi_a = random_pure_vector(a.size(), rng);
  const StateVector psi_b = random_pure_vector(n - a.size(), rng);
  const StateVector psi = block_product(n, a, psi_a, psi_b);
  const double noise = rng.uniform();
  const Eigen::Index dim = psi.size();
  Matrix rho = (1.0 - noise) * (psi * psi.adjoint()) +
               noise * Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_w_class_mixture(int n, RngStream& rng) {
  const DensityMatrix w = make_state(StateSpec::w(n));
  const int components = 1 + static_cast<int>(rng.next_u64() % 4);
  std::vector<double> weights(static_cast<std::size_t>(components));
  double total = 0.0;
  for (auto& wgt : weights) {
    wgt = -std::log(1.0 - rng.uniform());  // flat Dirichlet
    total += wgt;
  }
  const Eigen::Index dim = w.dim();
  Matrix rho = Matrix::Zero(dim, dim);
  for (double wgt : weights) {
    const auto us = random_local_unitaries(n, rng);
    rho += (wgt / total) * apply_local_unitaries(w, us).matrix();
  }
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

}  // namespace randmeas
