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

// Brute-force reference computations. Deliberately naive: full Kronecker
// products, index-loop partial traces and product quadrature on the sphere.
// Nothing here calls into the library.
#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace randmeas::oracle {

using Cd = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

Eigen::Matrix2cd pauli(char axis);  // 'i', 'x', 'y', 'z'
Eigen::Matrix2cd spin(const std::array<double, 3>& u);

Dense kron_all(const std::vector<Eigen::Matrix2cd>& factors);
Dense projector(const Ket& psi);

// Kets in the big-endian convention: qubit 1 is the most significant bit.
Ket basis_ket(int n, unsigned index);
Ket ghz_ket(int n);
Ket w_ket(int n);
// CZ on nearest neighbours applied to |+>^n.
Ket linear_cluster_ket(int n);
Ket singlet_ket();

// Reduced state on the 1-based labels in `keep` (ascending).
Dense reduce(const Dense& rho, const std::vector<int>& keep);

double expectation(const Dense& rho, const std::vector<Eigen::Matrix2cd>& ops);

// Sum over the 3^k Pauli strings of the squared correlation.
double correlation_length(const Dense& rho);
// 3^-k times correlation_length, computed on the reduced state.
double second_moment(const Dense& rho, const std::vector<int>& keep);

// Exact Haar average of E^t over k spheres by product Gauss-Legendre x
// trapezoid quadrature; exact for t <= 5.
double moment_by_quadrature(const Dense& rho, const std::vector<int>& keep, int t);

double purity(const Dense& rho);

// M_S = m_S - 1/2 sum over proper nonempty A of m_A m_{S\A}, from brute moments.
double m_quantifier(const Dense& rho);

// Average of products over all t-subsets of distinct shots; the unbiased
// estimate of E^t for one setting.
double u_statistic_brute(const std::vector<int>& products, int t);

}  // namespace randmeas::oracle
