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

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "randmeas/parties.hpp"

namespace randmeas {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

// Absolute tolerance used for Hermiticity, trace, positivity and unitarity.
inline constexpr double kStateTolerance = 1e-10;
// Default configuration limit on the number of qubits of a dense state.
inline constexpr int kDefaultQubitLimit = 8;

// Dense n-qubit density matrix. Qubit 1 is the most significant tensor
// factor. Instances always satisfy the Hermitian / unit-trace / PSD
// invariants; the constructor validates and throws std::invalid_argument.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix matrix, int max_qubits = kDefaultQubitLimit);

  static DensityMatrix from_pure(const StateVector& psi, int max_qubits = kDefaultQubitLimit);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }

 private:
  struct Trusted {};
  DensityMatrix(Trusted, int n_qubits, Matrix matrix);

  int n_qubits_ = 0;
  Matrix matrix_;

  friend DensityMatrix tensor(const DensityMatrix&, const DensityMatrix&);
  friend DensityMatrix partial_trace(const DensityMatrix&, Parties);
  friend DensityMatrix apply_local_unitaries(const DensityMatrix&, std::span<const Mat2>);
};

enum class StateKind {
  kProductZero,
  kBellPsiMinus,
  kGhz,
  kW,
  kClusterLinear,
  kWerner,
  kTrisep4,
  kBisep4,
  kCustom,
};

// Named state together with its parameters.
struct StateSpec {
  StateKind kind = StateKind::kProductZero;
  int qubits = 2;
  // Mixing parameter p for Werner, angle phi (radians) for bisep4.
  double parameter = 0.0;
  std::optional<Matrix> custom;

  static StateSpec product_zero(int n) { return {StateKind::kProductZero, n, 0.0, {}}; }
  static StateSpec bell_psi_minus() { return {StateKind::kBellPsiMinus, 2, 0.0, {}}; }
  static StateSpec ghz(int n) { return {StateKind::kGhz, n, 0.0, {}}; }
  static StateSpec w(int n) { return {StateKind::kW, n, 0.0, {}}; }
  static StateSpec cluster_linear(int n) { return {StateKind::kClusterLinear, n, 0.0, {}}; }
  static StateSpec werner(double p) { return {StateKind::kWerner, 2, p, {}}; }
  static StateSpec trisep4() { return {StateKind::kTrisep4, 4, 0.0, {}}; }
  static StateSpec bisep4(double phi = 0.2) { return {StateKind::kBisep4, 4, phi, {}}; }
  static StateSpec from_matrix(Matrix m);
};

// Parses the `kind[:param[,param]]` grammar, e.g. "ghz:4", "werner:0.577",
// "bisep4:0.2", "product2". Throws std::invalid_argument naming valid kinds.
StateSpec parse_state_spec(std::string_view text);
// Canonical string form; parse_state_spec(to_string(s)) reproduces s.
std::string to_string(const StateSpec& spec);
// Help text listing the accepted kinds.
std::string state_grammar_help();

DensityMatrix make_state(const StateSpec& spec, int max_qubits = kDefaultQubitLimit);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state on `keep`; kept qubits retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, Parties keep);

double purity_direct(const DensityMatrix& rho);

// (U_1 ⊗ ... ⊗ U_n) rho (U_1 ⊗ ... ⊗ U_n)^dagger. Rejects lists of the wrong
// length and matrices further than kStateTolerance from unitary.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const Mat2> unitaries);

// tr(rho · (A_1 ⊗ ... ⊗ A_n)) for arbitrary single-qubit operators.
Complex local_product_expectation(const DensityMatrix& rho, std::span<const Mat2> operators);

// Max-abs deviation of U^dagger U from the identity.
double unitarity_deviation(const Mat2& u);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

}  // namespace randmeas
