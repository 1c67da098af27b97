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

#include "randmeas/qstate.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace randmeas {
namespace {

int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n == 0) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not 2^n with n >= 1");
  }
  return n;
}

void check_qubit_limit(int n, int max_qubits) {
  if (max_qubits > kMaxParties) {
    throw std::invalid_argument("qubit limit may not exceed " + std::to_string(kMaxParties));
  }
  if (n > max_qubits) {
    throw std::invalid_argument("state has " + std::to_string(n) +
                                " qubits, above the configured limit of " +
                                std::to_string(max_qubits));
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token, std::string_view what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

void require_qubits(const StateSpec& spec, int min_n, std::string_view kind) {
  if (spec.qubits < min_n) {
    throw std::invalid_argument("parameter n for " + std::string(kind) + " must be >= " +
                                std::to_string(min_n) + ", got " + std::to_string(spec.qubits));
  }
}

StateVector basis_state(int n, Eigen::Index index) {
  StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
  psi(index) = 1.0;
  return psi;
}

// (|00> + |11>)/sqrt(2)
StateVector phi_plus() {
  StateVector psi = StateVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix matrix, int max_qubits) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  n_qubits_ = qubits_for_dimension(matrix_.rows());
  check_qubit_limit(n_qubits_, max_qubits);
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStateTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                format_double(herm) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTolerance) {
    throw std::invalid_argument("density matrix trace is " + format_double(tr.real()) +
                                ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kStateTolerance) {
    throw std::invalid_argument("density matrix is not positive semidefinite (eigenvalue " +
                                format_double(min_eig) + ")");
  }
}

DensityMatrix::DensityMatrix(Trusted, int n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi, int max_qubits) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("state vector has zero norm");
  const StateVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint(), max_qubits);
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_limit(n_qubits, kMaxParties);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(Trusted{}, n_qubits,
                       Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

StateSpec StateSpec::from_matrix(Matrix m) {
  StateSpec spec;
  spec.kind = StateKind::kCustom;
  spec.qubits = qubits_for_dimension(m.rows());
  spec.custom = std::move(m);
  return spec;
}

DensityMatrix make_state(const StateSpec& spec, int max_qubits) {
  switch (spec.kind) {
    case StateKind::kProductZero: {
      require_qubits(spec, 1, "product");
      check_qubit_limit(spec.qubits, max_qubits);
      return DensityMatrix::from_pure(basis_state(spec.qubits, 0), max_qubits);
    }
    case StateKind::kBellPsiMinus: {
      StateVector psi = StateVector::Zero(4);
      psi(1) = 1.0 / std::sqrt(2.0);
      psi(2) = -1.0 / std::sqrt(2.0);
      return DensityMatrix::from_pure(psi, max_qubits);
    }
    case StateKind::kGhz: {
      require_qubits(spec, 2, "ghz");
      check_qubit_limit(spec.qubits, max_qubits);
      StateVector psi = StateVector::Zero(Eigen::Index{1} << spec.qubits);
      psi(0) = psi(psi.size() - 1) = 1.0;
      return DensityMatrix::from_pure(psi, max_qubits);
    }
    case StateKind::kW: {
      require_qubits(spec, 2, "w");
      check_qubit_limit(spec.qubits, max_qubits);
      StateVector psi = StateVector::Zero(Eigen::Index{1} << spec.qubits);
      for (int q = 0; q < spec.qubits; ++q) psi(Eigen::Index{1} << q) = 1.0;
      return DensityMatrix::from_pure(psi, max_qubits);
    }
    case StateKind::kClusterLinear: {
      // CZ on every neighbouring pair applied to |+>^n.
      require_qubits(spec, 2, "cluster");
      check_qubit_limit(spec.qubits, max_qubits);
      const Eigen::Index dim = Eigen::Index{1} << spec.qubits;
      StateVector psi(dim);
      for (Eigen::Index x = 0; x < dim; ++x) {
        const auto neighbours = static_cast<std::uint64_t>(x & (x >> 1));
        psi(x) = (std::popcount(neighbours) % 2 == 0) ? 1.0 : -1.0;
      }
      return DensityMatrix::from_pure(psi, max_qubits);
    }
    case StateKind::kWerner: {
      const double p = spec.parameter;
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("parameter p for werner must lie in [0,1], got " +
                                    format_double(p));
      }
      const Matrix singlet = make_state(StateSpec::bell_psi_minus()).matrix();
      return DensityMatrix(p * singlet + (1.0 - p) * Matrix::Identity(4, 4) / 4.0, max_qubits);
    }
    case StateKind::kTrisep4:
      return DensityMatrix::from_pure(kron(phi_plus(), basis_state(2, 0)), max_qubits);
    case StateKind::kBisep4: {
      const double phi = spec.parameter;
      if (!std::isfinite(phi)) {
        throw std::invalid_argument("parameter phi for bisep4 must be finite");
      }
      StateVector tail = StateVector::Zero(4);
      tail(0) = std::sin(phi);
      tail(3) = std::cos(phi);
      return DensityMatrix::from_pure(kron(phi_plus(), tail), max_qubits);
    }
    case StateKind::kCustom:
      if (!spec.custom) throw std::invalid_argument("custom state spec carries no matrix");
      return DensityMatrix(*spec.custom, max_qubits);
  }
  throw std::logic_error("unhandled state kind");
}

std::string state_grammar_help() {
  return "state kinds: product:N (alias productN), bell, ghz:N, w:N, cluster:N "
         "(alias cluster_linear:N), werner:P with P in [0,1], trisep4, bisep4[:PHI] "
         "(PHI in radians, default 0.2)";
}

StateSpec parse_state_spec(std::string_view text) {
  std::string_view kind = text;
  std::vector<std::string_view> params;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    kind = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      params.push_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw std::invalid_argument("state kind '" + std::string(kind) + "' takes " +
                                  (lo == hi ? std::to_string(lo)
                                            : std::to_string(lo) + "-" + std::to_string(hi)) +
                                  " parameter(s)");
    }
  };

  if (kind.starts_with("product") && kind.size() > 7 && params.empty()) {
    return StateSpec::product_zero(parse_int(kind.substr(7), "qubit count"));
  }
  if (kind == "product") {
    expect_params(0, 1);
    return StateSpec::product_zero(params.empty() ? 2 : parse_int(params[0], "qubit count"));
  }
  if (kind == "bell") {
    expect_params(0, 0);
    return StateSpec::bell_psi_minus();
  }
  if (kind == "ghz" || kind == "w" || kind == "cluster" || kind == "cluster_linear") {
    expect_params(1, 1);
    const int n = parse_int(params[0], "qubit count");
    if (kind == "ghz") return StateSpec::ghz(n);
    if (kind == "w") return StateSpec::w(n);
    return StateSpec::cluster_linear(n);
  }
  if (kind == "werner") {
    expect_params(1, 1);
    const double p = parse_double(params[0], "werner parameter p");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("parameter p for werner must lie in [0,1], got " +
                                  std::string(params[0]));
    }
    return StateSpec::werner(p);
  }
  if (kind == "trisep4") {
    expect_params(0, 0);
    return StateSpec::trisep4();
  }
  if (kind == "bisep4") {
    expect_params(0, 1);
    return StateSpec::bisep4(params.empty() ? 0.2 : parse_double(params[0], "bisep4 angle phi"));
  }
  throw std::invalid_argument("unknown state kind '" + std::string(kind) + "'; " +
                              state_grammar_help());
}

std::string to_string(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::kProductZero: return "product:" + std::to_string(spec.qubits);
    case StateKind::kBellPsiMinus: return "bell";
    case StateKind::kGhz: return "ghz:" + std::to_string(spec.qubits);
    case StateKind::kW: return "w:" + std::to_string(spec.qubits);
    case StateKind::kClusterLinear: return "cluster:" + std::to_string(spec.qubits);
    case StateKind::kWerner: return "werner:" + format_double(spec.parameter);
    case StateKind::kTrisep4: return "trisep4";
    case StateKind::kBisep4: return "bisep4:" + format_double(spec.parameter);
    case StateKind::kCustom: return "custom";
  }
  return "unknown";
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_limit(n, kMaxParties);
  const Eigen::Index db = b.dim();
  Matrix out(a.dim() * db, a.dim() * db);
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return DensityMatrix(DensityMatrix::Trusted{}, n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Parties keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  if (keep.max_label() > n) {
    throw std::invalid_argument("partial_trace: party " + std::to_string(keep.max_label()) +
                                " does not exist in a " + std::to_string(n) + "-qubit state");
  }
  if (keep == Parties::full(n)) return rho;

  // Bit masks in the full index space (qubit q sits at bit n - q).
  const auto kept = keep.labels();
  const int k = static_cast<int>(kept.size());
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
  for (int q = 1; q <= n; ++q) {
    (keep.contains(q) ? kept_bits : traced_bits).push_back(n - q);
  }
  auto scatter = [](Eigen::Index value, const std::vector<int>& bits) {
    // bits are listed from most to least significant
    Eigen::Index out = 0;
    const int m = static_cast<int>(bits.size());
    for (int i = 0; i < m; ++i) {
      if ((value >> (m - 1 - i)) & 1) out |= Eigen::Index{1} << bits[i];
    }
    return out;
  };

  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index dt = Eigen::Index{1} << (n - k);
  std::vector<Eigen::Index> kept_index(dk);
  std::vector<Eigen::Index> traced_index(dt);
  for (Eigen::Index a = 0; a < dk; ++a) kept_index[a] = scatter(a, kept_bits);
  for (Eigen::Index t = 0; t < dt; ++t) traced_index[t] = scatter(t, traced_bits);

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += rho(kept_index[a] | traced_index[t], kept_index[b] | traced_index[t]);
      }
      out(a, b) = sum;
    }
  }
  return DensityMatrix(DensityMatrix::Trusted{}, k, std::move(out));
}

double purity_direct(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().cwiseAbs2().sum();
}

double unitarity_deviation(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const Mat2> unitaries) {
  const int n = rho.n_qubits();
  if (static_cast<int>(unitaries.size()) != n) {
    throw std::invalid_argument("apply_local_unitaries: expected " + std::to_string(n) +
                                " unitaries, got " + std::to_string(unitaries.size()));
  }
  for (std::size_t q = 0; q < unitaries.size(); ++q) {
    const double dev = unitarity_deviation(unitaries[q]);
    if (dev > kStateTolerance) {
      throw std::invalid_argument("apply_local_unitaries: matrix for qubit " +
                                  std::to_string(q + 1) + " is not unitary (deviation " +
                                  format_double(dev) + ")");
    }
  }
  Matrix full = unitaries[0];
  for (int q = 1; q < n; ++q) {
    Matrix next(full.rows() * 2, full.cols() * 2);
    for (Eigen::Index i = 0; i < full.rows(); ++i) {
      for (Eigen::Index j = 0; j < full.cols(); ++j) {
        next.block<2, 2>(2 * i, 2 * j) = full(i, j) * unitaries[q];
      }
    }
    full = std::move(next);
  }
  Matrix out = full * rho.matrix() * full.adjoint();
  // Restore exact Hermiticity lost to rounding.
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(DensityMatrix::Trusted{}, n, std::move(out));
}

Complex local_product_expectation(const DensityMatrix& rho, std::span<const Mat2> operators) {
  const int n = rho.n_qubits();
  if (static_cast<int>(operators.size()) != n) {
    throw std::invalid_argument("local_product_expectation: expected " + std::to_string(n) +
                                " operators, got " + std::to_string(operators.size()));
  }
  // Contract the last qubit into the remaining block:
  //   next(a, b) = sum_{x,y} cur((a,x),(b,y)) * op(y, x)
  Matrix cur = rho.matrix();
  for (int q = n - 1; q >= 0; --q) {
    const Mat2& op = operators[q];
    const Eigen::Index half = cur.rows() / 2;
    Matrix next(half, half);
    for (Eigen::Index a = 0; a < half; ++a) {
      for (Eigen::Index b = 0; b < half; ++b) {
        next(a, b) = cur(2 * a, 2 * b) * op(0, 0) + cur(2 * a, 2 * b + 1) * op(1, 0) +
                     cur(2 * a + 1, 2 * b) * op(0, 1) + cur(2 * a + 1, 2 * b + 1) * op(1, 1);
      }
    }
    cur = std::move(next);
  }
  return cur(0, 0);
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace randmeas
