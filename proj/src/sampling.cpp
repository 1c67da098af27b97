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

#include "randmeas/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace randmeas {
namespace {

double double_factorial(int k) {
  double out = 1.0;
  for (int i = k; i > 1; i -= 2) out *= i;
  return out;
}

}  // namespace

double Direction::norm() const { return std::sqrt(x * x + y * y + z * z); }

Direction Direction::from_components(double x, double y, double z) {
  Direction d{x, y, z};
  if (!(std::abs(d.norm() - 1.0) <= kDirectionTolerance)) {
    throw std::invalid_argument("direction is not a unit vector (norm " +
                                std::to_string(d.norm()) + ")");
  }
  return d;
}

Direction Direction::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize zero vector");
  return {x / n, y / n, z / n};
}

Mat2 haar_unitary_2(RngStream& rng) {
  Mat2 ginibre;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      ginibre(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<Mat2> qr(ginibre);
  Mat2 q = qr.householderQ();
  const Mat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const double mag = std::abs(r(i, i));
    const Complex phase = mag > 0.0 ? r(i, i) / mag : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

Direction rotated_z_axis(const Mat2& u) {
  // U sigma_z U^dagger = 2|u0><u0| - 1 with |u0> the first column of U.
  const Complex a = u(0, 0);
  const Complex b = u(1, 0);
  const Complex ab = std::conj(a) * b;
  return Direction::normalized(2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b));
}

Direction uniform_direction(RngStream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction::normalized(r * std::cos(phi), r * std::sin(phi), z);
}

SphericalDesign design_points(int t) {
  SphericalDesign design;
  design.degree = t;
  if (t == 3) {
    design.points = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    return design;
  }
  if (t == 5) {
    // (0, +-1, +-g)/sqrt(1+g^2) and its cyclic permutations.
    const double g = std::numbers::phi;
    const double s = 1.0 / std::sqrt(1.0 + g * g);
    const std::array<std::array<double, 2>, 4> signs = {{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
    for (int shift = 0; shift < 3; ++shift) {
      for (const auto& sg : signs) {
        std::array<double, 3> v = {0.0, sg[0] * s, sg[1] * g * s};
        std::array<double, 3> p{};
        for (int i = 0; i < 3; ++i) p[(i + shift) % 3] = v[i];
        design.points.push_back(Direction::normalized(p[0], p[1], p[2]));
      }
    }
    return design;
  }
  throw std::invalid_argument("unsupported design order " + std::to_string(t) +
                              "; supported orders: 3, 5");
}

double sphere_monomial_average(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative monomial exponent");
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1) /
         double_factorial(a + b + c + 1);
}

DesignReport validate_design(const SphericalDesign& design, int t) {
  DesignReport report;
  report.tested_degree = t;
  report.pass = !design.points.empty();
  const double count = static_cast<double>(design.points.size());
  for (int total = 0; total <= t; ++total) {
    for (int a = total; a >= 0; --a) {
      for (int b = total - a; b >= 0; --b) {
        const int c = total - a - b;
        MonomialCheck check;
        check.exponents = {a, b, c};
        double sum = 0.0;
        for (const auto& p : design.points) {
          sum += std::pow(p.x, a) * std::pow(p.y, b) * std::pow(p.z, c);
        }
        check.design_average = design.points.empty() ? 0.0 : sum / count;
        check.sphere_average = sphere_monomial_average(a, b, c);
        check.deviation = std::abs(check.design_average - check.sphere_average);
        check.pass = check.deviation < kDesignTolerance;
        report.max_deviation = std::max(report.max_deviation, check.deviation);
        report.pass = report.pass && check.pass;
        report.checks.push_back(check);
      }
    }
  }
  return report;
}

SphericalDesign half_design(const SphericalDesign& design) {
  const auto& pts = design.points;
  std::vector<bool> used(pts.size(), false);
  SphericalDesign half;
  half.degree = design.degree;
  half.antipodal_half = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    std::size_t partner = pts.size();
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (used[j]) continue;
      const double gap = std::abs(pts[i].x + pts[j].x) + std::abs(pts[i].y + pts[j].y) +
                         std::abs(pts[i].z + pts[j].z);
      if (gap < kDirectionTolerance) {
        partner = j;
        break;
      }
    }
    if (partner == pts.size()) {
      throw std::invalid_argument("point set is not antipodally symmetric (point " +
                                  std::to_string(i) + " has no antipode)");
    }
    used[i] = used[partner] = true;
    half.points.push_back(pts[i]);
  }
  return half;
}

}  // namespace randmeas
