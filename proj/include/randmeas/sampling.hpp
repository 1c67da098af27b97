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

#include <array>
#include <string>
#include <vector>

#include "randmeas/qstate.hpp"
#include "randmeas/rng.hpp"

namespace randmeas {

inline constexpr double kDirectionTolerance = 1e-12;
inline constexpr double kDesignTolerance = 1e-12;

// Unit vector on the Bloch sphere.
struct Direction {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  // Throws std::invalid_argument unless |(x,y,z)| = 1 within kDirectionTolerance.
  static Direction from_components(double x, double y, double z);
  static Direction normalized(double x, double y, double z);

  static Direction ex() { return {1.0, 0.0, 0.0}; }
  static Direction ey() { return {0.0, 1.0, 0.0}; }
  static Direction ez() { return {0.0, 0.0, 1.0}; }

  Direction operator-() const { return {-x, -y, -z}; }
  double dot(const Direction& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  double component(int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
};

// Haar-random element of U(2): QR of a complex Ginibre matrix with the
// diagonal phases of R moved into Q.
Mat2 haar_unitary_2(RngStream& rng);

// Bloch vector of U sigma_z U^dagger, i.e. the measurement axis that a local
// rotation U maps the z axis onto.
Direction rotated_z_axis(const Mat2& u);

// z uniform on [-1, 1], azimuth uniform on [0, 2 pi).
Direction uniform_direction(RngStream& rng);

struct SphericalDesign {
  int degree = 0;
  std::vector<Direction> points;
  // True for a one-per-antipodal-pair reduction; such a set only reproduces
  // sphere averages of even polynomials.
  bool antipodal_half = false;
};

// t = 3: octahedron (6 points). t = 5: icosahedron (12 points).
SphericalDesign design_points(int t);

// Closed-form average of x^a y^b z^c over the uniform measure on S^2.
double sphere_monomial_average(int a, int b, int c);

struct MonomialCheck {
  std::array<int, 3> exponents{};
  double design_average = 0.0;
  double sphere_average = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct DesignReport {
  int tested_degree = 0;
  std::vector<MonomialCheck> checks;
  double max_deviation = 0.0;
  bool pass = false;
};

// Compares design averages with sphere integrals for every monomial of total
// degree <= t. Failure is reported, not thrown.
DesignReport validate_design(const SphericalDesign& design, int t);

// One representative per antipodal pair (first occurrence wins).
SphericalDesign half_design(const SphericalDesign& design);

}  // namespace randmeas
