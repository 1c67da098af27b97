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

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "randmeas/correlations.hpp"
#include "randmeas/criteria.hpp"
#include "randmeas/moments.hpp"
#include "randmeas/sampling.hpp"

namespace randmeas {

// Seventeen significant digits; enough to round-trip any double.
std::string format_csv_number(double value);

nlohmann::json to_json(Parties parties);
nlohmann::json to_json(const MomentEstimate& estimate);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const StructureReport& report);
nlohmann::json to_json(const DesignReport& report);
nlohmann::json to_json(const CorrelationTensor& tensor);

// Rows "x,y,z".
void write_design_csv(std::ostream& out, const SphericalDesign& design);
SphericalDesign read_design_csv(std::istream& in, int degree);

// Rows "sample_index,E".
void write_samples_csv(std::ostream& out, const SampleSet& samples);

// Rows "bin_lo,bin_hi,count,density".
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

// Rows "E,pdf" on a uniform grid; the delta density is written as a single
// "0,inf" row.
void write_reference_csv(std::ostream& out, const ReferenceDensity& density, int points = 401);

// Rows "setting_index,shot_index,s1,...,sk".
void write_shots_csv(std::ostream& out, const ShotTable& shots);

}  // namespace randmeas
