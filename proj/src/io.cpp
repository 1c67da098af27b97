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

#include "randmeas/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace randmeas {
namespace {

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_csv_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

nlohmann::json to_json(Parties parties) { return parties.labels(); }

nlohmann::json to_json(const MomentEstimate& e) {
  nlohmann::json j;
  j["subset"] = to_json(e.subset);
  j["t"] = e.order;
  j["value"] = e.value;
  j["std_error"] = e.std_error ? nlohmann::json(*e.std_error) : nlohmann::json(nullptr);
  j["method"] = to_string(e.method);
  j["seed"] = e.seed ? nlohmann::json(*e.seed) : nlohmann::json(nullptr);
  j["M"] = e.settings ? nlohmann::json(*e.settings) : nlohmann::json(nullptr);
  j["K"] = e.shots ? nlohmann::json(*e.shots) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["criterion"] = v.criterion;
  j["subset"] = to_json(v.subset);
  j["statistic"] = finite_or_null(v.statistic);
  j["threshold"] = finite_or_null(v.threshold);
  j["margin"] = finite_or_null(v.margin);
  j["error"] = v.error ? finite_or_null(*v.error) : nlohmann::json(nullptr);
  j["detected"] = v.detected;
  j["provenance"] = v.provenance;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const StructureReport& report) {
  nlohmann::json j;
  j["full"] = to_json(report.full);
  j["marginals"] = nlohmann::json::array();
  for (const auto& v : report.marginals) j["marginals"].push_back(to_json(v));
  j["flagged"] = nlohmann::json::array();
  for (Parties p : report.flagged_marginals()) j["flagged"].push_back(to_json(p));
  return j;
}

nlohmann::json to_json(const DesignReport& report) {
  nlohmann::json j;
  j["tested_degree"] = report.tested_degree;
  j["pass"] = report.pass;
  j["max_deviation"] = report.max_deviation;
  j["monomials"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["monomials"].push_back({{"exponents", c.exponents},
                              {"design_average", c.design_average},
                              {"sphere_average", c.sphere_average},
                              {"deviation", c.deviation},
                              {"pass", c.pass}});
  }
  return j;
}

nlohmann::json to_json(const CorrelationTensor& tensor) {
  nlohmann::json j;
  j["subset"] = to_json(tensor.subset);
  nlohmann::json comps = nlohmann::json::object();
  for (std::size_t i = 0; i < tensor.components.size(); ++i) {
    comps[tensor.label(i)] = tensor.components[i];
  }
  j["components"] = comps;
  j["length"] = tensor.squared_sum();
  return j;
}

void write_design_csv(std::ostream& out, const SphericalDesign& design) {
  out << "x,y,z\n";
  for (const auto& p : design.points) {
    out << format_csv_number(p.x) << ',' << format_csv_number(p.y) << ','
        << format_csv_number(p.z) << '\n';
  }
}

SphericalDesign read_design_csv(std::istream& in, int degree) {
  SphericalDesign design;
  design.degree = degree;
  std::string line;
  if (!std::getline(in, line) || line != "x,y,z") {
    throw std::invalid_argument("design CSV must start with header 'x,y,z'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[3];
    char sep = 0;
    row >> v[0] >> sep >> v[1] >> sep >> v[2];
    if (!row) throw std::invalid_argument("malformed design CSV row: " + line);
    design.points.push_back(Direction::from_components(v[0], v[1], v[2]));
  }
  return design;
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  out << "sample_index,E\n";
  for (std::size_t i = 0; i < samples.values.size(); ++i) {
    out << i << ',' << format_csv_number(samples.values[i]) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,count,density\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << format_csv_number(h.bin_lo(i)) << ',' << format_csv_number(h.bin_lo(i + 1)) << ','
        << h.counts[i] << ',' << format_csv_number(h.density(i)) << '\n';
  }
}

void write_reference_csv(std::ostream& out, const ReferenceDensity& density, int points) {
  out << "E,pdf\n";
  if (density.is_delta()) {
    out << "0,inf\n";
    return;
  }
  for (int i = 0; i < points; ++i) {
    const double e = -1.0 + 2.0 * i / (points - 1);
    const double p = density.pdf(e);
    out << format_csv_number(e) << ',' << (std::isfinite(p) ? format_csv_number(p) : "inf")
        << '\n';
  }
}

void write_shots_csv(std::ostream& out, const ShotTable& shots) {
  out << "setting_index,shot_index";
  for (int j = 1; j <= shots.party_count(); ++j) out << ",s" << j;
  out << '\n';
  for (std::size_t s = 0; s < shots.setting_count(); ++s) {
    for (std::size_t r = 0; r < shots.shots_per_setting; ++r) {
      out << s << ',' << r;
      for (int j = 0; j < shots.party_count(); ++j) out << ',' << int{shots.outcome(s, r, j)};
      out << '\n';
    }
  }
}

}  // namespace randmeas
