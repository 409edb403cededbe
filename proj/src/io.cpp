// Copyright 2026 The qgeo Authors
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

#include "qgeo/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "qgeo/errors.hpp"

namespace qgeo {
namespace {

constexpr const char* kTraceFormat = "qgeo-trace";

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw UsageError(std::string("JSON field '") + key + "' is not a number");
  return v.get<double>();
}

std::vector<double> numbers(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw UsageError(std::string("JSON field '") + key + "' is not an array");
  return v.get<std::vector<double>>();
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json state_to_json(const QuantumState& psi) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    re.push_back(psi[i].real());
    im.push_back(psi[i].imag());
  }
  return Json{{"re", re}, {"im", im}};
}

QuantumState state_from_json(const Json& j, double tol) {
  const std::vector<double> re = numbers(j, "re");
  const std::vector<double> im = numbers(j, "im");
  if (re.size() != im.size()) throw UsageError("state 're' and 'im' differ in length");
  CVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
  return QuantumState::exact(v, tol);
}

Json matrix_to_json(const CMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row_re = Json::array();
    Json row_im = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return Json{{"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const Json& j) {
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty()) {
    throw UsageError("matrix needs equal-size non-empty 're' and 'im' arrays");
  }
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = static_cast<Eigen::Index>(re.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto row_re = re.at(r).get<std::vector<double>>();
    const auto row_im = im.at(r).get<std::vector<double>>();
    if (static_cast<Eigen::Index>(row_re.size()) != cols || row_im.size() != row_re.size()) {
      throw UsageError("matrix rows have inconsistent lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = {row_re[c], row_im[c]};
  }
  return m;
}

Json hamiltonian_to_json(const Hamiltonian& h) {
  const auto& kind = h.kind();
  if (const auto* k = std::get_if<ConstantMatrix>(&kind)) {
    Json j = matrix_to_json(k->h);
    Json out{{"kind", "constant"}};
    out["re"] = j["re"];
    out["im"] = j["im"];
    out["hbar"] = h.hbar();
    return out;
  }
  if (const auto* k = std::get_if<TwoLevelStatic>(&kind)) {
    return Json{{"kind", "two_level_static"}, {"epsilon", k->epsilon}, {"hbar", h.hbar()}};
  }
  if (const auto* k = std::get_if<TwoLevelDriven>(&kind)) {
    return Json{{"kind", "two_level_driven"},
                {"epsilon", k->epsilon},
                {"omega", k->omega},
                {"omega0", k->omega0},
                {"hbar", h.hbar()}};
  }
  return Json{{"kind", "time_dependent"}, {"dim", h.dim()}, {"hbar", h.hbar()}};
}

Hamiltonian hamiltonian_from_json(const Json& j) {
  const double hbar = j.is_object() && j.contains("hbar") ? number(j, "hbar") : 1.0;
  const std::string kind =
      j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "constant";
  if (kind == "constant") return Hamiltonian::constant(matrix_from_json(j), hbar);
  if (kind == "two_level_static") {
    return Hamiltonian::two_level_static(number(j, "epsilon"), hbar);
  }
  if (kind == "two_level_driven") {
    return Hamiltonian::two_level_driven(number(j, "epsilon"), number(j, "omega"),
                                         number(j, "omega0"), hbar);
  }
  throw UsageError("cannot reconstruct Hamiltonian of kind '" + kind + "'");
}

Json trace_to_json(const EvolutionTrace& trace, const Json& hamiltonian) {
  Json states = Json::array();
  for (const QuantumState& s : trace.states) states.push_back(state_to_json(s));
  return Json{{"format", kTraceFormat},
              {"version", 1},
              {"hbar", trace.hbar},
              {"hamiltonian", hamiltonian},
              {"times", trace.times},
              {"states", states},
              {"energy_mean", trace.energy_mean},
              {"energy_dispersion", trace.energy_dispersion}};
}

EvolutionTrace trace_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kTraceFormat) {
    throw UsageError("not a qgeo trace document");
  }
  EvolutionTrace trace;
  trace.hbar = number(j, "hbar");
  trace.times = numbers(j, "times");
  trace.energy_mean = numbers(j, "energy_mean");
  trace.energy_dispersion = numbers(j, "energy_dispersion");
  const Json& states = field(j, "states");
  if (!states.is_array()) throw UsageError("trace 'states' is not an array");
  trace.states.reserve(states.size());
  for (const Json& s : states) trace.states.push_back(state_from_json(s, 1e-10));
  validate_trace(trace);
  return trace;
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
  const Eigen::Index dim = trace.states.empty() ? 0 : trace.states.front().dim();
  out << "t";
  for (Eigen::Index i = 0; i < dim; ++i) out << ",re_" << i << ",im_" << i;
  out << ",energy_mean,energy_dispersion\n";
  for (std::size_t n = 0; n < trace.size(); ++n) {
    out << format_double(trace.times[n]);
    for (Eigen::Index i = 0; i < dim; ++i) {
      out << ',' << format_double(trace.states[n][i].real()) << ','
          << format_double(trace.states[n][i].imag());
    }
    out << ',' << format_double(trace.energy_mean[n]) << ','
        << format_double(trace.energy_dispersion[n]) << '\n';
  }
}

Json report_to_json(const SpeedLimitReport& r) {
  return Json{{"s0", r.s0},
              {"s", r.s},
              {"delta_s", r.s - r.s0},
              {"eta", r.eta},
              {"t_effective", r.t_effective},
              {"t_ideal", r.t_ideal},
              {"avg_dispersion", r.avg_dispersion},
              {"overlap", r.overlap},
              {"bound_satisfied", r.bound_satisfied},
              {"time_bound_satisfied", r.time_bound_satisfied},
              {"orthogonal_endpoints", r.orthogonal_endpoints},
              {"geodesic", r.geodesic},
              {"quadrature_error", r.quadrature_error},
              {"trapezoid_tail", r.trapezoid_tail}};
}

Json implicit_to_json(const ImplicitTime& t) {
  return Json{{"t_ideal", t.time},
              {"t_effective", t.t_effective},
              {"a", t.coefficient},
              {"residual", t.residual},
              {"relative_residual", t.relative_residual},
              {"iterations", t.iterations}};
}

Json sweep_to_json(const SweepSummary& s) {
  return Json{{"samples", s.config.samples},
              {"dim_min", s.config.dim_min},
              {"dim_max", s.config.dim_max},
              {"seed", s.config.seed},
              {"steps", s.config.steps},
              {"tolerance", s.config.tolerance},
              {"evaluated", s.evaluated},
              {"degenerate", s.degenerate},
              {"min_eta", s.min_eta},
              {"max_eta", s.max_eta},
              {"min_time_energy_gap", s.min_time_energy_gap},
              {"max_rate_excess", s.max_rate_excess},
              {"eta_violations", s.eta_violations},
              {"time_bound_violations", s.time_bound_violations},
              {"rate_bound_violations", s.rate_bound_violations},
              {"violations", s.violations()}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

}  // namespace qgeo
