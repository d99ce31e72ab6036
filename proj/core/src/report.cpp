// Copyright 2026 The ZNE Bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <string>

#include "json.hpp"
#include "zne/config.hpp"

namespace zne {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string result_csv(const ExperimentResult& result) {
  std::string out = "x,estimate,sigma,shots\n";
  for (const NodeRow& r : result.rows) {
    out += format_double(r.x) + ',' + format_double(r.measurement.estimate) + ',' +
           format_double(r.measurement.sigma) + ',' + std::to_string(r.measurement.shots) + '\n';
  }
  return out;
}

std::string sweep_csv(const ExperimentResult& result) {
  std::string out = "m,estimate,abs_error,standard_error,rms_error\n";
  for (const SweepRow& r : result.sweep) {
    out += std::to_string(r.degree) + ',' + format_double(r.estimate) + ',' +
           format_double(r.abs_error) + ',' + format_double(r.standard_error) + ',' +
           format_double(r.rms_error) + '\n';
  }
  return out;
}

std::string bounds_report_csv(const BoundsReport& report) {
  std::string out = "check,family,params,measured,bound,margin,pass\n";
  for (const BoundCheckRow& r : report.rows) {
    out += r.check + ',' + r.family + ",\"" + r.params + "\"," + format_double(r.measured) + ',' +
           format_double(r.bound) + ',' + format_double(r.margin()) + ',' +
           (r.pass ? "true" : "false") + '\n';
  }
  return out;
}

std::string result_summary_json(const ExperimentResult& result) {
  using nlohmann::json;
  const ExtrapolationResult& ex = result.extrapolation;
  json doc;
  doc["estimate"] = ex.estimate;
  doc["variance"] = ex.variance;
  doc["standard_error"] = ex.standard_error();
  doc["bias_bound"] = ex.bias_bound ? json(*ex.bias_bound) : json(nullptr);
  doc["exact_reference"] = result.exact_reference;
  doc["abs_error"] = std::abs(ex.estimate - result.exact_reference);
  doc["gamma_l1"] = ex.gamma.l1_norm();
  doc["gamma"] = std::vector<double>(ex.gamma.weights().begin(), ex.gamma.weights().end());
  doc["gamma_method"] = std::string(to_string(ex.gamma.method()));
  doc["degree"] = ex.gamma.degree();
  doc["hoeffding_failure"] =
      result.hoeffding_failure ? json(*result.hoeffding_failure) : json(nullptr);
  doc["physicality"] = {{"hermiticity_error", result.worst_physicality.hermiticity_error},
                        {"trace_error", result.worst_physicality.trace_error},
                        {"min_eigenvalue", result.worst_physicality.min_eigenvalue},
                        {"ok", result.worst_physicality.ok()}};
  if (!result.sweep.empty()) {
    json rows = json::array();
    for (const SweepRow& r : result.sweep) {
      rows.push_back({{"m", r.degree},
                      {"estimate", r.estimate},
                      {"abs_error", r.abs_error},
                      {"standard_error", r.standard_error},
                      {"rms_error", r.rms_error}});
    }
    doc["sweep"] = rows;
  }
  if (result.pilot_variance) doc["pilot_variance"] = *result.pilot_variance;
  if (result.uniform_variance) doc["uniform_variance"] = *result.uniform_variance;
  doc["config"] = json::parse(config_to_json(result.config));
  return doc.dump(2);
}

}  // namespace zne
