// Copyright 2026 The gpt-tomo Authors
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

#include "gpt_tomo/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gpt_tomo {

double round_significant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

Json rounded(const Json& j, int digits) {
  if (j.is_number_float()) return round_significant(j.get<double>(), digits);
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it, digits);
    return out;
  }
  return j;
}

Json to_json(const RVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["pass"] = pass;
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  j["details"] = details;
  return rounded(j);
}

}  // namespace gpt_tomo
