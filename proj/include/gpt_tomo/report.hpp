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

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gpt_tomo/core.hpp"

namespace gpt_tomo {

using Json = nlohmann::ordered_json;

/// Outcome of a verification. Serialises to
/// {"check", "pass", "tolerance", "seed", "details"} in that order.
struct CheckReport {
  std::string check;
  bool pass = false;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  Json details = Json::object();

  Json to_json() const;
};

/// `v` rounded to `digits` significant decimal digits.
double round_significant(double v, int digits = 12);

/// Rounds every floating point number inside `j`.
Json rounded(const Json& j, int digits = 12);

Json to_json(const RVector& v);

}  // namespace gpt_tomo
