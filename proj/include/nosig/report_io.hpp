// Copyright 2026 The nosig Authors
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

#include <string>

#include "json.hpp"
#include "nosig/scenario.hpp"
#include "nosig/sweep.hpp"

namespace nosig {

using Json = nlohmann::json;

/// %.17g, with -0 printed as 0.
std::string format_double(double value);

/// Deterministic serialization: sorted keys, two-space indent, doubles via
/// format_double. Parsing the output and serializing again gives the same bytes.
std::string to_canonical_json(const Json &value);

Json to_json(const CVector &v);
Json to_json(const CMatrix &m);
Json to_json(const ScenarioConfig &cfg);
Json to_json(const SignallingReport &report);

/// Overlays the keys present in `doc` onto `cfg`. Unknown keys, wrong types
/// and a "scenario" that differs from cfg.kind throw BadConfig. The result is
/// not resolved. A "sweep" key is rejected unless `sweep` is non-null, in
/// which case it is parsed into it.
void apply_config_json(ScenarioConfig &cfg, const Json &doc, SweepSpec *sweep = nullptr);

/// Human-readable summary of one report.
std::string to_text(const SignallingReport &report);

}  // namespace nosig
