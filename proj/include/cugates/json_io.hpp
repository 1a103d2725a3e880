// Copyright 2026 The cugates developers
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

#include <json.hpp>

#include "cugates/circuit.hpp"
#include "cugates/mat.hpp"

namespace cugates {

using json = nlohmann::json;

json complex_to_json(cxd z);                 // [re, im]
cxd complex_from_json(const json& j);

json mat2_to_array(const Mat2& m);           // bare 2x2 array of [re,im]
Mat2 mat2_from_array(const json& j);

/// Matrix spec shared with the CLI: {"u": 2x2 array} or {"name": "X"|...}
/// or {"rz": t} | {"ry": t} | {"phase": p} (radians).
json mat2_to_spec(const Mat2& m);
Mat2 mat2_from_spec(const json& j);

/// Named constants I, X, Z, H, S, T; throws ParseError on unknown names.
Mat2 named_matrix(const std::string& name);

json circuit_to_json_obj(const Circuit& c);
Circuit circuit_from_json_obj(const json& j);

struct ClassificationReport;
struct SynthesisResult;
struct VerifyReport;
struct FalsifyReport;
struct IdentitiesReport;
struct Lemma1Report;

json report_to_json(const ClassificationReport& r);
json report_to_json(const SynthesisResult& r);
json report_to_json(const VerifyReport& r);
json report_to_json(const FalsifyReport& r);
json report_to_json(const IdentitiesReport& r);
json report_to_json(const Lemma1Report& r);

}  // namespace cugates
