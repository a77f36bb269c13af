// Copyright 2026 The ueb Authors
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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ueb/locc.hpp"

namespace ueb {

using ReportJson = nlohmann::ordered_json;

struct ReportContext {
    std::string input_digest;
    VerifyOptions verify;
    /// Maps numerical-evidence verdicts to INCONCLUSIVE.
    bool require_exact = false;
    std::map<int, CutPlan> plans;
    std::optional<SetMode> completion;
};

struct Report {
    ReportJson json;
    std::optional<Outcome> outcome;
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

Report make_verify_report(const StateSet& set, BasisKind kind, const ReportContext& ctx);
/// Full diagnostics; a verdict is included when kind is set.
Report make_analyze_report(const StateSet& set, std::optional<BasisKind> kind, const ReportContext& ctx);

/// Indented key: value listing of a report.
std::string render_text(const ReportJson& j);

/// 0 for VERIFIED and COMPLETE_BASIS, 1 for REFUTED, 2 for INCONCLUSIVE.
int exit_code(Outcome o);

}  // namespace ueb
