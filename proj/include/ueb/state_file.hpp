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


// JSON state files: {"name", "dims", "states": [[[re, im], ...], ...],
// optional "planes": [{"lone_party", "states", "selection"}], optional "kind"}.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ueb/locc.hpp"

namespace ueb {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlaneSpec {
    int lone_party = 0;
    std::vector<CVector> states;
    std::optional<std::vector<std::size_t>> selection;
};

struct StateFile {
    std::string name;
    std::vector<int> dims;
    std::vector<CVector> states;
    std::vector<PlaneSpec> planes;
    std::optional<std::string> kind;
};

StateFile parse_state_file(const std::string& text);
StateFile load_state_file(const std::string& path);
std::string dump_state_file(const StateFile& file);
void save_state_file(const StateFile& file, const std::string& path);

StateFile to_state_file(const StateSet& set);

/// Renormalizes states within 1e-6 of unit norm and rejects the rest.
/// Non-orthogonal input is rejected unless gram_fix is set, in which case
/// the states are re-orthonormalized in file order.
StateSet to_state_set(const StateFile& file, bool gram_fix = false, Tolerance tol = {});

/// Planes and selections keyed by lone party.
std::map<int, CutPlan> plans_of(const StateFile& file, Tolerance tol = {});

/// Parses "ueb", "ueb-all-cuts" or "umeb".
BasisKind parse_kind(const std::string& s);
const char* kind_flag(BasisKind k);

}  // namespace ueb
