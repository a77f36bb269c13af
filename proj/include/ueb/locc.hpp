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

// Reduction of multi-party sets to two-qubit sets by a local projection, and
// the three-state two-qubit indistinguishability rule applied to the result.
// The rule is cited, not proved here; flags carry Grade::RuleBasedCited.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ueb/subspace.hpp"

namespace ueb {

struct VanishingProjection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProjectionResult {
    /// Renormalized states over an effective 2x2 space.
    std::vector<PureState> projected;
    /// Squared norm of each projection before renormalization.
    std::vector<double> probabilities;
    int lone_party = 0;
    Subspace plane;
    /// Pairwise orthogonality of the projected states, checked.
    bool orthogonal = false;
};

/// Applies 1 (x) P(plane) with the lone qubit kept. The plane is a
/// two-dimensional subspace over the remaining parties in ascending order.
/// Throws VanishingProjection if any state has squared norm below tol.
ProjectionResult project_two_qubit(const StateSet& states, int lone_party, const Subspace& plane,
                                   Tolerance tol = {});

/// span{phi+, psi+} over two qubits.
Subspace default_plane();

/// True iff three of the projected states are entangled and mutually orthogonal.
bool walgate_flag(const ProjectionResult& projected, Tolerance tol = {});

struct CutFlag {
    int lone_party = 0;
    std::string cut;
    bool flag = false;
    std::vector<std::size_t> selection;
    std::optional<ProjectionResult> projection;
    Grade grade = Grade::RuleBasedCited;
};

struct CutPlan {
    std::optional<Subspace> plane;
    std::optional<std::vector<std::size_t>> selection;
};

/// Per lone party of a three-qubit set. Without an explicit selection the
/// first index triple (lexicographic) whose projections are nonvanishing and
/// pass walgate_flag is used.
std::vector<CutFlag> all_cut_indistinguishability_flag(const StateSet& set,
                                                       const std::map<int, CutPlan>& plans = {},
                                                       Tolerance tol = {});

}  // namespace ueb
