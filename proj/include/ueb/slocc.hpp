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

#include <array>
#include <optional>
#include <string>

#include "ueb/subspace.hpp"

namespace ueb {

inline constexpr double kTangleTol = 1e-8;

enum class SloccClass { FullySeparable, Biseparable, WClass, GhzClass };

struct SloccLabel {
    SloccClass cls = SloccClass::FullySeparable;
    /// Set for Biseparable: the cut across which the state is product.
    std::optional<std::uint32_t> product_mask;
    double tangle = 0.0;
    /// Schmidt ranks across A|BC, AB|C, AC|B (mask order 1, 3, 5).
    std::array<int, 3> cut_ranks{};
    /// "GHZ", "W", "BISEP(A|BC)" or "SEP".
    std::string str() const;
};

const char* to_string(SloccClass c);

/// Three-tangle 4|d1 - 2 d2 + 4 d3| of a three-qubit state.
double three_tangle(const PureState& p);

SloccLabel classify_three_qubit(const PureState& p, Tolerance tol = {},
                                double tol_tangle = kTangleTol);

/// Density matrix of the parties in `keep` (ascending), tracing out the rest.
CMatrix partial_trace(const PureState& p, const std::vector<int>& keep);

CVector w_state(int n);
CVector ghz_state(int n);

/// (1/N)(2|psi+><psi+| + (N-2)|00><00|).
CMatrix reduced_w_closed_form(int n);

struct RangeWitness {
    ProductCount w_count = ProductCount::ZeroImpossible;
    ProductCount ghz_count = ProductCount::ZeroImpossible;
    CMatrix rho_w;
    CMatrix rho_ghz;
    bool succeeds() const {
        return w_count == ProductCount::One && ghz_count == ProductCount::Two;
    }
};

/// Counts product states in the ranges of the two-party reductions of W_N and GHZ_N.
RangeWitness ghz_w_range_witness(int n, Tolerance tol = {});

/// True when the set (plus the completion of its complement, if that is a
/// single ray) holds both a GHZ-class and a W-class member.
bool resource_dimension_flag(const StateSet& set, Tolerance tol = {});

}  // namespace ueb
