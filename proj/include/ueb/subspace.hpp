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

// Entanglement content of subspaces and the basis-level verdicts built on
// it. Exact statements (polynomial identities, explicit witnesses) are kept
// apart from search-based evidence; a verdict never upgrades evidence.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ueb/cuts.hpp"
#include "ueb/kernels.hpp"
#include "ueb/state.hpp"

namespace ueb {

enum class Grade { Exact, NumericalEvidence, RuleBasedCited };

enum class SubspaceStatus {
    OnlyProduct,        // exact
    ContainsEntangled,  // exact, with witness
    NoProductFound,     // numerical evidence
    ProductFound,       // exact witness
    MaxEntangledFound,  // exact witness
    NoMaxEntangledFound,
};

struct SubspaceVerdict {
    std::uint32_t mask = 0;
    std::string cut;  // "A|BC"
    SubspaceStatus status = SubspaceStatus::OnlyProduct;
    Grade grade = Grade::Exact;
    std::optional<PureState> witness;
    double score = 0.0;
};

enum class BasisKind { Ueb, UebAllCuts, Umeb };

enum class Outcome { Verified, Refuted, CompleteBasis, Inconclusive };

struct BasisVerdict {
    BasisKind kind = BasisKind::Ueb;
    Outcome outcome = Outcome::Verified;
    Grade grade = Grade::Exact;
    std::vector<SubspaceVerdict> per_cut;
    int complement_dim = 0;
    /// Index of the first state failing the entanglement requirement.
    std::optional<std::size_t> offending_index;
    std::string reason;
};

const char* to_string(Grade g);
const char* to_string(SubspaceStatus s);
const char* to_string(BasisKind k);
const char* to_string(Outcome o);

/// Exact test that every vector of s is product across the cut: all 2x2
/// minors of M(c) must vanish identically, checked by polarization.
bool only_product_across_cut(const Subspace& s, const Bipartition& cut, Tolerance tol = {},
                             Execution exec = Execution::Parallel);

/// Same test, returning an entangled witness when one exists.
SubspaceVerdict analyze_product_content(const Subspace& s, const Bipartition& cut,
                                        Tolerance tol = {}, Execution exec = Execution::Parallel);

/// Exact test that every vector of s has Schmidt rank <= max_rank: all
/// (max_rank+1)-minors vanish identically, checked on the lattice points
/// sum(alpha) = max_rank + 1 (unisolvent for homogeneous forms of that degree).
/// Returns nullopt when the lattice has more than max_points points.
std::optional<bool> schmidt_rank_bounded(const Subspace& s, const Bipartition& cut, int max_rank,
                                         Tolerance tol = {}, std::size_t max_points = 200000);

SubspaceVerdict find_product_state(const Subspace& s, const Bipartition& cut,
                                   const SearchConfig& cfg = {}, Tolerance tol = {});
SubspaceVerdict find_maximally_entangled(const Subspace& s, const Bipartition& cut,
                                         const SearchConfig& cfg = {}, Tolerance tol = {});

enum class SetMode { Entangled, MaxEntangled };

struct OrthogonalSet {
    std::vector<PureState> states;
    /// True when the search stopped on an exact refusal (nothing of the
    /// requested kind is left) or because the subspace was exhausted.
    bool exact = false;
    int remaining_dim = 0;
};

/// Greedy deflation: pick a state of the requested kind, restrict to its
/// orthogonal complement inside s, repeat.
OrthogonalSet max_orthogonal_set(const Subspace& s, const Bipartition& cut, SetMode mode,
                                 const SearchConfig& cfg = {}, Tolerance tol = {});

/// Largest Schmidt rank seen over cfg.starts random vectors of s, then
/// pushed upward by maximizing the next singular value. Numerical evidence.
int max_schmidt_rank_in_subspace(const Subspace& s, const Bipartition& cut,
                                 const SearchConfig& cfg = {}, Tolerance tol = {});

enum class ProductCount { ZeroImpossible, One, Two, Infinite };
const char* to_string(ProductCount c);

/// Binary quadratic coefficients of det(a M1 + b M2) = alpha a^2 + beta ab + gamma b^2.
struct DetQuadratic {
    cplx alpha, beta, gamma;
};
DetQuadratic det_quadratic(const Subspace& s);

/// Number of product rays in a two-dimensional subspace of 2x2.
ProductCount count_product_states_2d_2x2(const Subspace& s, Tolerance tol = {},
                                          double tol_disc = 1e-9);

struct VerifyOptions {
    /// Cut for Ueb/Umeb; defaults to the first canonical cut.
    std::optional<std::uint32_t> cut_mask;
    SearchConfig search;
    Tolerance tol;
};

BasisVerdict verify_basis(const StateSet& set, BasisKind kind, const VerifyOptions& opts = {});

enum class Completable { Yes, NoExact, NoEvidence };
const char* to_string(Completable c);

struct CompletionResult {
    std::vector<PureState> found;
    int complement_dim = 0;
    Completable completable = Completable::NoEvidence;
};

CompletionResult completion_search(const StateSet& set, SetMode mode, const VerifyOptions& opts = {});

}  // namespace ueb
