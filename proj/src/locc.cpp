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

#include "ueb/locc.hpp"

#include <cmath>

namespace ueb {

namespace {

QuditDims rest_dims(const QuditDims& dims, int lone) {
    std::vector<int> rest;
    for (int i = 0; i < dims.parties(); ++i) {
        if (i != lone) rest.push_back(dims[i]);
    }
    return QuditDims(rest);
}

}  // namespace

Subspace default_plane() {
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix b = CMatrix::Zero(4, 2);
    b(0, 0) = b(3, 0) = r;
    b(1, 1) = b(2, 1) = r;
    return Subspace(QuditDims{2, 2}, b);
}

ProjectionResult project_two_qubit(const StateSet& states, int lone_party, const Subspace& plane,
                                   Tolerance tol) {
    const QuditDims& dims = states.dims();
    if (lone_party < 0 || lone_party >= dims.parties() || dims.parties() < 2) {
        throw std::out_of_range("project_two_qubit: bad lone party");
    }
    if (dims[lone_party] != 2) throw DimensionMismatch("project_two_qubit: lone party is not a qubit");
    if (plane.dim() != 2 || !(plane.dims() == rest_dims(dims, lone_party))) {
        throw DimensionMismatch("project_two_qubit: plane must be 2-dimensional over the remaining parties");
    }
    const Bipartition cut(dims, 1u << lone_party);
    const bool lone_is_row = cut.in_a(lone_party);
    const CMatrix conj_plane = plane.basis().conjugate();

    ProjectionResult out{{}, {}, lone_party, plane, true};
    std::vector<CVector> raw;
    for (std::size_t i = 0; i < states.size(); ++i) {
        CMatrix m = reshape(states[i], cut);
        if (!lone_is_row) m.transposeInPlace();
        const CMatrix c = m * conj_plane;
        const double p = c.squaredNorm();
        if (p < tol.eps()) {
            throw VanishingProjection("project_two_qubit: state " + std::to_string(i) + " projects to zero");
        }
        CVector v(4);
        v << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
        out.probabilities.push_back(p);
        out.projected.emplace_back(QuditDims{2, 2}, v / std::sqrt(p));
    }
    for (std::size_t i = 0; i < out.projected.size(); ++i) {
        for (std::size_t j = i + 1; j < out.projected.size(); ++j) {
            if (std::abs(inner(out.projected[i], out.projected[j])) >= tol.eps()) out.orthogonal = false;
        }
    }
    return out;
}

bool walgate_flag(const ProjectionResult& projected, Tolerance tol) {
    const auto& ps = projected.projected;
    if (ps.size() < 3) throw std::invalid_argument("walgate_flag: needs at least 3 projected states");
    const Bipartition cut(QuditDims{2, 2}, 1);
    std::vector<std::size_t> entangled;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (schmidt(ps[i], cut, tol).rank == 2) entangled.push_back(i);
    }
    auto orth = [&](std::size_t a, std::size_t b) { return std::abs(inner(ps[a], ps[b])) < tol.eps(); };
    for (std::size_t a = 0; a < entangled.size(); ++a)
        for (std::size_t b = a + 1; b < entangled.size(); ++b)
            for (std::size_t c = b + 1; c < entangled.size(); ++c) {
                const auto i = entangled[a], j = entangled[b], k = entangled[c];
                if (orth(i, j) && orth(i, k) && orth(j, k)) return true;
            }
    return false;
}

std::vector<CutFlag> all_cut_indistinguishability_flag(const StateSet& set, const std::map<int, CutPlan>& plans,
                                                       Tolerance tol) {
    if (!(set.dims() == QuditDims::qubits(3))) {
        throw DimensionMismatch("all_cut_indistinguishability_flag: expected 2x2x2, got " + set.dims().str());
    }
    if (set.size() < 3) throw std::invalid_argument("all_cut_indistinguishability_flag: needs at least 3 states");

    std::vector<CutFlag> flags;
    for (int lone = 0; lone < 3; ++lone) {
        CutFlag f;
        f.lone_party = lone;
        f.cut = Bipartition(set.dims(), 1u << lone).str();
        const auto it = plans.find(lone);
        const Subspace plane = it != plans.end() && it->second.plane ? *it->second.plane : default_plane();

        auto attempt = [&](const std::vector<std::size_t>& sel, bool propagate) -> bool {
            try {
                ProjectionResult r = project_two_qubit(set.subset(sel), lone, plane, tol);
                const bool ok = walgate_flag(r, tol);
                if (ok || propagate) {
                    f.flag = ok;
                    f.selection = sel;
                    f.projection = std::move(r);
                }
                return ok;
            } catch (const VanishingProjection&) {
                if (propagate) throw;
                return false;
            }
        };

        if (it != plans.end() && it->second.selection) {
            attempt(*it->second.selection, true);
        } else {
            bool done = false;
            for (std::size_t i = 0; i < set.size() && !done; ++i)
                for (std::size_t j = i + 1; j < set.size() && !done; ++j)
                    for (std::size_t k = j + 1; k < set.size() && !done; ++k) done = attempt({i, j, k}, false);
        }
        flags.push_back(std::move(f));
    }
    return flags;
}

}  // namespace ueb
