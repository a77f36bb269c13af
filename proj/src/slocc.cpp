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

#include "ueb/slocc.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ueb {

namespace {

void require_three_qubits(const QuditDims& dims, const char* what) {
    if (!(dims == QuditDims::qubits(3))) {
        throw DimensionMismatch(std::string(what) + ": expected 2x2x2, got " + dims.str());
    }
}

}  // namespace

const char* to_string(SloccClass c) {
    switch (c) {
        case SloccClass::FullySeparable: return "FULLY_SEPARABLE";
        case SloccClass::Biseparable: return "BISEPARABLE";
        case SloccClass::WClass: return "W_CLASS";
        case SloccClass::GhzClass: return "GHZ_CLASS";
    }
    return "?";
}

std::string SloccLabel::str() const {
    switch (cls) {
        case SloccClass::FullySeparable: return "SEP";
        case SloccClass::Biseparable:
            return "BISEP(" + Bipartition(QuditDims::qubits(3), product_mask.value_or(1)).str() + ")";
        case SloccClass::WClass: return "W";
        case SloccClass::GhzClass: return "GHZ";
    }
    return "?";
}

double three_tangle(const PureState& p) {
    require_three_qubits(p.dims(), "three_tangle");
    auto a = [&](int i, int j, int k) { return p[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
    const cplx d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                    a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                    a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                    a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    const cplx d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                    a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                    a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                    a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                    a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                    a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    const cplx d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                    a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

SloccLabel classify_three_qubit(const PureState& p, Tolerance tol, double tol_tangle) {
    require_three_qubits(p.dims(), "classify_three_qubit");
    SloccLabel label;
    label.tangle = three_tangle(p);
    int product_cuts = 0;
    const auto cuts = enumerate_cuts(p.dims());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        label.cut_ranks[i] = schmidt(p, cuts[i], tol).rank;
        if (label.cut_ranks[i] == 1) {
            ++product_cuts;
            label.product_mask = cuts[i].mask();
        }
    }
    if (product_cuts == 3) {
        label.cls = SloccClass::FullySeparable;
        label.product_mask.reset();
    } else if (product_cuts == 1) {
        label.cls = SloccClass::Biseparable;
    } else {
        label.cls = label.tangle > tol_tangle ? SloccClass::GhzClass : SloccClass::WClass;
    }
    return label;
}

CMatrix partial_trace(const PureState& p, const std::vector<int>& keep) {
    const QuditDims& dims = p.dims();
    std::uint32_t mask = 0;
    for (int k : keep) {
        if (k < 0 || k >= dims.parties()) throw std::out_of_range("partial_trace: bad party index");
        mask |= 1u << k;
    }
    if (mask == 0) throw std::invalid_argument("partial_trace: nothing kept");
    const std::uint32_t full = (1u << dims.parties()) - 1u;
    if (mask == full) return p.amps() * p.amps().adjoint();
    // Reshape with the kept parties as rows; the reduction is M M^dagger.
    const Bipartition cut(dims, mask);
    const CMatrix m = cut.in_a(keep.front()) ? reshape(p, cut) : CMatrix(reshape(p, cut).transpose());
    return m * m.adjoint();
}

CVector w_state(int n) {
    if (n < 2) throw std::invalid_argument("w_state: n must be >= 2");
    CVector v = CVector::Zero(std::int64_t{1} << n);
    for (int i = 0; i < n; ++i) v[std::int64_t{1} << i] = 1.0 / std::sqrt(static_cast<double>(n));
    return v;
}

CVector ghz_state(int n) {
    if (n < 2) throw std::invalid_argument("ghz_state: n must be >= 2");
    CVector v = CVector::Zero(std::int64_t{1} << n);
    v[0] = v[v.size() - 1] = 1.0 / std::sqrt(2.0);
    return v;
}

CMatrix reduced_w_closed_form(int n) {
    CVector psi_plus = CVector::Zero(4);
    psi_plus[1] = psi_plus[2] = 1.0 / std::sqrt(2.0);
    CMatrix rho = 2.0 * psi_plus * psi_plus.adjoint();
    rho(0, 0) += static_cast<double>(n - 2);
    return rho / static_cast<double>(n);
}

namespace {

ProductCount count_in_range(const CMatrix& rho, Tolerance tol) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho);
    std::vector<CVector> range;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        if (eig.eigenvalues()[i] > tol.eps()) range.push_back(eig.eigenvectors().col(i));
    }
    const Subspace s = orthonormalize(range, QuditDims{2, 2}, tol);
    if (s.dim() != 2) throw std::logic_error("ghz_w_range_witness: reduced state does not have rank 2");
    return count_product_states_2d_2x2(s, tol);
}

}  // namespace

RangeWitness ghz_w_range_witness(int n, Tolerance tol) {
    if (n < 3) throw std::invalid_argument("ghz_w_range_witness: N must be >= 3");
    if (n > 20) throw std::invalid_argument("ghz_w_range_witness: N above 20 is not supported");
    const QuditDims dims = QuditDims::qubits(n);
    RangeWitness out;
    out.rho_w = partial_trace(PureState(dims, w_state(n)), {0, 1});
    out.rho_ghz = partial_trace(PureState(dims, ghz_state(n)), {0, 1});
    out.w_count = count_in_range(out.rho_w, tol);
    out.ghz_count = count_in_range(out.rho_ghz, tol);
    return out;
}

bool resource_dimension_flag(const StateSet& set, Tolerance tol) {
    require_three_qubits(set.dims(), "resource_dimension_flag");
    std::vector<PureState> members = set.states();
    const Subspace comp = orthogonal_complement(span_of(set, tol));
    if (comp.dim() == 1) members.push_back(comp.state(0));
    bool ghz = false, w = false;
    for (const auto& p : members) {
        const SloccClass c = classify_three_qubit(p, tol).cls;
        ghz = ghz || c == SloccClass::GhzClass;
        w = w || c == SloccClass::WClass;
    }
    return ghz && w;
}

}  // namespace ueb
