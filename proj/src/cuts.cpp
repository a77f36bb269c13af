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

#include "ueb/cuts.hpp"

#include <cmath>

namespace ueb {

Bipartition::Bipartition(QuditDims dims, std::uint32_t mask) : dims_(std::move(dims)) {
    const int m = dims_.parties();
    if (m < 2) throw std::invalid_argument("Bipartition: need at least two parties");
    if (m > 31) throw std::invalid_argument("Bipartition: too many parties");
    const std::uint32_t full = (1u << m) - 1u;
    if (mask == 0 || (mask & ~full) != 0 || mask == full) {
        throw std::invalid_argument("Bipartition: mask must be a nonempty proper subset");
    }
    mask_ = (mask & 1u) ? mask : (full & ~mask);
    for (int p = 0; p < m; ++p) {
        (in_a(p) ? dim_a_ : dim_b_) *= static_cast<std::size_t>(dims_[p]);
    }
}

std::vector<int> Bipartition::parties_a() const {
    std::vector<int> out;
    for (int p = 0; p < dims_.parties(); ++p) if (in_a(p)) out.push_back(p);
    return out;
}

std::vector<int> Bipartition::parties_b() const {
    std::vector<int> out;
    for (int p = 0; p < dims_.parties(); ++p) if (!in_a(p)) out.push_back(p);
    return out;
}

std::string Bipartition::str() const {
    auto label = [](int p) {
        return p < 26 ? std::string(1, static_cast<char>('A' + p)) : "P" + std::to_string(p);
    };
    std::string s;
    for (int p : parties_a()) s += label(p);
    s += '|';
    for (int p : parties_b()) s += label(p);
    return s;
}

CutIndex cut_index(const Bipartition& cut) {
    const QuditDims& dims = cut.dims();
    CutIndex idx;
    idx.row.resize(dims.total());
    idx.col.resize(dims.total());
    for (std::size_t i = 0; i < dims.total(); ++i) {
        const auto digits = dims.decode(i);
        Eigen::Index r = 0, c = 0;
        for (int p = 0; p < dims.parties(); ++p) {
            if (cut.in_a(p)) {
                r = r * dims[p] + digits[static_cast<std::size_t>(p)];
            } else {
                c = c * dims[p] + digits[static_cast<std::size_t>(p)];
            }
        }
        idx.row[i] = r;
        idx.col[i] = c;
    }
    return idx;
}

std::vector<Bipartition> enumerate_cuts(const QuditDims& dims) {
    const int m = dims.parties();
    if (m < 2) throw std::invalid_argument("enumerate_cuts: need at least two parties");
    std::vector<Bipartition> cuts;
    const std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t mask = 1; mask < full; mask += 2) cuts.emplace_back(dims, mask);
    return cuts;
}

Bipartition first_cut(const QuditDims& dims) { return Bipartition(dims, 1u); }

CMatrix reshape(const CVector& amps, const Bipartition& cut) {
    if (static_cast<std::size_t>(amps.size()) != cut.dims().total()) {
        throw DimensionMismatch("reshape: state does not live in the cut's space");
    }
    const CutIndex idx = cut_index(cut);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(cut.dim_a()), static_cast<Eigen::Index>(cut.dim_b()));
    for (std::size_t i = 0; i < idx.row.size(); ++i) {
        m(idx.row[i], idx.col[i]) = amps[static_cast<Eigen::Index>(i)];
    }
    return m;
}

CMatrix reshape(const PureState& p, const Bipartition& cut) {
    if (!(p.dims() == cut.dims())) throw DimensionMismatch("reshape: space mismatch");
    return reshape(p.amps(), cut);
}

SchmidtData schmidt(const PureState& p, const Bipartition& cut, Tolerance tol) {
    const CMatrix m = reshape(p, cut);
    Eigen::JacobiSVD<CMatrix> svd(m);
    SchmidtData out;
    out.mask = cut.mask();
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()[i];
        out.coefficients.push_back(s);
        if (s > tol.eps()) ++out.rank;
    }
    return out;
}

bool is_product(const PureState& p, const Bipartition& cut, Tolerance tol) {
    return schmidt(p, cut, tol).rank == 1;
}

bool is_maximally_entangled(const PureState& p, const Bipartition& cut, Tolerance tol) {
    const SchmidtData s = schmidt(p, cut, tol);
    const auto full = static_cast<int>(std::min(cut.dim_a(), cut.dim_b()));
    if (s.rank != full) return false;
    return s.coefficients.front() - s.coefficients[static_cast<std::size_t>(full - 1)] < tol.eps();
}

bool is_genuinely_entangled(const PureState& p, Tolerance tol) {
    for (const auto& cut : enumerate_cuts(p.dims())) {
        if (is_product(p, cut, tol)) return false;
    }
    return true;
}

double entanglement_entropy(const PureState& p, const Bipartition& cut) {
    const SchmidtData s = schmidt(p, cut);
    double h = 0.0;
    for (double c : s.coefficients) {
        const double w = c * c;
        if (w > 0.0) h -= w * std::log(w);
    }
    return h;
}

}  // namespace ueb
