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

#include "ueb/state.hpp"

#include <cmath>

namespace ueb {

namespace {

constexpr double kNormCheck = 1e-8;

void require_same(const QuditDims& a, const QuditDims& b, const char* what) {
    if (!(a == b)) {
        throw DimensionMismatch(std::string(what) + ": spaces " + a.str() + " and " +
                                b.str() + " differ");
    }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1e-3)) {
        throw std::invalid_argument("tolerance must lie in (0, 1e-3)");
    }
}

QuditDims::QuditDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("QuditDims: at least one party required");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("QuditDims: every local dimension must be >= 2");
        total_ *= static_cast<std::size_t>(d);
    }
}

QuditDims QuditDims::qubits(int n) { return QuditDims(std::vector<int>(static_cast<std::size_t>(n), 2)); }

std::vector<int> QuditDims::decode(std::size_t index) const {
    std::vector<int> digits(dims_.size());
    for (std::size_t p = dims_.size(); p-- > 0;) {
        const auto d = static_cast<std::size_t>(dims_[p]);
        digits[p] = static_cast<int>(index % d);
        index /= d;
    }
    return digits;
}

std::size_t QuditDims::encode(std::span<const int> digits) const {
    if (digits.size() != dims_.size()) throw DimensionMismatch("encode: wrong digit count");
    std::size_t index = 0;
    for (std::size_t p = 0; p < dims_.size(); ++p) {
        if (digits[p] < 0 || digits[p] >= dims_[p]) {
            throw std::out_of_range("encode: digit out of range");
        }
        index = index * static_cast<std::size_t>(dims_[p]) + static_cast<std::size_t>(digits[p]);
    }
    return index;
}

std::string QuditDims::str() const {
    std::string s;
    for (std::size_t p = 0; p < dims_.size(); ++p) {
        if (p) s += 'x';
        s += std::to_string(dims_[p]);
    }
    return s;
}

PureState::PureState(QuditDims dims, CVector amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
    if (static_cast<std::size_t>(amps_.size()) != dims_.total()) {
        throw DimensionMismatch("PureState: amplitude count " + std::to_string(amps_.size()) +
                                " does not match space " + dims_.str());
    }
    if (std::abs(amps_.norm() - 1.0) > kNormCheck) {
        throw std::invalid_argument("PureState: amplitudes are not unit norm");
    }
}

PureState PureState::normalized(QuditDims dims, CVector raw) {
    const double n = raw.norm();
    if (n == 0.0 || !std::isfinite(n)) throw std::invalid_argument("PureState: zero vector");
    raw /= n;
    return PureState(std::move(dims), std::move(raw));
}

PureState PureState::basis(QuditDims dims, std::span<const int> digits) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
    v[static_cast<Eigen::Index>(dims.encode(digits))] = 1.0;
    return PureState(std::move(dims), std::move(v));
}

PureState PureState::ket(std::string_view bits) {
    std::vector<int> digits;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("ket: expected a bit string");
        digits.push_back(c - '0');
    }
    return basis(QuditDims::qubits(static_cast<int>(digits.size())), digits);
}

CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<int> dims = a.dims().dims();
    dims.insert(dims.end(), b.dims().dims().begin(), b.dims().dims().end());
    return PureState(QuditDims(std::move(dims)), kron(a.amps(), b.amps()));
}

cplx inner(const PureState& a, const PureState& b) {
    require_same(a.dims(), b.dims(), "inner");
    return a.amps().dot(b.amps());  // Eigen's dot conjugates the first argument
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

PureState canonical_phase(const PureState& p, Tolerance tol) {
    const CVector& v = p.amps();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double r = std::abs(v[i]);
        if (r <= tol.eps()) continue;
        if (v[i].imag() == 0.0 && v[i].real() > 0.0) return p;
        const cplx phase = std::conj(v[i]) / r;
        CVector out = v * phase;
        out[i] = cplx(r, 0.0);
        return PureState(p.dims(), std::move(out));
    }
    throw std::invalid_argument("canonical_phase: zero vector");
}

StateSet::StateSet(QuditDims dims, std::vector<PureState> states, std::string name, Tolerance tol)
    : dims_(std::move(dims)), states_(std::move(states)), name_(std::move(name)) {
    if (states_.empty()) throw std::invalid_argument("StateSet: empty");
    if (states_.size() > dims_.total()) throw std::invalid_argument("StateSet: more states than dimensions");
    for (std::size_t i = 0; i < states_.size(); ++i) {
        require_same(dims_, states_[i].dims(), "StateSet");
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(inner(states_[j], states_[i])) >= tol.eps()) {
                throw std::invalid_argument("StateSet: states " + std::to_string(j) + " and " +
                                            std::to_string(i) + " are not orthogonal");
            }
        }
    }
}

CMatrix StateSet::matrix() const {
    CMatrix m(static_cast<Eigen::Index>(dims_.total()), static_cast<Eigen::Index>(states_.size()));
    for (std::size_t i = 0; i < states_.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = states_[i].amps();
    return m;
}

StateSet StateSet::subset(std::span<const std::size_t> indices, std::string name) const {
    std::vector<PureState> picked;
    for (std::size_t i : indices) picked.push_back(states_.at(i));
    return StateSet(dims_, std::move(picked), std::move(name));
}

Subspace::Subspace(QuditDims dims)
    : dims_(std::move(dims)), basis_(static_cast<Eigen::Index>(dims_.total()), 0) {}

Subspace::Subspace(QuditDims dims, CMatrix basis) : dims_(std::move(dims)), basis_(std::move(basis)) {
    if (static_cast<std::size_t>(basis_.rows()) != dims_.total()) {
        throw DimensionMismatch("Subspace: basis rows do not match space " + dims_.str());
    }
    if (basis_.cols() > basis_.rows()) throw std::invalid_argument("Subspace: too many basis vectors");
    const CMatrix gram = basis_.adjoint() * basis_;
    if ((gram - CMatrix::Identity(gram.rows(), gram.cols())).norm() > kNormCheck) {
        throw std::invalid_argument("Subspace: basis is not orthonormal");
    }
}

PureState Subspace::state(int i) const { return PureState(dims_, basis_.col(i)); }

CMatrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

PureState Subspace::combine(const CVector& coeffs) const {
    if (coeffs.size() != basis_.cols()) throw DimensionMismatch("combine: coefficient count");
    return PureState::normalized(dims_, basis_ * coeffs);
}

Subspace orthonormalize(std::span<const CVector> vectors, const QuditDims& dims, Tolerance tol) {
    const auto rows = static_cast<Eigen::Index>(dims.total());
    std::vector<CVector> kept;
    for (const CVector& raw : vectors) {
        if (raw.size() != rows) throw DimensionMismatch("orthonormalize: vector length");
        CVector v = raw;
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVector& q : kept) v -= q.dot(v) * q;
        }
        const double n = v.norm();
        if (n < tol.eps()) continue;
        kept.push_back(v / n);
    }
    CMatrix basis(rows, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = kept[i];
    return Subspace(dims, std::move(basis));
}

Subspace span_of(std::span<const PureState> states, Tolerance tol) {
    if (states.empty()) throw std::invalid_argument("span_of: no states");
    std::vector<CVector> vecs;
    for (const auto& s : states) {
        require_same(states.front().dims(), s.dims(), "span_of");
        vecs.push_back(s.amps());
    }
    return orthonormalize(vecs, states.front().dims(), tol);
}

Subspace span_of(const StateSet& set, Tolerance tol) { return span_of(set.states(), tol); }

Subspace orthogonal_complement(const Subspace& s) {
    const Eigen::Index n = static_cast<Eigen::Index>(s.dims().total());
    const Eigen::Index k = s.dim();
    if (k == 0) return Subspace(s.dims(), CMatrix::Identity(n, n));
    Eigen::HouseholderQR<CMatrix> qr(s.basis());
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    return Subspace(s.dims(), q.rightCols(n - k));
}

Subspace complement_within(const Subspace& s, const CVector& coeffs) {
    const Eigen::Index k = s.dim();
    if (coeffs.size() != k) throw DimensionMismatch("complement_within: coefficient count");
    if (k == 1) return Subspace(s.dims());
    Eigen::HouseholderQR<CMatrix> qr(CMatrix(coeffs.normalized()));
    const CMatrix q = qr.householderQ() * CMatrix::Identity(k, k);
    CMatrix basis = s.basis() * q.rightCols(k - 1);
    return Subspace(s.dims(), std::move(basis));
}

bool span_equal(const Subspace& a, const Subspace& b, Tolerance tol) {
    require_same(a.dims(), b.dims(), "span_equal");
    if (a.dim() != b.dim()) return false;
    return (a.projector() - b.projector()).norm() < tol.eps();
}

}  // namespace ueb
