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


// Random generators and independent oracles shared by the unit tests and
// the acceptance binary. Nothing here calls the library's search kernels.

#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ueb/state.hpp"

namespace ueb::testing {

using Rng = std::mt19937_64;

inline CVector gaussian_vector(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> g;
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = cplx(g(rng), g(rng));
    return v;
}

inline CVector random_unit_vector(Eigen::Index n, Rng& rng) {
    const CVector v = gaussian_vector(n, rng);
    return v / v.norm();
}

inline CMatrix random_unitary(Eigen::Index n, Rng& rng) {
    CMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) g.col(j) = gaussian_vector(n, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) q.col(j) *= std::polar(1.0, std::arg(r(j, j)));
    return q;
}

/// Orthonormal columns spanning the column space of m (classical Gram-Schmidt twice).
inline CMatrix orthonormal_columns(const CMatrix& m) {
    CMatrix q = m;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
        }
        q.col(j) /= q.col(j).norm();
    }
    return q;
}

inline CMatrix random_orthonormal(Eigen::Index n, Eigen::Index k, Rng& rng) {
    CMatrix m(n, k);
    for (Eigen::Index j = 0; j < k; ++j) m.col(j) = gaussian_vector(n, rng);
    return orthonormal_columns(m);
}

/// Applies U_0 (x) U_1 (x) ... to a lexicographically ordered vector.
inline CVector apply_local(const std::vector<CMatrix>& us, const CVector& v) {
    CMatrix full = CMatrix::Identity(1, 1);
    for (const auto& u : us) {
        CMatrix next(full.rows() * u.rows(), full.cols() * u.cols());
        for (Eigen::Index i = 0; i < full.rows(); ++i)
            for (Eigen::Index j = 0; j < full.cols(); ++j)
                next.block(i * u.rows(), j * u.cols(), u.rows(), u.cols()) = full(i, j) * u;
        full = std::move(next);
    }
    return full * v;
}

inline std::vector<CMatrix> random_locals(const QuditDims& dims, Rng& rng) {
    std::vector<CMatrix> us;
    for (int p = 0; p < dims.parties(); ++p) us.push_back(random_unitary(dims[p], rng));
    return us;
}

/// Two-party matrix view, row index = first party digit.
inline CMatrix as_matrix(const CVector& v, int da, int db) {
    CMatrix m(da, db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) m(i, j) = v[i * db + j];
    return m;
}

/// Eigenvalues of the first party's reduced density matrix, descending.
inline std::vector<double> reduced_spectrum(const CVector& v, int da, int db) {
    const CMatrix m = as_matrix(v, da, db);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(m * m.adjoint());
    std::vector<double> ev(eig.eigenvalues().data(), eig.eigenvalues().data() + da);
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

/// Linear entropy 1 - tr(rho_A^2) of a (not necessarily normalized) vector.
inline double linear_entropy(const CVector& v, int da, int db) {
    const CMatrix m = as_matrix(v / v.norm(), da, db);
    const CMatrix rho = m * m.adjoint();
    return 1.0 - (rho * rho).trace().real();
}

/// Random-perturbation hill climb of the linear entropy over unit vectors of
/// span(basis). Returns the best entropy seen.
inline double entropy_hill_climb(const CMatrix& basis, int da, int db, int starts, Rng& rng) {
    const Eigen::Index k = basis.cols();
    double best = 0.0;
    for (int s = 0; s < starts; ++s) {
        CVector c = random_unit_vector(k, rng);
        double cur = linear_entropy(basis * c, da, db);
        double step = 0.5;
        for (int it = 0; it < 200 && step > 1e-6; ++it) {
            CVector trial = c + step * gaussian_vector(k, rng);
            trial /= trial.norm();
            const double val = linear_entropy(basis * trial, da, db);
            if (val > cur) {
                c = trial;
                cur = val;
            } else {
                step *= 0.8;
            }
        }
        best = std::max(best, cur);
    }
    return best;
}

enum class OracleCount { One, Two, Infinite };

/// Projective roots of det(a M1 + b M2) from samples of p(t) = det(t M1 + M2)
/// at t = 0, 1, -1, clustered by distance.
inline OracleCount brute_force_count(const CMatrix& m1, const CMatrix& m2) {
    auto p = [&](double t) { return (t * m1 + m2).determinant(); };
    const cplx p0 = p(0.0), p1 = p(1.0), pm = p(-1.0);
    const cplx gamma = p0, alpha = (p1 + pm) / 2.0 - p0, beta = (p1 - pm) / 2.0;
    const double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
    if (scale < 1e-10) return OracleCount::Infinite;
    const cplx a = alpha / scale, b = beta / scale, g = gamma / scale;
    if (std::abs(a) < 1e-10) return std::abs(b) < 1e-10 ? OracleCount::One : OracleCount::Two;
    const cplx root = std::sqrt(b * b - 4.0 * a * g);
    const cplx r1 = (-b + root) / (2.0 * a), r2 = (-b - root) / (2.0 * a);
    const double spread = std::abs(r1 - r2) / (1.0 + std::max(std::abs(r1), std::abs(r2)));
    return spread < 1e-5 ? OracleCount::One : OracleCount::Two;
}

}  // namespace ueb::testing
