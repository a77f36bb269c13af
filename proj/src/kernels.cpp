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

#include "ueb/kernels.hpp"

#include <cmath>
#include <limits>

namespace ueb {

Pencil::Pencil(const Subspace& s, const Bipartition& cut) {
    if (!(s.dims() == cut.dims())) throw DimensionMismatch("Pencil: subspace and cut spaces differ");
    if (s.dim() == 0) throw std::invalid_argument("Pencil: empty subspace");
    const CutIndex idx = cut_index(cut);
    for (int i = 0; i < s.dim(); ++i) {
        CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(cut.dim_a()), static_cast<Eigen::Index>(cut.dim_b()));
        const auto col = s.basis().col(i);
        for (std::size_t f = 0; f < idx.row.size(); ++f) m(idx.row[f], idx.col[f]) = col[static_cast<Eigen::Index>(f)];
        slices_.push_back(std::move(m));
    }
}

Pencil::Pencil(std::vector<CMatrix> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw std::invalid_argument("Pencil: no slices");
}

CMatrix Pencil::combine(const CVector& c) const {
    CMatrix m = CMatrix::Zero(rows(), cols());
    for (std::size_t i = 0; i < slices_.size(); ++i) m += c[static_cast<Eigen::Index>(i)] * slices_[i];
    return m;
}

CVector Pencil::project(const CMatrix& x) const {
    CVector out(size());
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = slices_[i].conjugate().cwiseProduct(x).sum();
    }
    return out;
}

Pencil Pencil::transposed() const {
    std::vector<CMatrix> t;
    t.reserve(slices_.size());
    for (const auto& s : slices_) t.push_back(s.transpose());
    return Pencil(std::move(t));
}

namespace kernels {

std::uint64_t start_seed(std::uint64_t seed, int start) {
    // splitmix64 finalizer over (seed, start)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(start) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

CVector random_unit(Eigen::Index k, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        v[i] = cplx(re, im);
    }
    return v.normalized();
}

double minor_sum_squares(const CMatrix& m) {
    double total = 0.0;
    for (Eigen::Index p = 0; p < m.rows(); ++p)
        for (Eigen::Index q = p + 1; q < m.rows(); ++q)
            for (Eigen::Index r = 0; r < m.cols(); ++r)
                for (Eigen::Index s = r + 1; s < m.cols(); ++s)
                    total += std::norm(m(p, r) * m(q, s) - m(p, s) * m(q, r));
    return total;
}

double ProductDefect::value(const CVector& c) const { return minor_sum_squares(pencil_.combine(c)); }

ProductDefect::Eval ProductDefect::eval(const CVector& c) const {
    const CMatrix m = pencil_.combine(c);
    const double n2 = m.squaredNorm();
    // f = (||M||^4 - tr((M M^+)^2)) / 2  =>  df/dc* = <M_i, ||M||^2 M - M M^+ M>
    const CMatrix x = n2 * m - m * (m.adjoint() * m);
    return {minor_sum_squares(m), 2.0 * pencil_.project(x)};
}

MaxEntangledDefect::MaxEntangledDefect(Pencil pencil) : pencil_(std::move(pencil)) {
    if (pencil_.rows() > pencil_.cols()) {
        throw std::invalid_argument("MaxEntangledDefect: expects rows <= cols");
    }
}

double MaxEntangledDefect::value(const CVector& c) const {
    const CMatrix m = pencil_.combine(c);
    const double da = static_cast<double>(m.rows());
    CMatrix g = m * m.adjoint();
    g.diagonal().array() -= 1.0 / da;
    return g.squaredNorm();
}

MaxEntangledDefect::Eval MaxEntangledDefect::eval(const CVector& c) const {
    const CMatrix m = pencil_.combine(c);
    const double da = static_cast<double>(m.rows());
    CMatrix g = m * m.adjoint();
    const CMatrix gm = g * m;
    g.diagonal().array() -= 1.0 / da;
    // h = tr(G^2) - (2/dA) tr(G) + 1/dA  =>  dh/dc* = 2<M_i, G M> - (2/dA)<M_i, M>
    const CMatrix x = 2.0 * gm - (2.0 / da) * m;
    return {g.squaredNorm(), 2.0 * pencil_.project(x)};
}

double NegSingularValue::value(const CVector& c) const {
    const CMatrix m = pencil_.combine(c);
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    return k_ <= sv.size() ? -sv[k_ - 1] : 0.0;
}

NegSingularValue::Eval NegSingularValue::eval(const CVector& c) const {
    const CMatrix m = pencil_.combine(c);
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (k_ > sv.size()) return {0.0, CVector::Zero(c.size())};
    const auto u = svd.matrixU().col(k_ - 1);
    const auto v = svd.matrixV().col(k_ - 1);
    // d sigma_k = Re(u^+ dM v); the descent objective is -sigma_k
    const CMatrix outer = u * v.adjoint();
    return {-sv[k_ - 1], -pencil_.project(outer)};
}

LocalResult descend_on_sphere(const SphereObjective& f, CVector start, const SearchConfig& cfg,
                              double value_floor) {
    LocalResult r;
    r.point = start.normalized();
    auto ev = f.eval(r.point);
    r.value = ev.value;
    double step = 1.0;
    for (r.iterations = 0; r.iterations < cfg.max_iters; ++r.iterations) {
        if (r.value <= value_floor) break;
        const cplx radial = r.point.dot(ev.grad);
        const CVector tangent = ev.grad - r.point * radial.real();
        const double gn2 = tangent.squaredNorm();
        if (!(gn2 > 0.0)) break;

        double t = step;
        CVector trial;
        double trial_value = std::numeric_limits<double>::infinity();
        bool accepted = false;
        while (t > 1e-20) {
            trial = (r.point - t * tangent).normalized();
            trial_value = f.value(trial);
            if (trial_value <= r.value - 1e-4 * t * gn2) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;
        while (t > 1e-20) {
            CVector half = (r.point - 0.5 * t * tangent).normalized();
            const double half_value = f.value(half);
            if (!(half_value < trial_value)) break;
            trial = std::move(half);
            trial_value = half_value;
            t *= 0.5;
        }

        const double improvement = r.value - trial_value;
        r.point = std::move(trial);
        ev = f.eval(r.point);
        r.value = ev.value;
        step = 2.0 * t;
        if (improvement < cfg.improvement_tol * std::abs(r.value + improvement)) break;
    }
    return r;
}

namespace {

LocalResult run_start(const SphereObjective& f, Eigen::Index k, const SearchConfig& cfg, int start,
                      double value_floor) {
    std::mt19937_64 rng(start_seed(cfg.seed, start));
    return descend_on_sphere(f, random_unit(k, rng), cfg, value_floor);
}

MultiStartResult reduce_in_order(std::vector<LocalResult>& results) {
    MultiStartResult out;
    out.best_value = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < results.size(); ++s) {
        out.values.push_back(results[s].value);
        if (results[s].value < out.best_value) {
            out.best_value = results[s].value;
            out.best_start = static_cast<int>(s);
        }
    }
    if (out.best_start >= 0) out.best = std::move(results[static_cast<std::size_t>(out.best_start)].point);
    return out;
}

}  // namespace

MultiStartResult multistart_minimize_serial(const SphereObjective& f, Eigen::Index k,
                                            const SearchConfig& cfg, double value_floor) {
    std::vector<LocalResult> results;
    results.reserve(static_cast<std::size_t>(cfg.starts));
    for (int s = 0; s < cfg.starts; ++s) results.push_back(run_start(f, k, cfg, s, value_floor));
    return reduce_in_order(results);
}

MultiStartResult multistart_minimize_omp(const SphereObjective& f, Eigen::Index k,
                                         const SearchConfig& cfg, double value_floor) {
    std::vector<LocalResult> results(static_cast<std::size_t>(std::max(cfg.starts, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < cfg.starts; ++s) {
        results[static_cast<std::size_t>(s)] = run_start(f, k, cfg, s, value_floor);
    }
    return reduce_in_order(results);
}

MultiStartResult multistart_minimize(const SphereObjective& f, Eigen::Index k, const SearchConfig& cfg,
                                     double value_floor) {
    return cfg.exec == Execution::Parallel ? multistart_minimize_omp(f, k, cfg, value_floor)
                                           : multistart_minimize_serial(f, k, cfg, value_floor);
}

namespace {

double max_abs_minor(const CMatrix& m) {
    double best = 0.0;
    for (Eigen::Index p = 0; p < m.rows(); ++p)
        for (Eigen::Index q = p + 1; q < m.rows(); ++q)
            for (Eigen::Index r = 0; r < m.cols(); ++r)
                for (Eigen::Index s = r + 1; s < m.cols(); ++s)
                    best = std::max(best, std::abs(m(p, r) * m(q, s) - m(p, s) * m(q, r)));
    return best;
}

// Point index n < k is e_n; the remaining indices enumerate pairs i < j.
std::pair<int, int> polarization_point(int n, int k) {
    if (n < k) return {n, -1};
    n -= k;
    for (int i = 0; i < k; ++i) {
        const int row = k - 1 - i;
        if (n < row) return {i, i + 1 + n};
        n -= row;
    }
    return {-1, -1};
}

double minor_at_point(const Pencil& pencil, int n) {
    const auto [i, j] = polarization_point(n, pencil.size());
    if (j < 0) return max_abs_minor(pencil.slice(i));
    return max_abs_minor(pencil.slice(i) + pencil.slice(j));
}

MinorScan reduce_scan(const std::vector<double>& values, int k) {
    MinorScan out;
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (values[n] > out.max_abs) {
            out.max_abs = values[n];
            std::tie(out.i, out.j) = polarization_point(static_cast<int>(n), k);
        }
    }
    return out;
}

int polarization_count(int k) { return k + k * (k - 1) / 2; }

}  // namespace

MinorScan scan_polarization_minors_serial(const Pencil& pencil) {
    const int count = polarization_count(pencil.size());
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) values.push_back(minor_at_point(pencil, n));
    return reduce_scan(values, pencil.size());
}

MinorScan scan_polarization_minors_omp(const Pencil& pencil) {
    const int count = polarization_count(pencil.size());
    std::vector<double> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (int n = 0; n < count; ++n) values[static_cast<std::size_t>(n)] = minor_at_point(pencil, n);
    return reduce_scan(values, pencil.size());
}

MinorScan scan_polarization_minors(const Pencil& pencil, Execution exec) {
    return exec == Execution::Parallel ? scan_polarization_minors_omp(pencil)
                                       : scan_polarization_minors_serial(pencil);
}

}  // namespace kernels
}  // namespace ueb
