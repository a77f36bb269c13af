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

// Data-parallel kernels behind the subspace searches. Every kernel has a
// serial reference version and an OpenMP version; both return identical
// results for the same inputs and seed (per-start sub-seeds, reduction in
// start order).

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ueb/cuts.hpp"
#include "ueb/state.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ueb {

enum class Execution { Serial, Parallel };

struct SearchConfig {
    int starts = 64;
    std::uint64_t seed = 0;
    int max_iters = 500;
    /// Local refinement stops once a step improves the objective by less
    /// than this fraction of its current value.
    double improvement_tol = 1e-12;
    /// Acceptance slack for sigma_min when looking for maximally entangled vectors.
    double tol_me = 1e-7;
    /// Threshold on the normalized discriminant of binary quadratics.
    double tol_disc = 1e-9;
    Execution exec = Execution::Parallel;
};

/// The subspace basis reshaped across a cut: M(c) = sum_i c_i slices[i].
/// Side A is the row side; callers that need dA <= dB use transposed().
class Pencil {
   public:
    Pencil(const Subspace& s, const Bipartition& cut);
    explicit Pencil(std::vector<CMatrix> slices);

    int size() const { return static_cast<int>(slices_.size()); }
    Eigen::Index rows() const { return slices_.front().rows(); }
    Eigen::Index cols() const { return slices_.front().cols(); }
    const CMatrix& slice(int i) const { return slices_[static_cast<std::size_t>(i)]; }
    CMatrix combine(const CVector& c) const;
    /// tr(slice_i^dagger X) for every slice.
    CVector project(const CMatrix& x) const;
    Pencil transposed() const;

   private:
    std::vector<CMatrix> slices_;
};

namespace kernels {

std::uint64_t start_seed(std::uint64_t seed, int start);
/// Haar-random unit vector in C^k.
CVector random_unit(Eigen::Index k, std::mt19937_64& rng);

/// Smooth objective restricted to the unit sphere of C^k. grad is the
/// Euclidean gradient 2 df/d(conj c), so df = Re<grad, dc>. Implementations
/// must be safe to call concurrently.
class SphereObjective {
   public:
    struct Eval {
        double value;
        CVector grad;
    };
    virtual ~SphereObjective() = default;
    virtual double value(const CVector& c) const = 0;
    virtual Eval eval(const CVector& c) const = 0;
};

/// Sum of squared moduli of all 2x2 minors of M(c); zero iff M(c) has rank <= 1.
class ProductDefect final : public SphereObjective {
   public:
    explicit ProductDefect(Pencil pencil) : pencil_(std::move(pencil)) {}
    double value(const CVector& c) const override;
    Eval eval(const CVector& c) const override;

   private:
    Pencil pencil_;
};

/// ||M M^dagger - I/dA||_F^2 with dA = rows; zero iff M(c) is maximally
/// entangled. Requires rows <= cols.
class MaxEntangledDefect final : public SphereObjective {
   public:
    explicit MaxEntangledDefect(Pencil pencil);
    double value(const CVector& c) const override;
    Eval eval(const CVector& c) const override;

   private:
    Pencil pencil_;
};

/// Negative k-th singular value (1-based) of M(c).
class NegSingularValue final : public SphereObjective {
   public:
    NegSingularValue(Pencil pencil, int k) : pencil_(std::move(pencil)), k_(k) {}
    double value(const CVector& c) const override;
    Eval eval(const CVector& c) const override;

   private:
    Pencil pencil_;
    int k_;
};

struct LocalResult {
    CVector point;
    double value = 0.0;
    int iterations = 0;
};

/// Projected gradient descent on the sphere with Armijo backtracking.
LocalResult descend_on_sphere(const SphereObjective& f, CVector start, const SearchConfig& cfg,
                              double value_floor = 0.0);

struct MultiStartResult {
    CVector best;
    double best_value = 0.0;
    int best_start = -1;
    std::vector<double> values;  // per start, in start order
};

MultiStartResult multistart_minimize_serial(const SphereObjective& f, Eigen::Index k,
                                            const SearchConfig& cfg, double value_floor = 0.0);
MultiStartResult multistart_minimize_omp(const SphereObjective& f, Eigen::Index k,
                                         const SearchConfig& cfg, double value_floor = 0.0);
MultiStartResult multistart_minimize(const SphereObjective& f, Eigen::Index k,
                                     const SearchConfig& cfg, double value_floor = 0.0);

/// Largest |2x2 minor| of M(c) over the polarization points c = e_i and
/// c = e_i + e_j. All vanish iff every minor vanishes identically.
struct MinorScan {
    double max_abs = 0.0;
    int i = -1;  // point achieving max_abs: e_i, or e_i + e_j when j >= 0
    int j = -1;
};
MinorScan scan_polarization_minors_serial(const Pencil& pencil);
MinorScan scan_polarization_minors_omp(const Pencil& pencil);
MinorScan scan_polarization_minors(const Pencil& pencil, Execution exec);

/// Sum of squared 2x2 minors of a matrix.
double minor_sum_squares(const CMatrix& m);

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
template <class Fn>
auto map_indexed(int n, Execution exec, Fn&& fn) -> std::vector<decltype(fn(0))> {
    std::vector<decltype(fn(0))> out(static_cast<std::size_t>(n));
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    } else {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    }
    return out;
}

}  // namespace kernels
}  // namespace ueb
