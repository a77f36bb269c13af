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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ueb {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Raised when two objects that must live in the same space do not.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Absolute numerical tolerance used for orthogonality, rank cutoffs and
/// identically-zero tests. Must lie in (0, 1e-3).
class Tolerance {
   public:
    constexpr Tolerance() = default;
    explicit Tolerance(double eps);

    constexpr double eps() const { return eps_; }

   private:
    double eps_ = 1e-9;
};

/// Local dimensions of a multi-qudit space, leftmost party first.
class QuditDims {
   public:
    QuditDims() = default;
    explicit QuditDims(std::vector<int> dims);
    QuditDims(std::initializer_list<int> dims) : QuditDims(std::vector<int>(dims)) {}

    static QuditDims qubits(int n);

    int parties() const { return static_cast<int>(dims_.size()); }
    int operator[](int party) const { return dims_[static_cast<std::size_t>(party)]; }
    const std::vector<int>& dims() const { return dims_; }
    /// Product of all local dimensions.
    std::size_t total() const { return total_; }

    /// Local digits of a flat index (leftmost party most significant).
    std::vector<int> decode(std::size_t index) const;
    std::size_t encode(std::span<const int> digits) const;

    std::string str() const;  // "2x2x2"

    friend bool operator==(const QuditDims&, const QuditDims&) = default;

   private:
    std::vector<int> dims_;
    std::size_t total_ = 0;
};

/// Unit-norm pure state. Amplitudes are indexed lexicographically by the
/// local indices with the leftmost party most significant.
class PureState {
   public:
    /// Takes amplitudes that already have unit norm (checked to 1e-8).
    PureState(QuditDims dims, CVector amps);

    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(QuditDims dims, CVector raw);
    /// Computational basis ket from local digits.
    static PureState basis(QuditDims dims, std::span<const int> digits);
    /// Multi-qubit basis ket from a bit string such as "011".
    static PureState ket(std::string_view bits);

    const QuditDims& dims() const { return dims_; }
    const CVector& amps() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

   private:
    QuditDims dims_;
    CVector amps_;
};

/// Unnormalized Kronecker product kernel; ||kron(a, b)|| = ||a|| ||b||.
CVector kron(const CVector& a, const CVector& b);

PureState tensor_product(const PureState& a, const PureState& b);

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const PureState& a, const PureState& b);

/// Fixes the global phase so the first amplitude with modulus above tol is
/// real and positive. Idempotent on stored amplitudes.
PureState canonical_phase(const PureState& p, Tolerance tol = {});

/// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

/// Ordered collection of mutually orthogonal states over one space.
class StateSet {
   public:
    /// Validates shared dimensions, pairwise orthogonality and 1 <= count <= D.
    StateSet(QuditDims dims, std::vector<PureState> states, std::string name = {},
             Tolerance tol = {});

    const QuditDims& dims() const { return dims_; }
    const std::vector<PureState>& states() const { return states_; }
    const PureState& operator[](std::size_t i) const { return states_[i]; }
    std::size_t size() const { return states_.size(); }
    const std::string& name() const { return name_; }

    /// Columns are the state amplitude vectors.
    CMatrix matrix() const;
    /// A copy holding only the listed states, in the listed order.
    StateSet subset(std::span<const std::size_t> indices, std::string name = {}) const;

   private:
    QuditDims dims_;
    std::vector<PureState> states_;
    std::string name_;
};

/// Subspace held as a matrix with orthonormal columns.
class Subspace {
   public:
    explicit Subspace(QuditDims dims);  // zero-dimensional
    /// Takes a basis that is already orthonormal (Gram identity checked to 1e-8).
    Subspace(QuditDims dims, CMatrix basis);

    const QuditDims& dims() const { return dims_; }
    const CMatrix& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    PureState state(int i) const;
    /// Orthogonal projector onto the subspace.
    CMatrix projector() const;
    /// Unit vector of the subspace with the given coordinates in the basis.
    PureState combine(const CVector& coeffs) const;

   private:
    QuditDims dims_;
    CMatrix basis_;
};

/// Modified Gram-Schmidt with a second re-orthogonalization pass. Vectors
/// whose residual norm falls below tol are dropped.
Subspace orthonormalize(std::span<const CVector> vectors, const QuditDims& dims,
                        Tolerance tol = {});
Subspace span_of(const StateSet& set, Tolerance tol = {});
Subspace span_of(std::span<const PureState> states, Tolerance tol = {});

/// dim = D - s.dim, computed from a full Householder QR of the basis.
Subspace orthogonal_complement(const Subspace& s);

/// Orthogonal complement of v taken inside s (v must lie in s).
Subspace complement_within(const Subspace& s, const CVector& coeffs);

/// True iff the two orthogonal projectors differ by less than tol in
/// Frobenius norm.
bool span_equal(const Subspace& a, const Subspace& b, Tolerance tol = {});

}  // namespace ueb
