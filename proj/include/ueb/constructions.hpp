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

// Builders for the incomplete entangled bases shipped with the library.
// Each builder runs its output through verify_basis and throws GateError if
// the declared property does not hold.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ueb/subspace.hpp"

namespace ueb {

struct GateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Qubit state from (bit string, amplitude) terms; amplitudes must already
/// give unit norm.
PureState qubit_state(std::initializer_list<std::pair<std::string_view, cplx>> terms);

/// Three-state two-qubit UEB with real amplitudes; complement is |11>.
StateSet two_qubit_ueb_real();
/// Equally entangled three-state two-qubit UEB built from cube roots of unity.
StateSet two_qubit_ueb_fourier();

/// Orthonormal pair of single-qubit vectors.
struct QubitBasis {
    CVector first;
    CVector second;
    static QubitBasis computational();
};

struct GeneralUeb {
    StateSet set;
    BasisVerdict verdict;
    /// True when the builder required the UEB property (primed pair equal to
    /// the unprimed pair up to phases).
    bool gated = false;
};

/// Fourier combinations of |a u0>, |a u1>, |b v0> for local bases {a, b}
/// on party one, {u0, u1} and {v0, v1} on party two.
GeneralUeb two_qubit_ueb_general(const QubitBasis& local_a, const QubitBasis& local_b,
                                 const QubitBasis& local_b_primed, const VerifyOptions& opts = {});

/// d^2 generalized Bell states (1/sqrt d) sum_j w^{jk} |j>|j+t mod d>,
/// ordered by t then k.
StateSet bell_meb(int d);

/// bell_meb(d) zero-padded into d x (d+n); a UMEB for 1 <= n < d.
StateSet embed_meb(int d, int n);

/// Four maximally entangled states of 2x4 on the extra pair {x, x'} of the
/// second party. x and x' must be orthonormal and orthogonal to |0>, |1>.
StateSet meb_extension_completion(const CVector& x, const CVector& x_prime);

/// bell_meb(2) in 2x3 with its first state removed.
StateSet bell_minus_first_in_2x3();

/// Six W-class states of three qubits; complement span{|011>, |111>}.
StateSet three_qubit_w_ueb();
/// Four GHZ-class and three W-class states of three qubits; complement |111>.
StateSet three_qubit_mixed_ueb();

/// s_r = (1/sqrt k) sum_j w_k^{jr} |strings[j]>, r in [0, k).
StateSet dft_superposition(const std::vector<std::string>& strings);
/// Same with +-1 Hadamard rows; k must be a power of two. Row r carries the
/// sign (-1)^popcount(r & bitrev(j)).
StateSet hadamard_superposition(const std::vector<std::string>& strings);

enum class CoeffVariant { Dft, HadamardIfPowerOfTwo };

/// 2^N - 1 genuinely entangled N-qubit states whose complement is |1...1>.
/// Order: weight-1 block, weight-(N-1) block, the three states mixing the
/// smallest complementary pair with |0...0>, then the remaining pairs.
StateSet n_qubit_ueb(int n, CoeffVariant variant = CoeffVariant::Dft);

/// The fifteen four-qubit states written out term by term in listing order.
StateSet four_qubit_ueb_listing();

struct CatalogEntry {
    std::string name;
    QuditDims dims;
    std::size_t count;
    BasisKind kind;
    /// Declared outcome of verify_basis(build(), kind).
    Outcome expected;
    std::string description;
    std::function<StateSet()> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);

}  // namespace ueb
