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

#include <cstdint>
#include <string>
#include <vector>

#include "ueb/state.hpp"

namespace ueb {

/// Two-block split of the parties. Block A is stored as a bit mask (bit i
/// is party i) and always contains party 0, so a cut and its complement
/// share one representative.
class Bipartition {
   public:
    /// Any nonempty proper mask; canonicalized to the side holding party 0.
    Bipartition(QuditDims dims, std::uint32_t mask);

    const QuditDims& dims() const { return dims_; }
    std::uint32_t mask() const { return mask_; }
    bool in_a(int party) const { return (mask_ >> party) & 1u; }
    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::vector<int> parties_a() const;
    std::vector<int> parties_b() const;

    /// Parties labelled A, B, C, ...; e.g. "AC|B".
    std::string str() const;

    friend bool operator==(const Bipartition& a, const Bipartition& b) {
        return a.mask_ == b.mask_ && a.dims_ == b.dims_;
    }

   private:
    QuditDims dims_;
    std::uint32_t mask_;
    std::size_t dim_a_ = 1;
    std::size_t dim_b_ = 1;
};

/// Row/column index of every flat basis index for a cut.
struct CutIndex {
    std::vector<Eigen::Index> row;
    std::vector<Eigen::Index> col;
};
CutIndex cut_index(const Bipartition& cut);

/// All 2^(m-1) - 1 canonical cuts in ascending mask order.
std::vector<Bipartition> enumerate_cuts(const QuditDims& dims);

/// Cut with party 0 alone on side A; the only cut of a bipartite space.
Bipartition first_cut(const QuditDims& dims);

struct SchmidtData {
    std::vector<double> coefficients;  // nonincreasing
    int rank = 0;
    std::uint32_t mask = 0;
};

/// Amplitudes arranged as a dA x dB matrix; row index from block A parties,
/// column index from block B parties, each lexicographic in party order.
CMatrix reshape(const CVector& amps, const Bipartition& cut);
CMatrix reshape(const PureState& p, const Bipartition& cut);

SchmidtData schmidt(const PureState& p, const Bipartition& cut, Tolerance tol = {});
bool is_product(const PureState& p, const Bipartition& cut, Tolerance tol = {});
bool is_maximally_entangled(const PureState& p, const Bipartition& cut, Tolerance tol = {});
bool is_genuinely_entangled(const PureState& p, Tolerance tol = {});
/// Von Neumann entropy (natural log) of the squared Schmidt coefficients.
double entanglement_entropy(const PureState& p, const Bipartition& cut);

}  // namespace ueb
