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


#include <gtest/gtest.h>

#include "test_util.hpp"
#include "ueb/cuts.hpp"

namespace ueb {
namespace {

using testing::Rng;

PureState phi_plus() {
    return PureState::normalized(QuditDims{2, 2}, PureState::ket("00").amps() + PureState::ket("11").amps());
}

TEST(Bipartition, CanonicalAndNamed) {
    const QuditDims d = QuditDims::qubits(3);
    EXPECT_EQ(Bipartition(d, 6).mask(), 1u);
    EXPECT_EQ(Bipartition(d, 1).str(), "A|BC");
    EXPECT_EQ(Bipartition(d, 3).str(), "AB|C");
    EXPECT_EQ(Bipartition(d, 5).str(), "AC|B");
    EXPECT_THROW(Bipartition(d, 0), std::invalid_argument);
    EXPECT_THROW(Bipartition(d, 7), std::invalid_argument);
    EXPECT_THROW(Bipartition(QuditDims{4}, 1), std::invalid_argument);
}

TEST(Bipartition, EnumerationCount) {
    for (int m = 2; m <= 6; ++m) {
        const auto cuts = enumerate_cuts(QuditDims::qubits(m));
        EXPECT_EQ(cuts.size(), (std::size_t{1} << (m - 1)) - 1);
        for (std::size_t i = 1; i < cuts.size(); ++i) EXPECT_LT(cuts[i - 1].mask(), cuts[i].mask());
    }
}

TEST(Schmidt, KnownStates) {
    const Bipartition cut(QuditDims{2, 2}, 1);
    const SchmidtData s = schmidt(phi_plus(), cut);
    EXPECT_EQ(s.rank, 2);
    EXPECT_NEAR(s.coefficients[0], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_TRUE(is_maximally_entangled(phi_plus(), cut));
    EXPECT_TRUE(is_product(PureState::ket("01"), cut));
    EXPECT_DOUBLE_EQ(entanglement_entropy(PureState::ket("01"), cut), 0.0);
    EXPECT_NEAR(entanglement_entropy(phi_plus(), cut), std::log(2.0), 1e-12);
}

TEST(Schmidt, GenuineEntanglement) {
    const PureState ghz = PureState::normalized(QuditDims::qubits(3),
                                                PureState::ket("000").amps() + PureState::ket("111").amps());
    EXPECT_TRUE(is_genuinely_entangled(ghz));
    EXPECT_FALSE(is_genuinely_entangled(tensor_product(PureState::ket("0"), phi_plus())));
}

// Oracle: eigenvalues of the reduced density matrix are the squared coefficients.
TEST(Schmidt, MatchesReducedSpectrum) {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const int da = 2 + t % 2, db = 2 + t % 4;
        const QuditDims dims{da, db};
        const PureState p(dims, testing::random_unit_vector(da * db, rng));
        const auto sd = schmidt(p, Bipartition(dims, 1));
        const auto ev = testing::reduced_spectrum(p.amps(), da, db);
        double total = 0.0;
        for (int i = 0; i < std::min(da, db); ++i) {
            EXPECT_NEAR(sd.coefficients[static_cast<std::size_t>(i)] * sd.coefficients[static_cast<std::size_t>(i)],
                        ev[static_cast<std::size_t>(i)], 1e-12);
            total += ev[static_cast<std::size_t>(i)];
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Schmidt, LocalUnitaryInvariance) {
    Rng rng(5);
    const QuditDims dims{2, 3, 2};
    for (int t = 0; t < 30; ++t) {
        const PureState p(dims, testing::random_unit_vector(12, rng));
        const PureState q(dims, testing::apply_local(testing::random_locals(dims, rng), p.amps()));
        for (const auto& cut : enumerate_cuts(dims)) {
            const auto a = schmidt(p, cut).coefficients, b = schmidt(q, cut).coefficients;
            for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
        }
    }
}

TEST(Reshape, RowsFollowSideA) {
    const QuditDims dims = QuditDims::qubits(3);
    const PureState p = PureState::ket("010");
    const CMatrix m = reshape(p, Bipartition(dims, 5));  // parties A, C | B
    EXPECT_EQ(m.rows(), 4);
    EXPECT_EQ(m(0, 1), cplx(1.0));
}

}  // namespace
}  // namespace ueb
