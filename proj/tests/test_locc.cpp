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
#include "ueb/constructions.hpp"
#include "ueb/locc.hpp"

namespace ueb {
namespace {

using testing::Rng;

TEST(Projection, MixedUebFirstCut) {
    const StateSet mixed = three_qubit_mixed_ueb();
    const std::vector<std::size_t> sel{0, 1, 4};
    const ProjectionResult r = project_two_qubit(mixed.subset(sel), 0, default_plane());
    ASSERT_EQ(r.probabilities.size(), 3u);
    EXPECT_NEAR(r.probabilities[0], 1.0, 1e-12);
    EXPECT_NEAR(r.probabilities[1], 1.0, 1e-12);
    EXPECT_NEAR(r.probabilities[2], 5.0 / 6.0, 1e-12);
    EXPECT_TRUE(r.orthogonal);
    EXPECT_TRUE(walgate_flag(r));
    // Oracle: direct SVD of the renormalized projected W state.
    Eigen::JacobiSVD<CMatrix> svd(testing::as_matrix(r.projected[2].amps(), 2, 2));
    EXPECT_NEAR(svd.singularValues()[0], 2 / std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(svd.singularValues()[1], 1 / std::sqrt(5.0), 1e-12);
}

TEST(Projection, SecondPartyGhzSelection) {
    const StateSet mixed = three_qubit_mixed_ueb();
    const std::vector<std::size_t> sel{0, 2, 4};
    const ProjectionResult r = project_two_qubit(mixed.subset(sel), 1, default_plane());
    EXPECT_TRUE(r.orthogonal);
    EXPECT_TRUE(walgate_flag(r));
}

TEST(Projection, VanishingIsAnError) {
    const StateSet s(QuditDims::qubits(3), {PureState::ket("000")});
    CMatrix b = CMatrix::Zero(4, 2);
    b(1, 0) = 1.0;
    b(2, 1) = 1.0;
    EXPECT_THROW(project_two_qubit(s, 0, Subspace(QuditDims{2, 2}, b)), VanishingProjection);
}

TEST(Projection, OrthogonalityPreservedWhenInsideRange) {
    // All but one state inside the range of 1 (x) P: projections stay orthogonal.
    Rng rng(71);
    const QuditDims q3 = QuditDims::qubits(3);
    const Subspace plane(QuditDims{2, 2}, testing::random_orthonormal(4, 2, rng));
    for (int t = 0; t < 50; ++t) {
        CMatrix inside(8, 3);
        for (int j = 0; j < 3; ++j) {
            CVector v = CVector::Zero(8);
            const CVector c = testing::gaussian_vector(4, rng);
            for (int a = 0; a < 2; ++a) v.segment(4 * a, 4) = plane.basis() * c.segment(2 * a, 2);
            inside.col(j) = v;
        }
        inside.col(2) += 0.5 * testing::gaussian_vector(8, rng);
        const CMatrix q = testing::orthonormal_columns(inside);
        std::vector<PureState> states;
        for (int j = 0; j < 3; ++j) states.emplace_back(q3, q.col(j));
        const ProjectionResult r = project_two_qubit(StateSet(q3, std::move(states)), 0, plane);
        EXPECT_TRUE(r.orthogonal) << t;
    }
}

TEST(Projection, ProbabilitiesSumToPlaneTrace) {
    // Over a complete basis, sum of projection probabilities = tr(1 (x) P) = 4.
    Rng rng(72);
    const QuditDims q3 = QuditDims::qubits(3);
    const Subspace plane(QuditDims{2, 2}, testing::random_orthonormal(4, 2, rng));
    const CMatrix u = testing::random_unitary(8, rng);
    std::vector<PureState> states;
    for (int j = 0; j < 8; ++j) states.emplace_back(q3, u.col(j));
    const ProjectionResult r = project_two_qubit(StateSet(q3, std::move(states)), 2, plane);
    double total = 0.0;
    for (double p : r.probabilities) total += p;
    EXPECT_NEAR(total, 4.0, 1e-12);
}

TEST(Walgate, Examples) {
    const QuditDims q2{2, 2};
    const Subspace whole(QuditDims{2}, CMatrix::Identity(2, 2));
    const StateSet products(q2, {PureState::ket("00"), PureState::ket("01"), PureState::ket("10")});
    EXPECT_FALSE(walgate_flag(project_two_qubit(products, 0, whole)));
    EXPECT_TRUE(walgate_flag(project_two_qubit(two_qubit_ueb_fourier(), 0, whole)));
    const StateSet two(q2, {PureState::ket("00"), PureState::ket("01")});
    EXPECT_THROW(walgate_flag(project_two_qubit(two, 0, whole)), std::invalid_argument);
}

TEST(AllCuts, MixedUebAndPrefix) {
    const StateSet mixed = three_qubit_mixed_ueb();
    const std::vector<std::vector<std::size_t>> expected{{0, 1, 4}, {0, 2, 4}, {0, 3, 4}};
    for (std::size_t size : {std::size_t{7}, std::size_t{5}}) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        const auto flags = all_cut_indistinguishability_flag(mixed.subset(idx));
        ASSERT_EQ(flags.size(), 3u);
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_TRUE(flags[c].flag);
            EXPECT_EQ(flags[c].selection, expected[c]);
            EXPECT_EQ(flags[c].grade, Grade::RuleBasedCited);
            EXPECT_NEAR(flags[c].projection->probabilities[2], 5.0 / 6.0, 1e-12);
        }
    }
}

TEST(AllCuts, ExplicitSelection) {
    std::map<int, CutPlan> plans;
    plans[0].selection = std::vector<std::size_t>{0, 1, 4};
    const auto flags = all_cut_indistinguishability_flag(three_qubit_mixed_ueb(), plans);
    EXPECT_TRUE(flags[0].flag);
    plans[0].selection = std::vector<std::size_t>{0, 2, 4};
    EXPECT_THROW(all_cut_indistinguishability_flag(three_qubit_mixed_ueb(), plans), VanishingProjection);
}

TEST(AllCuts, Errors) {
    const StateSet one(QuditDims::qubits(3), {PureState::ket("000")});
    EXPECT_THROW(all_cut_indistinguishability_flag(one), std::invalid_argument);
    EXPECT_THROW(all_cut_indistinguishability_flag(two_qubit_ueb_real()), DimensionMismatch);
}

}  // namespace
}  // namespace ueb
