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

namespace ueb {
namespace {

using testing::Rng;

Subspace complement(const StateSet& s) { return orthogonal_complement(span_of(s)); }
Subspace ray(const char* bits) {
    const std::vector<PureState> v{PureState::ket(bits)};
    return span_of(v);
}

TEST(TwoQubit, RealAndFourierSets) {
    const StateSet a = two_qubit_ueb_real(), b = two_qubit_ueb_fourier();
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(span_equal(complement(a), ray("11")));
    EXPECT_TRUE(span_equal(span_of(a), span_of(b)));
    const Bipartition cut(b.dims(), 1);
    for (const auto& p : b.states()) {
        EXPECT_NEAR(entanglement_entropy(p, cut), entanglement_entropy(b[0], cut), 1e-12);
    }
}

TEST(TwoQubit, GeneralWithIdentityLocalsIsFourier) {
    const auto c = QubitBasis::computational();
    const GeneralUeb g = two_qubit_ueb_general(c, c, c);
    EXPECT_TRUE(g.gated);
    const StateSet f = two_qubit_ueb_fourier();
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LT((canonical_phase(g.set[i]).amps() - canonical_phase(f[i]).amps()).norm(), 1e-15);
    }
}

TEST(TwoQubit, GeneralWithHadamardFirstParty) {
    const double r = 1 / std::sqrt(2.0);
    QubitBasis pm{CVector(2), CVector(2)};
    pm.first << r, r;
    pm.second << r, -r;
    const auto c = QubitBasis::computational();
    const GeneralUeb g = two_qubit_ueb_general(pm, c, c);
    EXPECT_EQ(g.verdict.outcome, Outcome::Verified);
    const std::vector<PureState> minus_one{
        PureState(QuditDims{2, 2}, kron(pm.second, c.second))};
    EXPECT_TRUE(span_equal(complement(g.set), span_of(minus_one)));
}

TEST(TwoQubit, GeneralRejectsNonOrthonormal) {
    QubitBasis bad{CVector(2), CVector(2)};
    bad.first << 1, 0;
    bad.second << 1, 0;
    const auto c = QubitBasis::computational();
    EXPECT_THROW(two_qubit_ueb_general(bad, c, c), std::invalid_argument);
}

TEST(Meb, BellBasis) {
    for (int d = 2; d <= 4; ++d) {
        const StateSet s = bell_meb(d);
        EXPECT_EQ(s.size(), static_cast<std::size_t>(d * d));
        for (const auto& p : s.states()) EXPECT_TRUE(is_maximally_entangled(p, Bipartition(s.dims(), 1)));
    }
    EXPECT_THROW(bell_meb(1), std::invalid_argument);
    // d = 2 ordering: phi+, phi-, psi+, psi-.
    const StateSet b = bell_meb(2);
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(b[1][3].real(), -r, 1e-15);
    EXPECT_NEAR(b[2][1].real(), r, 1e-15);
    EXPECT_NEAR(b[3][2].real(), -r, 1e-15);
}

TEST(Meb, Embedding) {
    EXPECT_EQ(embed_meb(2, 1).dims(), (QuditDims{2, 3}));
    EXPECT_EQ(embed_meb(3, 2).size(), 9u);
    EXPECT_EQ(embed_meb(3, 2).dims(), (QuditDims{3, 5}));
    EXPECT_THROW(embed_meb(2, 2), std::invalid_argument);
    EXPECT_THROW(embed_meb(3, 0), std::invalid_argument);
}

TEST(Meb, ExtensionCompletion) {
    CVector x = CVector::Zero(4), xp = CVector::Zero(4);
    x[2] = 1.0;
    xp[3] = 1.0;
    const StateSet ext = meb_extension_completion(x, xp);
    EXPECT_EQ(ext.size(), 4u);
    const StateSet bell = find_catalog_entry("eq4-meb-2x4")->build();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 4; j < 8; ++j) EXPECT_LT(std::abs(inner(bell[i], bell[j])), 1e-15);

    CVector bad = CVector::Zero(4);
    bad[0] = 1.0;
    EXPECT_THROW(meb_extension_completion(bad, xp), std::invalid_argument);
}

TEST(Meb, ExtensionCompletionRotatedPair) {
    Rng rng(17);
    const CMatrix u = testing::random_unitary(2, rng);
    CVector x = CVector::Zero(4), xp = CVector::Zero(4);
    x.tail(2) = u.col(0);
    xp.tail(2) = u.col(1);
    EXPECT_NO_THROW(meb_extension_completion(x, xp));
}

TEST(ThreeQubit, Complements) {
    const QuditDims q3 = QuditDims::qubits(3);
    const std::vector<PureState> tail{PureState::ket("011"), PureState::ket("111")};
    EXPECT_TRUE(span_equal(complement(three_qubit_w_ueb()), span_of(tail)));
    EXPECT_TRUE(span_equal(complement(three_qubit_mixed_ueb()), ray("111")));
    EXPECT_EQ(three_qubit_mixed_ueb().size(), 7u);
    EXPECT_EQ(three_qubit_w_ueb().dims(), q3);
}

TEST(Superposition, DftMatchesMixedTail) {
    const StateSet w = dft_superposition({"001", "010", "100"});
    const StateSet mixed = three_qubit_mixed_ueb();
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT((w[i].amps() - mixed[4 + i].amps()).norm(), 1e-15);
    const StateSet four = dft_superposition({"0001", "0010", "0100", "1000"});
    const StateSet listing = four_qubit_ueb_listing();
    const std::vector<std::size_t> first{0, 1, 2, 3};
    EXPECT_TRUE(span_equal(span_of(four), span_of(listing.subset(first))));
    EXPECT_EQ(dft_superposition({"01"}).size(), 1u);
    EXPECT_THROW(dft_superposition({"01", "01"}), std::invalid_argument);
    EXPECT_THROW(hadamard_superposition({"001", "010", "100"}), std::invalid_argument);
}

TEST(Superposition, GramIsIdentity) {
    const StateSet s = dft_superposition({"00011", "00101", "01001", "10001", "00110"});
    const CMatrix g = s.matrix().adjoint() * s.matrix();
    EXPECT_LT((g - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NQubit, CountsAndComplement) {
    for (int n = 4; n <= 6; ++n) {
        const StateSet s = n_qubit_ueb(n);
        EXPECT_EQ(s.size(), (std::size_t{1} << n) - 1);
        const Subspace c = complement(s);
        ASSERT_EQ(c.dim(), 1);
        EXPECT_GT(fidelity(c.state(0), PureState::ket(std::string(static_cast<std::size_t>(n), '1'))), 1 - 1e-12);
        for (const auto& cut : enumerate_cuts(s.dims())) EXPECT_TRUE(only_product_across_cut(c, cut));
    }
    EXPECT_THROW(n_qubit_ueb(3), std::invalid_argument);
}

TEST(NQubit, HadamardVariantMatchesListing) {
    const StateSet gen = n_qubit_ueb(4, CoeffVariant::HadamardIfPowerOfTwo);
    const StateSet listing = four_qubit_ueb_listing();
    // Generator order: W block, complement block, gadget, pairs; listing has pairs before the gadget.
    const std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5, 6, 7, 12, 13, 14, 8, 9, 10, 11};
    for (std::size_t i = 0; i < gen.size(); ++i) EXPECT_GT(fidelity(gen[i], listing[perm[i]]), 1 - 1e-12) << i;
}

TEST(Catalog, EntriesVerifyAsDeclared) {
    for (const auto& e : catalog()) {
        const StateSet s = e.build();
        EXPECT_EQ(s.size(), e.count) << e.name;
        EXPECT_EQ(s.dims(), e.dims) << e.name;
        const auto v = verify_basis(s, e.kind);
        EXPECT_EQ(v.outcome, e.expected) << e.name;
        EXPECT_EQ(v.grade, Grade::Exact) << e.name;
    }
    EXPECT_EQ(find_catalog_entry("nope"), nullptr);
}

}  // namespace
}  // namespace ueb
