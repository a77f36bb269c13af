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


#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle_suite.hpp"
#include "test_util.hpp"
#include "ueb/constructions.hpp"
#include "ueb/locc.hpp"
#include "ueb/slocc.hpp"

namespace {

using namespace ueb;
using testing::Rng;

struct Check {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

Subspace complement_of(const StateSet& s) { return orthogonal_complement(span_of(s)); }

bool exact_all_cuts(const StateSet& s) {
    const auto v = verify_basis(s, BasisKind::UebAllCuts);
    if (v.outcome != Outcome::Verified || v.grade != Grade::Exact) return false;
    for (const auto& c : v.per_cut)
        if (c.grade != Grade::Exact) return false;
    return v.per_cut.size() == enumerate_cuts(s.dims()).size();
}

Check two_qubit_sets() {
    Check c;
    const StateSet a = two_qubit_ueb_real(), b = two_qubit_ueb_fourier();
    for (const StateSet* s : {&a, &b}) {
        const auto v = verify_basis(*s, BasisKind::Ueb);
        c.require(v.outcome == Outcome::Verified && v.grade == Grade::Exact, s->name() + " not verified exactly");
        const std::vector<PureState> ket11{PureState::ket("11")};
        c.require(v.complement_dim == 1 && span_equal(complement_of(*s), span_of(ket11)),
                  s->name() + " complement is not |11>");
    }
    c.require(span_equal(span_of(a), span_of(b), Tolerance(1e-9)), "spans differ");
    return c;
}

Check general_two_qubit() {
    Check c;
    Rng rng(2026);
    for (int t = 0; t < 200 && c.ok; ++t) {
        const CMatrix ua = testing::random_unitary(2, rng), ub = testing::random_unitary(2, rng);
        const QubitBasis a{ua.col(0), ua.col(1)}, b{ub.col(0), ub.col(1)};
        const double phase = std::uniform_real_distribution<double>(0.0, 2 * M_PI)(rng);
        const QubitBasis bp{ub.col(0), std::polar(1.0, phase) * ub.col(1)};
        const GeneralUeb g = two_qubit_ueb_general(a, b, bp);
        c.require(g.set.size() == 3, "size != 3");
        c.require(g.verdict.outcome == Outcome::Verified, "instance " + std::to_string(t) + " not verified");
        const Subspace comp = complement_of(g.set);
        c.require(comp.dim() == 1 && is_product(comp.state(0), Bipartition(g.set.dims(), 1)),
                  "complement not a product ray at instance " + std::to_string(t));
        const Subspace whole(QuditDims{2}, CMatrix::Identity(2, 2));
        c.require(walgate_flag(project_two_qubit(g.set, 0, whole)), "walgate flag false");
    }
    return c;
}

Check embedded_meb() {
    Check c;
    for (int d = 2; d <= 4; ++d) {
        for (int n = 1; n < d; ++n) {
            const StateSet s = embed_meb(d, n);
            const auto v = verify_basis(s, BasisKind::Umeb);
            const std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
            c.require(v.outcome == Outcome::Verified && v.grade == Grade::Exact, tag + " not verified exactly");
            const Subspace comp = complement_of(s);
            const Bipartition cut(s.dims(), 1);
            c.require(schmidt_rank_bounded(comp, cut, n) == std::optional<bool>(true), tag + " rank exceeds n");
            c.require(n == 1 || schmidt_rank_bounded(comp, cut, n - 1) == std::optional<bool>(false),
                      tag + " rank below n");
        }
    }
    return c;
}

Check extension_completion() {
    Check c;
    const StateSet s = find_catalog_entry("eq4-meb-2x4")->build();
    c.require(s.size() == 8, "size != 8");
    const auto v = verify_basis(s, BasisKind::Umeb);
    c.require(v.outcome == Outcome::CompleteBasis, "not a complete basis");
    const Bipartition cut(s.dims(), 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        c.require(is_maximally_entangled(s[i], cut), "state not maximally entangled");
        for (std::size_t j = i + 1; j < s.size(); ++j) c.require(std::abs(inner(s[i], s[j])) < 1e-9, "overlap");
    }
    return c;
}

Check bell_minus_first() {
    Check c;
    const StateSet s = bell_minus_first_in_2x3();
    const Subspace comp = complement_of(s);
    const Bipartition cut(s.dims(), 1);
    SearchConfig cfg;
    cfg.starts = 64;
    const auto me = max_orthogonal_set(comp, cut, SetMode::MaxEntangled, cfg);
    c.require(me.states.size() == 1, "max-entangled set size " + std::to_string(me.states.size()));
    if (!me.states.empty()) {
        const double r = 1 / std::sqrt(2.0);
        CVector phi = CVector::Zero(6);
        phi[0] = phi[4] = r;
        c.require(fidelity(me.states[0], PureState(s.dims(), phi)) > 1 - 1e-9, "witness is not phi+");
    }
    const auto ent = max_orthogonal_set(comp, cut, SetMode::Entangled, cfg);
    c.require(ent.states.size() == 3, "entangled set size " + std::to_string(ent.states.size()));
    std::vector<PureState> all = s.states();
    all.insert(all.end(), ent.states.begin(), ent.states.end());
    c.require(verify_basis(StateSet(s.dims(), all), BasisKind::Ueb).outcome == Outcome::CompleteBasis,
              "union is not a complete entangled basis");
    return c;
}

Check w_ueb() {
    Check c;
    const StateSet s = three_qubit_w_ueb();
    c.require(exact_all_cuts(s), "not all-cut exact");
    c.require(s.size() == 6, "size != 6");
    for (const auto& p : s.states()) {
        c.require(is_genuinely_entangled(p), "not genuinely entangled");
        const SloccLabel l = classify_three_qubit(p);
        c.require(l.tangle < kTangleTol && l.cls == SloccClass::WClass, "label " + l.str());
    }
    return c;
}

Check mixed_ueb() {
    Check c;
    const StateSet s = three_qubit_mixed_ueb();
    c.require(exact_all_cuts(s), "not all-cut exact");
    int ghz = 0, w = 0;
    for (const auto& p : s.states()) {
        const SloccLabel l = classify_three_qubit(p);
        if (l.cls == SloccClass::GhzClass) {
            ++ghz;
            c.require(std::abs(l.tangle - 1) < 1e-8, "GHZ tangle off");
        }
        w += l.cls == SloccClass::WClass;
    }
    c.require(ghz == 4 && w == 3, "labels " + std::to_string(ghz) + " GHZ / " + std::to_string(w) + " W");
    c.require(resource_dimension_flag(s), "resource flag false");
    const std::vector<double> expected{1.0, 1.0, 5.0 / 6.0};
    for (const StateSet& t : {s, s.subset(std::vector<std::size_t>{0, 1, 2, 3, 4})}) {
        const auto flags = all_cut_indistinguishability_flag(t);
        c.require(flags.size() == 3, "expected three cut flags");
        for (const auto& f : flags) {
            c.require(f.flag && f.projection, "flag false on " + f.cut);
            if (!f.projection) continue;
            for (std::size_t i = 0; i < 3; ++i)
                c.require(std::abs(f.projection->probabilities[i] - expected[i]) < 1e-9, "probability off on " + f.cut);
        }
    }
    return c;
}

Check cardinalities() {
    Check c;
    c.require(three_qubit_w_ueb().size() == 6, "W set size");
    c.require(three_qubit_mixed_ueb().size() == 7, "mixed set size");
    return c;
}

Check n_qubit_generator() {
    Check c;
    const StateSet gen = n_qubit_ueb(4, CoeffVariant::HadamardIfPowerOfTwo);
    const StateSet listing = four_qubit_ueb_listing();
    const std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5, 6, 7, 12, 13, 14, 8, 9, 10, 11};
    c.require(gen.size() == listing.size(), "N=4 size");
    for (std::size_t i = 0; i < gen.size() && c.ok; ++i)
        c.require(fidelity(gen[i], listing[perm[i]]) > 1 - 1e-12, "N=4 state " + std::to_string(i));
    for (int n : {5, 6}) c.require(exact_all_cuts(n_qubit_ueb(n)), "N=" + std::to_string(n) + " not all-cut exact");
    return c;
}

Check range_witness() {
    Check c;
    for (int n = 3; n <= 8; ++n) {
        c.require(ghz_w_range_witness(n).succeeds(), "witness fails at N=" + std::to_string(n));
        const CMatrix rho = partial_trace(PureState(QuditDims::qubits(n), w_state(n)), {0, 1});
        c.require((rho - reduced_w_closed_form(n)).cwiseAbs().maxCoeff() < 1e-8,
                  "closed form off at N=" + std::to_string(n));
    }
    return c;
}

Check oracle_equivalence() {
    Check c;
    const auto op = testing::only_product_suite(500, 11, 16);
    c.require(op.disagreements == 0, "only-product: " + op.first_failure);
    const auto cnt = testing::count_suite(500, 12);
    c.require(cnt.disagreements == 0, "count: " + cnt.first_failure);
    c.require(op.trials == 500 && cnt.trials == 500, "suite did not run every trial");
    c.require(op.positives > 0 && op.positives < op.trials, "only-product suite is one-sided");
    c.require(cnt.positives > 0 && cnt.positives < cnt.trials, "count suite is one-sided");
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "two-qubit UEB sets", 1, two_qubit_sets},
        {2, "general two-qubit family", 10, general_two_qubit},
        {3, "embedded MEB subsets", 10, embedded_meb},
        {4, "2x4 MEB extension", 10, extension_completion},
        {5, "Bell-minus-first completion", 5, bell_minus_first},
        {6, "three-qubit W basis", 10, w_ueb},
        {7, "three-qubit mixed basis", 10, mixed_ueb},
        {8, "three-qubit cardinalities", 10, cardinalities},
        {9, "n-qubit generator", 60, n_qubit_generator},
        {10, "GHZ/W range witness", 10, range_witness},
        {11, "oracle equivalence", 600, oracle_equivalence},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.ok && secs > cr.budget_s) {
            c.ok = false;
            c.note = "over time budget";
        }
        failed += !c.ok;
        std::printf("[%s] criterion %2d  %-30s %8.3fs%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    c.note.empty() ? "" : "  ", c.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
