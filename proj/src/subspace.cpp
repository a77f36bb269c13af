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

#include "ueb/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace ueb {

const char* to_string(Grade g) {
    switch (g) {
        case Grade::Exact: return "EXACT";
        case Grade::NumericalEvidence: return "NUMERICAL_EVIDENCE";
        case Grade::RuleBasedCited: return "RULE_BASED_CITED";
    }
    return "?";
}

const char* to_string(SubspaceStatus s) {
    switch (s) {
        case SubspaceStatus::OnlyProduct: return "ONLY_PRODUCT";
        case SubspaceStatus::ContainsEntangled: return "CONTAINS_ENTANGLED";
        case SubspaceStatus::NoProductFound: return "NO_PRODUCT_FOUND";
        case SubspaceStatus::ProductFound: return "PRODUCT_FOUND";
        case SubspaceStatus::MaxEntangledFound: return "ME_FOUND";
        case SubspaceStatus::NoMaxEntangledFound: return "NO_ME_FOUND";
    }
    return "?";
}

const char* to_string(BasisKind k) {
    switch (k) {
        case BasisKind::Ueb: return "UEB";
        case BasisKind::UebAllCuts: return "UEB_ALL_CUTS";
        case BasisKind::Umeb: return "UMEB";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Verified: return "VERIFIED";
        case Outcome::Refuted: return "REFUTED";
        case Outcome::CompleteBasis: return "COMPLETE_BASIS";
        case Outcome::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(ProductCount c) {
    switch (c) {
        case ProductCount::ZeroImpossible: return "ZERO_IMPOSSIBLE";
        case ProductCount::One: return "ONE";
        case ProductCount::Two: return "TWO";
        case ProductCount::Infinite: return "INFINITE";
    }
    return "?";
}

const char* to_string(Completable c) {
    switch (c) {
        case Completable::Yes: return "YES";
        case Completable::NoExact: return "NO_EXACT";
        case Completable::NoEvidence: return "NO_EVIDENCE";
    }
    return "?";
}

namespace {

void require_nonempty(const Subspace& s, const char* what) {
    if (s.dim() == 0) throw std::invalid_argument(std::string(what) + ": empty subspace");
}

SubspaceVerdict verdict_for(const Bipartition& cut, SubspaceStatus status, Grade grade) {
    SubspaceVerdict v;
    v.mask = cut.mask();
    v.cut = cut.str();
    v.status = status;
    v.grade = grade;
    return v;
}

// Singular values of M(c) for unit c, descending.
Eigen::VectorXd singular_values(const Pencil& pencil, const CVector& c) {
    Eigen::JacobiSVD<CMatrix> svd(pencil.combine(c));
    return svd.singularValues();
}

// Pencil with rows <= cols, as the maximally entangled searches require.
Pencil oriented_pencil(const Subspace& s, const Bipartition& cut) {
    Pencil p(s, cut);
    return p.rows() <= p.cols() ? p : p.transposed();
}

}  // namespace

SubspaceVerdict analyze_product_content(const Subspace& s, const Bipartition& cut, Tolerance tol,
                                        Execution exec) {
    require_nonempty(s, "only_product_across_cut");
    const Pencil pencil(s, cut);
    const kernels::MinorScan scan = kernels::scan_polarization_minors(pencil, exec);
    if (scan.max_abs < tol.eps()) {
        auto v = verdict_for(cut, SubspaceStatus::OnlyProduct, Grade::Exact);
        v.score = scan.max_abs;
        return v;
    }
    CVector c = CVector::Zero(s.dim());
    c[scan.i] = 1.0;
    if (scan.j >= 0) c[scan.j] = 1.0;
    auto v = verdict_for(cut, SubspaceStatus::ContainsEntangled, Grade::Exact);
    v.witness = canonical_phase(s.combine(c), tol);
    v.score = scan.max_abs;
    return v;
}

bool only_product_across_cut(const Subspace& s, const Bipartition& cut, Tolerance tol, Execution exec) {
    return analyze_product_content(s, cut, tol, exec).status == SubspaceStatus::OnlyProduct;
}

std::optional<bool> schmidt_rank_bounded(const Subspace& s, const Bipartition& cut, int max_rank,
                                         Tolerance tol, std::size_t max_points) {
    require_nonempty(s, "schmidt_rank_bounded");
    if (max_rank < 1) throw std::invalid_argument("schmidt_rank_bounded: max_rank must be >= 1");
    if (static_cast<std::size_t>(max_rank) >= std::min(cut.dim_a(), cut.dim_b())) return true;

    const Pencil pencil(s, cut);
    const int k = pencil.size();
    const int degree = max_rank + 1;

    // C(k + degree - 1, degree) lattice points
    double count = 1.0;
    for (int i = 1; i <= degree; ++i) count = count * (k + degree - i) / i;
    if (count > static_cast<double>(max_points)) return std::nullopt;

    std::vector<int> alpha(static_cast<std::size_t>(k), 0);
    // Enumerate compositions of `degree` into k nonnegative parts.
    std::function<bool(int, int)> visit = [&](int pos, int left) -> bool {
        if (pos == k - 1) {
            alpha[static_cast<std::size_t>(pos)] = left;
            CVector c(k);
            for (int i = 0; i < k; ++i) c[i] = static_cast<double>(alpha[static_cast<std::size_t>(i)]);
            const Eigen::VectorXd sv = singular_values(pencil, c);
            return sv[max_rank] < tol.eps() * degree;
        }
        for (int a = left; a >= 0; --a) {
            alpha[static_cast<std::size_t>(pos)] = a;
            if (!visit(pos + 1, left - a)) return false;
        }
        return true;
    };
    return visit(0, degree);
}

SubspaceVerdict find_product_state(const Subspace& s, const Bipartition& cut, const SearchConfig& cfg,
                                   Tolerance tol) {
    require_nonempty(s, "find_product_state");
    const kernels::ProductDefect objective{Pencil(s, cut)};
    const double target = tol.eps() * tol.eps();
    const auto best = kernels::multistart_minimize(objective, s.dim(), cfg, 1e-4 * target);
    if (best.best_start >= 0 && best.best_value < target) {
        PureState w = canonical_phase(s.combine(best.best), tol);
        if (is_product(w, cut, tol)) {
            auto v = verdict_for(cut, SubspaceStatus::ProductFound, Grade::Exact);
            v.witness = std::move(w);
            v.score = best.best_value;
            return v;
        }
    }
    auto v = verdict_for(cut, SubspaceStatus::NoProductFound, Grade::NumericalEvidence);
    v.score = best.best_value;
    return v;
}

SubspaceVerdict find_maximally_entangled(const Subspace& s, const Bipartition& cut,
                                         const SearchConfig& cfg, Tolerance tol) {
    require_nonempty(s, "find_maximally_entangled");
    const auto da = static_cast<int>(std::min(cut.dim_a(), cut.dim_b()));
    const double target = 1.0 / std::sqrt(static_cast<double>(da));

    if (s.dim() == 1) {
        const PureState only = canonical_phase(s.state(0), tol);
        const Eigen::VectorXd sv = singular_values(oriented_pencil(s, cut), CVector::Ones(1));
        const bool me = sv[da - 1] >= target - cfg.tol_me;
        auto v = verdict_for(cut, me ? SubspaceStatus::MaxEntangledFound : SubspaceStatus::NoMaxEntangledFound,
                             Grade::Exact);
        if (me) v.witness = only;
        v.score = sv[da - 1];
        return v;
    }
    if (only_product_across_cut(s, cut, tol, cfg.exec)) {
        return verdict_for(cut, SubspaceStatus::NoMaxEntangledFound, Grade::Exact);
    }
    if (auto bounded = schmidt_rank_bounded(s, cut, da - 1, tol); bounded && *bounded) {
        return verdict_for(cut, SubspaceStatus::NoMaxEntangledFound, Grade::Exact);
    }

    const Pencil pencil = oriented_pencil(s, cut);
    const kernels::MaxEntangledDefect objective{pencil};
    const auto best = kernels::multistart_minimize(objective, s.dim(), cfg, 1e-30);
    const double sigma_min = singular_values(pencil, best.best)[da - 1];
    if (sigma_min >= target - cfg.tol_me) {
        auto v = verdict_for(cut, SubspaceStatus::MaxEntangledFound, Grade::Exact);
        v.witness = canonical_phase(s.combine(best.best), tol);
        v.score = sigma_min;
        return v;
    }
    auto v = verdict_for(cut, SubspaceStatus::NoMaxEntangledFound, Grade::NumericalEvidence);
    v.score = sigma_min;
    return v;
}

namespace {

struct Candidate {
    CVector coeffs;
    bool entangled = false;
    bool feasible = false;
    double entropy = 0.0;
};

OrthogonalSet deflate_max_entangled(Subspace cur, const Bipartition& cut, const SearchConfig& cfg,
                                    Tolerance tol) {
    OrthogonalSet out;
    while (cur.dim() > 0) {
        const SubspaceVerdict v = find_maximally_entangled(cur, cut, cfg, tol);
        if (v.status != SubspaceStatus::MaxEntangledFound) {
            out.exact = v.grade == Grade::Exact;
            break;
        }
        const CVector coeffs = cur.basis().adjoint() * v.witness->amps();
        out.states.push_back(*v.witness);
        cur = complement_within(cur, coeffs);
    }
    if (cur.dim() == 0) out.exact = true;
    out.remaining_dim = cur.dim();
    return out;
}

// Entangled vectors are dense in any subspace that is not only-product, so
// candidates are random vectors of the subspace. A candidate is feasible
// when what remains after removing it still holds an entangled vector (or
// nothing at all); among feasible candidates the most entangled one wins.
OrthogonalSet deflate_entangled(Subspace cur, const Bipartition& cut, const SearchConfig& cfg,
                                Tolerance tol) {
    OrthogonalSet out;
    for (int round = 0; cur.dim() > 0; ++round) {
        if (only_product_across_cut(cur, cut, tol, cfg.exec)) {
            out.exact = true;
            break;
        }
        const std::uint64_t round_seed = kernels::start_seed(cfg.seed, round);
        const Eigen::Index k = cur.dim();
        auto candidates = kernels::map_indexed(cfg.starts, cfg.exec, [&](int start) {
            std::mt19937_64 rng(kernels::start_seed(round_seed, start));
            Candidate c;
            c.coeffs = kernels::random_unit(k, rng);
            const PureState p = cur.combine(c.coeffs);
            c.entangled = !is_product(p, cut, tol);
            c.entropy = entanglement_entropy(p, cut);
            c.feasible = k == 1 || !only_product_across_cut(complement_within(cur, c.coeffs), cut, tol,
                                                            Execution::Serial);
            return c;
        });
        const Candidate* pick = nullptr;
        for (const auto& c : candidates) {
            if (c.entangled && c.feasible && (!pick || c.entropy > pick->entropy)) pick = &c;
        }
        if (!pick) {
            for (const auto& c : candidates) {
                if (c.entangled && (!pick || c.entropy > pick->entropy)) pick = &c;
            }
        }
        if (!pick) break;  // search failure: evidence only
        out.states.push_back(canonical_phase(cur.combine(pick->coeffs), tol));
        cur = complement_within(cur, pick->coeffs);
    }
    if (cur.dim() == 0) out.exact = true;
    out.remaining_dim = cur.dim();
    return out;
}

}  // namespace

OrthogonalSet max_orthogonal_set(const Subspace& s, const Bipartition& cut, SetMode mode,
                                 const SearchConfig& cfg, Tolerance tol) {
    require_nonempty(s, "max_orthogonal_set");
    return mode == SetMode::MaxEntangled ? deflate_max_entangled(s, cut, cfg, tol)
                                         : deflate_entangled(s, cut, cfg, tol);
}

int max_schmidt_rank_in_subspace(const Subspace& s, const Bipartition& cut, const SearchConfig& cfg,
                                 Tolerance tol) {
    require_nonempty(s, "max_schmidt_rank_in_subspace");
    const Pencil pencil(s, cut);
    const Eigen::Index k = s.dim();
    const int ceiling = static_cast<int>(std::min(cut.dim_a(), cut.dim_b()));
    const auto ranks = kernels::map_indexed(cfg.starts, cfg.exec, [&](int start) {
        std::mt19937_64 rng(kernels::start_seed(cfg.seed, start));
        const Eigen::VectorXd sv = singular_values(pencil, kernels::random_unit(k, rng));
        return static_cast<int>((sv.array() > tol.eps()).count());
    });
    int best = ranks.empty() ? 1 : *std::max_element(ranks.begin(), ranks.end());
    while (best < ceiling) {
        const kernels::NegSingularValue objective(pencil, best + 1);
        const auto r = kernels::multistart_minimize(objective, k, cfg);
        if (-r.best_value <= tol.eps()) break;
        ++best;
    }
    return best;
}

DetQuadratic det_quadratic(const Subspace& s) {
    if (!(s.dims() == QuditDims{2, 2}) || s.dim() != 2) {
        throw std::invalid_argument("count_product_states_2d_2x2: needs a 2-dimensional subspace of 2x2");
    }
    const Pencil p(s, first_cut(s.dims()));
    const cplx a = p.slice(0).determinant();
    const cplx g = p.slice(1).determinant();
    const cplx b = (p.slice(0) + p.slice(1)).determinant() - a - g;
    return {a, b, g};
}

ProductCount count_product_states_2d_2x2(const Subspace& s, Tolerance tol, double tol_disc) {
    const DetQuadratic q = det_quadratic(s);
    const double scale = std::max({std::abs(q.alpha), std::abs(q.beta), std::abs(q.gamma)});
    if (scale < tol.eps()) return ProductCount::Infinite;
    const cplx a = q.alpha / scale, b = q.beta / scale, g = q.gamma / scale;
    const cplx disc = b * b - 4.0 * a * g;
    return std::abs(disc) < tol_disc ? ProductCount::One : ProductCount::Two;
}

namespace {

std::vector<Bipartition> cuts_for(BasisKind kind, const QuditDims& dims, const VerifyOptions& opts) {
    if (kind == BasisKind::UebAllCuts) return enumerate_cuts(dims);
    return {Bipartition(dims, opts.cut_mask.value_or(1u))};
}

}  // namespace

BasisVerdict verify_basis(const StateSet& set, BasisKind kind, const VerifyOptions& opts) {
    const Tolerance tol = opts.tol;
    BasisVerdict out;
    out.kind = kind;
    const auto cuts = cuts_for(kind, set.dims(), opts);
    const Bipartition& cut = cuts.front();

    for (std::size_t i = 0; i < set.size(); ++i) {
        bool ok = false;
        const char* need = "";
        switch (kind) {
            case BasisKind::Ueb:
                ok = !is_product(set[i], cut, tol);
                need = "entangled across the cut";
                break;
            case BasisKind::UebAllCuts:
                ok = is_genuinely_entangled(set[i], tol);
                need = "genuinely entangled";
                break;
            case BasisKind::Umeb:
                ok = is_maximally_entangled(set[i], cut, tol);
                need = "maximally entangled across the cut";
                break;
        }
        if (!ok) {
            out.outcome = Outcome::Refuted;
            out.offending_index = i;
            out.reason = "state " + std::to_string(i) + " is not " + need;
            out.complement_dim = static_cast<int>(set.dims().total() - set.size());
            return out;
        }
    }

    const Subspace complement = orthogonal_complement(span_of(set, tol));
    out.complement_dim = complement.dim();
    if (complement.dim() == 0) {
        out.outcome = Outcome::CompleteBasis;
        out.reason = "the states span the whole space";
        return out;
    }

    if (kind == BasisKind::Umeb) {
        SubspaceVerdict v = find_maximally_entangled(complement, cut, opts.search, tol);
        out.grade = v.grade;
        out.outcome = v.status == SubspaceStatus::MaxEntangledFound ? Outcome::Refuted : Outcome::Verified;
        out.reason = out.outcome == Outcome::Refuted ? "complement contains a maximally entangled state"
                                                     : "complement holds no maximally entangled state";
        out.per_cut.push_back(std::move(v));
        return out;
    }

    // Cuts are independent; evaluate them concurrently and keep cut order.
    out.per_cut = kernels::map_indexed(static_cast<int>(cuts.size()), opts.search.exec, [&](int c) {
        return analyze_product_content(complement, cuts[static_cast<std::size_t>(c)], tol, Execution::Serial);
    });
    out.outcome = Outcome::Verified;
    out.reason = "complement holds only product states across every checked cut";
    for (const auto& v : out.per_cut) {
        if (v.status == SubspaceStatus::ContainsEntangled) {
            out.outcome = Outcome::Refuted;
            out.reason = "complement contains a state entangled across " + v.cut;
            break;
        }
    }
    return out;
}

CompletionResult completion_search(const StateSet& set, SetMode mode, const VerifyOptions& opts) {
    const Subspace complement = orthogonal_complement(span_of(set, opts.tol));
    if (complement.dim() == 0) throw std::invalid_argument("completion_search: the basis is already complete");
    const Bipartition cut(set.dims(), opts.cut_mask.value_or(1u));
    OrthogonalSet found = max_orthogonal_set(complement, cut, mode, opts.search, opts.tol);
    CompletionResult out;
    out.complement_dim = complement.dim();
    out.found = std::move(found.states);
    if (static_cast<int>(out.found.size()) == complement.dim()) {
        out.completable = Completable::Yes;
    } else {
        out.completable = found.exact ? Completable::NoExact : Completable::NoEvidence;
    }
    return out;
}

}  // namespace ueb
