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


#include "ueb/report.hpp"

#include <cstdio>
#include <sstream>

#include "ueb/slocc.hpp"

namespace ueb {

namespace {

constexpr int kMaxListedComplement = 16;

ReportJson amplitudes(const CVector& v) {
    ReportJson out = ReportJson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ReportJson::array({v[i].real(), v[i].imag()}));
    return out;
}

ReportJson input_section(const StateSet& set, const ReportContext& ctx) {
    ReportJson j;
    j["name"] = set.name();
    j["dims"] = set.dims().dims();
    j["count"] = set.size();
    j["digest"] = ctx.input_digest;
    return j;
}

ReportJson settings_section(const ReportContext& ctx) {
    ReportJson j;
    j["tol"] = ctx.verify.tol.eps();
    j["seed"] = ctx.verify.search.seed;
    j["starts"] = ctx.verify.search.starts;
    j["cut"] = ctx.verify.cut_mask ? ReportJson(*ctx.verify.cut_mask) : ReportJson("default");
    j["require_exact"] = ctx.require_exact;
    return j;
}

ReportJson subspace_verdict_json(const SubspaceVerdict& v, Tolerance tol) {
    ReportJson j;
    j["cut"] = v.cut;
    j["mask"] = v.mask;
    j["status"] = to_string(v.status);
    j["grade"] = to_string(v.grade);
    j["witness"] = v.witness ? amplitudes(canonical_phase(*v.witness, tol).amps()) : ReportJson(nullptr);
    return j;
}

ReportJson verdict_json(const BasisVerdict& v, Outcome shown, Tolerance tol) {
    ReportJson j;
    j["kind"] = to_string(v.kind);
    j["outcome"] = to_string(shown);
    j["grade"] = to_string(v.grade);
    j["reason"] = v.reason;
    j["complement_dim"] = v.complement_dim;
    j["offending_index"] = v.offending_index ? ReportJson(*v.offending_index) : ReportJson(nullptr);
    j["per_cut"] = ReportJson::array();
    for (const auto& c : v.per_cut) j["per_cut"].push_back(subspace_verdict_json(c, tol));
    return j;
}

ReportJson states_section(const StateSet& set, Tolerance tol) {
    const auto cuts = enumerate_cuts(set.dims());
    const bool three_qubits = set.dims() == QuditDims::qubits(3);
    ReportJson out = ReportJson::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        ReportJson s;
        s["index"] = i;
        ReportJson ranks;
        for (const auto& c : cuts) ranks[c.str()] = schmidt(set[i], c, tol).rank;
        s["schmidt_ranks"] = std::move(ranks);
        s["genuinely_entangled"] = is_genuinely_entangled(set[i], tol);
        s["grade"] = to_string(Grade::Exact);
        if (three_qubits) {
            const SloccLabel label = classify_three_qubit(set[i], tol);
            s["slocc"] = {{"label", label.str()}, {"tangle", label.tangle}, {"grade", to_string(Grade::Exact)}};
        }
        out.push_back(std::move(s));
    }
    return out;
}

ReportJson complement_section(const StateSet& set, const BasisVerdict* verdict, Tolerance tol) {
    const Subspace comp = orthogonal_complement(span_of(set, tol));
    ReportJson j;
    j["dim"] = comp.dim();
    if (comp.dim() <= kMaxListedComplement) {
        j["basis"] = ReportJson::array();
        for (int i = 0; i < comp.dim(); ++i) j["basis"].push_back(amplitudes(canonical_phase(comp.state(i), tol).amps()));
    } else {
        j["basis"] = nullptr;
    }
    j["only_product"] = ReportJson::array();
    if (comp.dim() == 0) return j;
    const auto cuts = enumerate_cuts(set.dims());
    const bool reuse = verdict && verdict->kind == BasisKind::UebAllCuts && verdict->per_cut.size() == cuts.size();
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        const SubspaceVerdict v = reuse ? verdict->per_cut[c] : analyze_product_content(comp, cuts[c], tol);
        j["only_product"].push_back({{"cut", v.cut},
                                     {"value", v.status == SubspaceStatus::OnlyProduct},
                                     {"grade", to_string(v.grade)}});
    }
    return j;
}

ReportJson flag_json(const CutFlag& f) {
    ReportJson j;
    j["cut"] = f.cut;
    j["lone_party"] = f.lone_party;
    j["flag"] = f.flag;
    j["grade"] = to_string(f.grade);
    j["selection"] = f.selection;
    j["probabilities"] = f.projection ? ReportJson(f.projection->probabilities) : ReportJson(nullptr);
    return j;
}

ReportJson distinguishability_section(const StateSet& set, const ReportContext& ctx) {
    const Tolerance tol = ctx.verify.tol;
    ReportJson j;
    if (set.size() < 3) {
        j["status"] = "ABSTAIN";
        j["note"] = "fewer than three states";
        return j;
    }
    try {
        if (set.dims() == QuditDims{2, 2}) {
            const Subspace whole(QuditDims{2}, CMatrix::Identity(2, 2));
            CutFlag f;
            f.cut = first_cut(set.dims()).str();
            f.projection = project_two_qubit(set, 0, whole, tol);
            f.flag = walgate_flag(*f.projection, tol);
            for (std::size_t i = 0; i < set.size(); ++i) f.selection.push_back(i);
            j["status"] = "EVALUATED";
            j["per_cut"] = ReportJson::array({flag_json(f)});
        } else if (set.dims() == QuditDims::qubits(3)) {
            j["status"] = "EVALUATED";
            j["per_cut"] = ReportJson::array();
            for (const auto& f : all_cut_indistinguishability_flag(set, ctx.plans, tol)) {
                j["per_cut"].push_back(flag_json(f));
            }
        } else {
            j["status"] = "ABSTAIN";
            j["note"] = "projection reduction applies to 2x2 and 2x2x2 sets only";
        }
    } catch (const std::exception& e) {
        j["status"] = "ERROR";
        j["note"] = e.what();
    }
    return j;
}

ReportJson completion_section(const StateSet& set, SetMode mode, const ReportContext& ctx) {
    ReportJson j;
    j["mode"] = mode == SetMode::Entangled ? "entangled" : "max-entangled";
    const CompletionResult r = completion_search(set, mode, ctx.verify);
    j["found"] = r.found.size();
    j["complement_dim"] = r.complement_dim;
    j["completable"] = to_string(r.completable);
    const char* uncompletable = mode == SetMode::Entangled ? "UCEB" : "UCMEB";
    j["classification"] = r.completable == Completable::Yes ? "COMPLETABLE" : uncompletable;
    j["grade"] = to_string(r.completable == Completable::NoEvidence ? Grade::NumericalEvidence : Grade::Exact);
    j["states"] = ReportJson::array();
    for (const auto& p : r.found) j["states"].push_back(amplitudes(canonical_phase(p, ctx.verify.tol).amps()));
    return j;
}

Outcome shown_outcome(const BasisVerdict& v, const ReportContext& ctx) {
    if (ctx.require_exact && v.grade == Grade::NumericalEvidence) return Outcome::Inconclusive;
    return v.outcome;
}

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Report make_verify_report(const StateSet& set, BasisKind kind, const ReportContext& ctx) {
    const Tolerance tol = ctx.verify.tol;
    const BasisVerdict v = verify_basis(set, kind, ctx.verify);
    Report r;
    r.outcome = shown_outcome(v, ctx);
    r.json["command"] = "verify";
    r.json["input"] = input_section(set, ctx);
    r.json["settings"] = settings_section(ctx);
    r.json["verdict"] = verdict_json(v, *r.outcome, tol);
    r.json["states"] = states_section(set, tol);
    r.json["complement"] = complement_section(set, &v, tol);
    return r;
}

Report make_analyze_report(const StateSet& set, std::optional<BasisKind> kind, const ReportContext& ctx) {
    const Tolerance tol = ctx.verify.tol;
    Report r;
    r.json["command"] = "analyze";
    r.json["input"] = input_section(set, ctx);
    r.json["settings"] = settings_section(ctx);
    std::optional<BasisVerdict> v;
    if (kind) {
        v = verify_basis(set, *kind, ctx.verify);
        r.outcome = shown_outcome(*v, ctx);
        r.json["verdict"] = verdict_json(*v, *r.outcome, tol);
    } else {
        r.json["verdict"] = nullptr;
    }
    r.json["states"] = states_section(set, tol);
    r.json["complement"] = complement_section(set, v ? &*v : nullptr, tol);
    if (set.dims() == QuditDims::qubits(3)) {
        r.json["resource_dimension_flag"] = {{"value", resource_dimension_flag(set, tol)},
                                             {"grade", to_string(Grade::Exact)}};
    }
    r.json["distinguishability"] = distinguishability_section(set, ctx);
    if (ctx.completion) {
        if (r.json["complement"]["dim"].get<int>() == 0) {
            r.json["completion"] = {{"note", "the set already spans the space"}};
        } else {
            r.json["completion"] = completion_section(set, *ctx.completion, ctx);
        }
    }
    return r;
}

namespace {

bool is_scalar_array(const ReportJson& j) {
    for (const auto& e : j) {
        if (e.is_structured() && !(e.is_array() && e.size() == 2 && e[0].is_number())) return false;
    }
    return true;
}

void render(std::ostringstream& out, const ReportJson& j, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = j.is_object() ? it.key() : "-";
        const ReportJson& v = *it;
        if (v.is_object() || (v.is_array() && !v.empty() && !is_scalar_array(v))) {
            out << indent << key << ":\n";
            render(out, v, indent + "  ");
        } else if (v.is_string()) {
            out << indent << key << ": " << v.get<std::string>() << "\n";
        } else {
            out << indent << key << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const ReportJson& j) {
    std::ostringstream out;
    render(out, j, "");
    return out.str();
}

int exit_code(Outcome o) {
    switch (o) {
        case Outcome::Verified:
        case Outcome::CompleteBasis: return 0;
        case Outcome::Refuted: return 1;
        case Outcome::Inconclusive: return 2;
    }
    return 2;
}

}  // namespace ueb
