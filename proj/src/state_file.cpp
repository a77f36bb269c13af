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


#include "ueb/state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ueb {

using nlohmann::json;

namespace {

CVector parse_vector(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + ": expected a nonempty amplitude list");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& a = j[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw InputError(std::string(what) + ": amplitudes must be [re, im] pairs");
        }
        v[static_cast<Eigen::Index>(i)] = cplx(a[0].get<double>(), a[1].get<double>());
    }
    return v;
}

nlohmann::ordered_json dump_vector(const CVector& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(nlohmann::ordered_json::array({v[i].real(), v[i].imag()}));
    return out;
}

CVector unit_or_reject(const CVector& v, std::size_t index) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > 1e-6) {
        throw InputError("state " + std::to_string(index) + " has norm " + std::to_string(n) +
                         ", not within 1e-6 of 1");
    }
    return v / n;
}

}  // namespace

StateFile parse_state_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("state file must be a JSON object");
    StateFile f;
    try {
        f.name = j.value("name", std::string());
        if (!j.contains("dims") || !j.contains("states")) throw InputError("state file needs \"dims\" and \"states\"");
        f.dims = j.at("dims").get<std::vector<int>>();
        if (!j.at("states").is_array()) throw InputError("\"states\" must be a list");
        for (const json& s : j.at("states")) f.states.push_back(parse_vector(s, "states"));
        if (j.contains("kind")) f.kind = j.at("kind").get<std::string>();
        if (j.contains("planes")) {
            for (const json& p : j.at("planes")) {
                PlaneSpec spec;
                spec.lone_party = p.at("lone_party").get<int>();
                for (const json& s : p.at("states")) spec.states.push_back(parse_vector(s, "planes"));
                if (p.contains("selection")) spec.selection = p.at("selection").get<std::vector<std::size_t>>();
                f.planes.push_back(std::move(spec));
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad state file: ") + e.what());
    }
    return f;
}

StateFile load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state_file(ss.str());
}

std::string dump_state_file(const StateFile& file) {
    nlohmann::ordered_json j;
    j["name"] = file.name;
    j["dims"] = file.dims;
    if (file.kind) j["kind"] = *file.kind;
    j["states"] = nlohmann::ordered_json::array();
    for (const auto& s : file.states) j["states"].push_back(dump_vector(s));
    if (!file.planes.empty()) {
        j["planes"] = nlohmann::ordered_json::array();
        for (const auto& p : file.planes) {
            nlohmann::ordered_json pj;
            pj["lone_party"] = p.lone_party;
            pj["states"] = nlohmann::ordered_json::array();
            for (const auto& s : p.states) pj["states"].push_back(dump_vector(s));
            if (p.selection) pj["selection"] = *p.selection;
            j["planes"].push_back(std::move(pj));
        }
    }
    return j.dump(1) + "\n";
}

void save_state_file(const StateFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << dump_state_file(file);
}

StateFile to_state_file(const StateSet& set) {
    StateFile f;
    f.name = set.name();
    f.dims = set.dims().dims();
    for (const auto& s : set.states()) f.states.push_back(s.amps());
    return f;
}

StateSet to_state_set(const StateFile& file, bool gram_fix, Tolerance tol) {
    QuditDims dims;
    try {
        dims = QuditDims(file.dims);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad dims: ") + e.what());
    }
    std::vector<CVector> vs;
    for (std::size_t i = 0; i < file.states.size(); ++i) {
        if (static_cast<std::size_t>(file.states[i].size()) != dims.total()) {
            throw InputError("state " + std::to_string(i) + " has " + std::to_string(file.states[i].size()) +
                             " amplitudes, expected " + std::to_string(dims.total()));
        }
        vs.push_back(unit_or_reject(file.states[i], i));
    }
    if (gram_fix) {
        const Subspace s = orthonormalize(vs, dims, tol);
        if (static_cast<std::size_t>(s.dim()) != vs.size()) throw InputError("--gram-fix: states are linearly dependent");
        vs.clear();
        for (int i = 0; i < s.dim(); ++i) vs.push_back(s.basis().col(i));
    }
    std::vector<PureState> states;
    for (auto& v : vs) states.emplace_back(dims, std::move(v));
    try {
        return StateSet(dims, std::move(states), file.name, tol);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::map<int, CutPlan> plans_of(const StateFile& file, Tolerance tol) {
    std::map<int, CutPlan> plans;
    for (const auto& p : file.planes) {
        if (p.lone_party < 0 || p.lone_party >= static_cast<int>(file.dims.size())) {
            throw InputError("plane: bad lone_party");
        }
        std::vector<int> rest;
        for (std::size_t i = 0; i < file.dims.size(); ++i) {
            if (static_cast<int>(i) != p.lone_party) rest.push_back(file.dims[i]);
        }
        CutPlan plan;
        if (!p.states.empty()) {
            const QuditDims dims(rest);
            for (const auto& v : p.states) {
                if (static_cast<std::size_t>(v.size()) != dims.total()) throw InputError("plane: wrong vector length");
            }
            const Subspace s = orthonormalize(p.states, dims, tol);
            if (s.dim() != 2) throw InputError("plane: states must span a 2-dimensional subspace");
            plan.plane = s;
        }
        plan.selection = p.selection;
        plans[p.lone_party] = std::move(plan);
    }
    return plans;
}

BasisKind parse_kind(const std::string& s) {
    if (s == "ueb") return BasisKind::Ueb;
    if (s == "ueb-all-cuts") return BasisKind::UebAllCuts;
    if (s == "umeb") return BasisKind::Umeb;
    throw InputError("unknown kind '" + s + "' (expected ueb, ueb-all-cuts or umeb)");
}

const char* kind_flag(BasisKind k) {
    switch (k) {
        case BasisKind::Ueb: return "ueb";
        case BasisKind::UebAllCuts: return "ueb-all-cuts";
        case BasisKind::Umeb: return "umeb";
    }
    return "?";
}

}  // namespace ueb
