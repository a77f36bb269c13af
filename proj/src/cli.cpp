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


#include "ueb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ueb/constructions.hpp"
#include "ueb/report.hpp"
#include "ueb/state_file.hpp"

namespace ueb {

namespace {

constexpr int kExitInput = 3;

struct CommonFlags {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int starts = 64;
    std::string cut;
    std::string format = "json";
    bool gram_fix = false;
    bool require_exact = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--tol", f.tol, "Numerical tolerance")->capture_default_str();
    cmd->add_option("--seed", f.seed, "Search seed")->capture_default_str();
    cmd->add_option("--starts", f.starts, "Random starts per search")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--cut", f.cut, "Bipartition mask (bit i = party i) or 'all'");
    cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    cmd->add_flag("--gram-fix", f.gram_fix, "Re-orthonormalize input states in file order");
    cmd->add_flag("--require-exact", f.require_exact, "Report search-based verdicts as INCONCLUSIVE");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    StateFile file;
    StateSet set;
    ReportContext ctx;
};

Loaded load(const std::string& path, const CommonFlags& f) {
    const std::string text = read_file(path);
    Tolerance tol;
    try {
        tol = Tolerance(f.tol);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    StateFile file = parse_state_file(text);
    StateSet set = to_state_set(file, f.gram_fix, tol);
    ReportContext ctx;
    ctx.input_digest = fnv1a_digest(text);
    ctx.verify.tol = tol;
    ctx.verify.search.seed = f.seed;
    ctx.verify.search.starts = f.starts;
    ctx.require_exact = f.require_exact;
    ctx.plans = plans_of(file, tol);
    if (!f.cut.empty() && f.cut != "all") {
        std::uint32_t mask = 0;
        try {
            mask = static_cast<std::uint32_t>(std::stoul(f.cut, nullptr, 0));
            ctx.verify.cut_mask = Bipartition(set.dims(), mask).mask();
        } catch (const std::exception&) {
            throw InputError("bad --cut '" + f.cut + "' for a " + set.dims().str() + " space");
        }
    }
    return {std::move(file), std::move(set), std::move(ctx)};
}

std::optional<BasisKind> resolve_kind(const std::string& flag, const Loaded& in, const CommonFlags& f, bool required) {
    std::optional<BasisKind> kind;
    if (!flag.empty()) {
        kind = parse_kind(flag);
    } else if (in.file.kind) {
        kind = parse_kind(*in.file.kind);
    } else if (required) {
        throw InputError("no --kind given and the state file declares none");
    }
    if (kind && f.cut == "all") {
        if (*kind == BasisKind::Umeb) throw InputError("--cut all is not defined for umeb");
        kind = BasisKind::UebAllCuts;
    }
    if (kind && *kind == BasisKind::UebAllCuts && in.ctx.verify.cut_mask) {
        throw InputError("--cut <mask> conflicts with ueb-all-cuts");
    }
    return kind;
}

void emit(const Report& r, const CommonFlags& f, std::ostream& out) {
    if (f.format == "text") {
        out << render_text(r.json);
    } else {
        out << r.json.dump(2) << "\n";
    }
}

StateSet construct(const std::string& name, int n, int d, const std::string& variant, std::optional<std::string>& kind) {
    if (const CatalogEntry* e = find_catalog_entry(name)) {
        kind = kind_flag(e->kind);
        return e->build();
    }
    if (name == "nqubit-ueb") {
        kind = "ueb-all-cuts";
        return n_qubit_ueb(n, variant == "hadamard" ? CoeffVariant::HadamardIfPowerOfTwo : CoeffVariant::Dft);
    }
    if (name == "embed-meb") {
        kind = "umeb";
        return embed_meb(d, n);
    }
    if (name == "bell-meb") {
        kind = "umeb";
        return bell_meb(d);
    }
    if (name == "prop2a-set") return bell_minus_first_in_2x3();
    throw InputError("unknown construction '" + name + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify unextendible entangled bases"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "Shipped constructions");
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
    catalog_cmd->require_subcommand(1);

    auto* construct_cmd = app.add_subcommand("construct", "Build a verified state set");
    std::string cname, out_path, variant = "dft";
    int n = 4, d = 2;
    construct_cmd->add_option("name", cname, "Catalog entry or generator (nqubit-ueb, embed-meb, bell-meb, prop2a-set)")
        ->required();
    construct_cmd->add_option("--n", n, "Qubit count (nqubit-ueb) or padding (embed-meb)")->capture_default_str();
    construct_cmd->add_option("--d", d, "Local dimension")->capture_default_str();
    construct_cmd->add_option("--variant", variant, "Block coefficients")
        ->check(CLI::IsMember({"dft", "hadamard"}))
        ->capture_default_str();
    construct_cmd->add_option("--out", out_path, "Output path (default: standard output)");

    CommonFlags vflags, aflags;
    std::string vpath, vkind, apath, akind, completion;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a state file");
    verify_cmd->add_option("path", vpath, "State file")->required();
    verify_cmd->add_option("--kind", vkind, "ueb | ueb-all-cuts | umeb");
    add_common(verify_cmd, vflags);

    auto* analyze_cmd = app.add_subcommand("analyze", "Full diagnostics for a state file");
    analyze_cmd->add_option("path", apath, "State file")->required();
    analyze_cmd->add_option("--kind", akind, "ueb | ueb-all-cuts | umeb");
    analyze_cmd->add_option("--completion", completion, "Search the complement for a completion")
        ->check(CLI::IsMember({"entangled", "max-entangled"}));
    add_common(analyze_cmd, aflags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& e : catalog()) {
                out << std::left << std::setw(17) << e.name << std::setw(10) << e.dims.str() << std::setw(4)
                    << e.count << std::setw(14) << to_string(e.kind) << std::setw(16) << to_string(e.expected)
                    << e.description << "\n";
            }
            return 0;
        }
        if (construct_cmd->parsed()) {
            std::optional<std::string> kind;
            StateFile f = to_state_file(construct(cname, n, d, variant, kind));
            f.kind = kind;
            if (out_path.empty()) {
                out << dump_state_file(f);
            } else {
                save_state_file(f, out_path);
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            const Loaded in = load(vpath, vflags);
            const BasisKind kind = *resolve_kind(vkind, in, vflags, true);
            const Report r = make_verify_report(in.set, kind, in.ctx);
            emit(r, vflags, out);
            return exit_code(*r.outcome);
        }
        if (analyze_cmd->parsed()) {
            Loaded in = load(apath, aflags);
            const auto kind = resolve_kind(akind, in, aflags, false);
            if (!completion.empty()) {
                in.ctx.completion = completion == "entangled" ? SetMode::Entangled : SetMode::MaxEntangled;
            }
            const Report r = make_analyze_report(in.set, kind, in.ctx);
            emit(r, aflags, out);
            return r.outcome ? exit_code(*r.outcome) : 0;
        }
    } catch (const GateError& e) {
        err << "gate failure: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"uebtool"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ueb
