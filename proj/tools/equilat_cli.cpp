// equilat: exact bases of lattices under symmetric-group actions.
//
// Exit codes: 0 success, 1 malformed input, 2 refusal (the reason field
// explains why), 3 budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "equilat/json_io.hpp"

using namespace equilat;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ShapeError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ShapeError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

void write_report(const json& report, const std::string& out_path, const std::string& format) {
    std::string text;
    if (format == "json") {
        text = report.dump(2);
        text += '\n';
    } else {
        std::ostringstream os;
        for (const auto& [key, value] : report.items())
            os << key << ": " << value.dump() << "\n";
        text = os.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << text;
    }
}

json vector_list(const std::vector<IndexedVector>& xs) {
    json arr = json::array();
    for (const auto& v : xs) arr.push_back(entries_to_json(v));
    return arr;
}

struct Options {
    std::string in_path, basis_path, out_path;
    std::string order = "dlex";
    std::string format = "json";
    std::string kind = "graver";
    int bound = 4;
    int n = 0;
    int n_max = 6;
    int window = 2;
    int c = 2;
    long long budget_override = 0;
};

Budget effective_budget(const Options& opt) {
    if (opt.budget_override > 0) return Budget::scaled(opt.budget_override);
    if (const char* env = std::getenv("EQUILAT_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) return Budget::scaled(v);
    }
    return Budget{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice bases under symmetric-group actions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", opt.in_path, "input JSON file")->required();
        cmd->add_option("--out", opt.out_path, "output file (stdout otherwise)");
        cmd->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--budget", opt.budget_override, "override every budget cap");
        return cmd;
    };

    auto* c_graver = add_common(app.add_subcommand("graver", "Graver basis of a lattice"), true);
    auto* c_hilbert = add_common(app.add_subcommand("hilbert", "Hilbert basis of the nonnegative monoid"), true);
    auto* c_groebner = add_common(app.add_subcommand("groebner", "reduced directed basis for a term order"), true);
    c_groebner->add_option("--order", opt.order, "lex|dlex|revlex")
        ->check(CLI::IsMember({"lex", "dlex", "revlex"}));
    auto* c_markov = add_common(app.add_subcommand("markov-verify", "fiber connectivity of a move set"), true);
    c_markov->add_option("--basis", opt.basis_path, "move set JSON")->required();
    c_markov->add_option("--bound", opt.bound, "norm bound for starting points");
    auto* c_gverify = add_common(app.add_subcommand("groebner-verify", "directed reduction to fiber minima"), true);
    c_gverify->add_option("--basis", opt.basis_path, "move set JSON")->required();
    c_gverify->add_option("--bound", opt.bound, "norm bound for starting points");
    c_gverify->add_option("--order", opt.order, "lex|dlex|revlex")
        ->check(CLI::IsMember({"lex", "dlex", "revlex"}));
    auto* c_orbit = add_common(app.add_subcommand("orbit", "Sym(n)-orbit of a vector"), true);
    c_orbit->add_option("--n", opt.n, "orbit degree");
    auto* c_canon = add_common(app.add_subcommand("canon", "canonical orbit representative"), true);
    c_canon->add_option("--n", opt.n, "orbit degree");
    add_common(app.add_subcommand("lift-check", "Graver/Hilbert correspondence through the doubling map"), true);
    auto* c_stab = add_common(app.add_subcommand("stabilize", "stabilization scan over a chain"), false);
    c_stab->add_option("--in", opt.in_path, "chain JSON (seed spec or model/scenario)");
    c_stab->add_option("--seed", opt.in_path, "alias for --in (seed spec file)");
    c_stab->add_option("--kind", opt.kind, "generating|markov|graver|groebner-lex|groebner-dlex|groebner-revlex");
    c_stab->add_option("--n-max", opt.n_max, "largest level to scan");
    c_stab->add_option("--window", opt.window, "required consecutive equal levels");
    auto* c_model = add_common(app.add_subcommand("model-kernel", "kernel lattice of a hierarchical model"), true);
    c_model->add_option("--n", opt.n, "level for scenario kernels (default 2)");
    auto* c_no3 = add_common(app.add_subcommand("no3way", "forced move of the no-3-way kernel"), false);
    c_no3->add_option("--n", opt.n, "level")->required();
    c_no3->add_option("--c", opt.c, "bounded range (>= 2)");
    add_common(app.add_subcommand("envelope-check", "Graver envelope of a d=1 invariant lattice"), true);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    const Budget budget = effective_budget(opt);

    try {
        json report;
        if (command == "graver" || command == "hilbert") {
            const LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            const BasisReport r =
                command == "graver" ? graver_basis(L, budget) : hilbert_basis(L, budget);
            report = to_json(r);
        } else if (command == "groebner") {
            LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            // Re-present by the Graver basis so the completion certifies the
            // full lattice congruence regardless of the input presentation.
            L = L.with_generators(graver_basis(L, budget).elements);
            report = to_json(groebner_basis(L, order_from_json(json(opt.order)), budget));
        } else if (command == "markov-verify") {
            const LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            std::vector<IndexedVector> B;
            for (const auto& e : read_json(opt.basis_path).at("elements"))
                B.push_back(vector_from_entries(L.shape(), e));
            const bool ok = verify_markov(L, B, opt.bound, budget);
            report = json{{"verified_up_to", opt.bound}, {"result", ok}};
        } else if (command == "groebner-verify") {
            const LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            std::vector<IndexedVector> B;
            for (const auto& e : read_json(opt.basis_path).at("elements"))
                B.push_back(vector_from_entries(L.shape(), e));
            const bool ok =
                verify_groebner(L, B, order_from_json(json(opt.order)), opt.bound, budget);
            report = json{{"verified_up_to", opt.bound}, {"order", opt.order}, {"result", ok}};
        } else if (command == "orbit") {
            const IndexedVector u = vector_from_json(read_json(opt.in_path));
            const int n = opt.n > 0 ? opt.n : u.shape().n;
            report = json{{"n", n}, {"orbit", vector_list(orbit(u, n, budget))}};
        } else if (command == "canon") {
            const IndexedVector u = vector_from_json(read_json(opt.in_path));
            const int n = opt.n > 0 ? opt.n : u.shape().n;
            report = json{{"n", n}, {"canonical", to_json(canonical_form(u, n, budget))}};
        } else if (command == "lift-check") {
            const LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            report = json{{"crosscheck", hilbert_graver_crosscheck(L, budget)}};
        } else if (command == "stabilize") {
            if (opt.in_path.empty()) throw ShapeError("stabilize: --in is required");
            const ChainSpec spec = chain_from_json(read_json(opt.in_path), budget);
            ScanKind kind;
            if (opt.kind == "generating") kind = ScanKind::generating;
            else if (opt.kind == "markov") kind = ScanKind::markov;
            else if (opt.kind == "graver") kind = ScanKind::graver;
            else if (opt.kind == "groebner-lex") kind = ScanKind::groebner_lex;
            else if (opt.kind == "groebner-dlex") kind = ScanKind::groebner_dlex;
            else if (opt.kind == "groebner-revlex") kind = ScanKind::groebner_revlex;
            else throw ShapeError("stabilize: unknown kind " + opt.kind);
            const ScanResult r = stabilization_scan(spec, kind, opt.n_max, opt.window, budget);
            report = to_json(r, spec.mode == ChainMode::saturated_probe);
        } else if (command == "model-kernel") {
            const json j = read_json(opt.in_path);
            LatticeHandle L = json_has_scenario(j)
                                  ? kernel_lattice(scenario_from_json(j),
                                                   opt.n > 0 ? opt.n : 2, budget)
                                  : kernel_lattice(model_from_json(j), budget);
            report = to_json(L);
            report["rank"] = L.rank();
        } else if (command == "no3way") {
            const IndexedVector u = no3way_witness(opt.n, opt.c, budget);
            report = json{{"witness", to_json(u)},
                          {"kernel_member", true},
                          {"norm", to_json(u.norm())},
                          {"support_size", u.support_size()}};
        } else if (command == "envelope-check") {
            const LatticeHandle L = lattice_from_json(read_json(opt.in_path));
            report = json{{"result", thm_graver_envelope_check(L, budget)}};
        }
        write_report(report, opt.out_path, opt.format);
        return 0;
    } catch (const RefusalError& e) {
        json err{{"error", e.what()}, {"reason", e.reason}};
        write_report(err, opt.out_path, opt.format);
        return 2;
    } catch (const BudgetError& e) {
        json err{{"error", e.what()}, {"reason", "budget-exhausted"}};
        write_report(err, opt.out_path, opt.format);
        return 3;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}, {"reason", "malformed-input"}};
        write_report(err, opt.out_path, opt.format);
        return 1;
    }
}
