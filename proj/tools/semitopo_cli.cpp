// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Command-line surface: load semitopology/witness specs, run analyses, emit
// reports and graphs.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semitopo/antisep.hpp"
#include "semitopo/catalog.hpp"
#include "semitopo/figures.hpp"
#include "semitopo/json_io.hpp"
#include "semitopo/logic3.hpp"
#include "semitopo/sequent.hpp"
#include "semitopo/solvers.hpp"
#include "semitopo/witness.hpp"

namespace {

using namespace semitopo;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Spec argument: a JSON file path, "-" for stdin, or a catalog name
// (optionally "name:n" for the parametric families).
Semitopology load_spec(const std::string& arg) {
    if (arg != "-") {
        size_t colon = arg.find(':');
        std::string base = colon == std::string::npos ? arg : arg.substr(0, colon);
        for (const auto& name : catalog_names())
            if (name == base) {
                int n = -1;
                if (colon != std::string::npos) n = std::stoi(arg.substr(colon + 1));
                return catalog(base, n);
            }
    }
    return semitopology_from_json(slurp(arg));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"finite semitopology toolkit"};
    app.require_subcommand(1);

    std::string spec, set_arg, out_path, pred_text, valuation_path, sequent_path, method;
    std::string point_arg, p_arg, q_arg;
    int param_n = -1;
    bool as_json = false, dot = false, with_flanks = false;

    auto* classify = app.add_subcommand("classify", "per-point classification flags");
    classify->add_option("spec", spec)->required();
    classify->add_option("--point", point_arg);
    classify->add_flag("--json", as_json);

    auto* partition = app.add_subcommand("partition", "maximal topens and irregular points");
    partition->add_option("spec", spec)->required();

    auto* closure_cmd = app.add_subcommand("closure", "topological closure of a set");
    closure_cmd->add_option("spec", spec)->required();
    closure_cmd->add_option("--set", set_arg)->required();

    auto* interior_cmd = app.add_subcommand("interior", "open interior of a set");
    interior_cmd->add_option("spec", spec)->required();
    interior_cmd->add_option("--set", set_arg)->required();

    auto* intertwined_cmd = app.add_subcommand("intertwined", "are two points intertwined");
    intertwined_cmd->add_option("spec", spec)->required();
    intertwined_cmd->add_option("P", p_arg)->required();
    intertwined_cmd->add_option("Q", q_arg)->required();
    intertwined_cmd->add_option("--method", method)->default_val("brute")
        ->check(CLI::IsMember({"brute", "sat", "logic"}));

    auto* soberify_cmd = app.add_subcommand("soberify", "space of abstract points");
    soberify_cmd->add_option("spec", spec)->required();
    soberify_cmd->add_option("-o,--out", out_path);

    auto* extremal_cmd = app.add_subcommand("extremal", "list the extremal valuations");
    extremal_cmd->add_option("spec", spec)->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a predicate");
    eval_cmd->add_option("spec", spec)->required();
    eval_cmd->add_option("--pred", pred_text)->required();
    eval_cmd->add_option("--valuation", valuation_path);

    auto* derive_cmd = app.add_subcommand("derive", "derivability of a tag-sequent");
    derive_cmd->add_option("spec", spec)->required();
    derive_cmd->add_option("--sequent", sequent_path)->required();

    auto* sat_cmd = app.add_subcommand("sat", "satisfiability of a DIMACS CNF");
    sat_cmd->add_option("file", spec)->required();
    sat_cmd->add_option("--method", method)->default_val("dpll")
        ->check(CLI::IsMember({"reduction", "dpll"}));

    auto* horn_cmd = app.add_subcommand("hornsat3", "three-valued Horn satisfiability");
    horn_cmd->add_option("file", spec)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "emit a named space as JSON");
    catalog_cmd->add_option("name", spec)->required();
    catalog_cmd->add_option("-n", param_n);
    catalog_cmd->add_option("-o,--out", out_path);

    auto* graph_cmd = app.add_subcommand("graph", "intersection graph of the opens");
    graph_cmd->add_option("spec", spec)->required();
    graph_cmd->add_flag("--dot", dot);
    graph_cmd->add_flag("--flanks", with_flanks);

    auto* figures_cmd = app.add_subcommand("check-figures", "run the figure regression suite");
    (void)figures_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (classify->parsed()) {
        Semitopology s = load_spec(spec);
        if (as_json && point_arg.empty()) {
            std::cout << classification_to_json(s);
            return 0;
        }
        std::vector<int> points;
        if (!point_arg.empty())
            points.push_back(s.universe().index(point_arg));
        else
            for (int p = 0; p < s.size(); ++p) points.push_back(p);
        for (int p : points) {
            Classification c = classify_point(s, p);
            if (as_json) {
                std::cout << "{\"point\":\"" << s.universe().label(p) << "\""
                          << ",\"regular\":" << (c.regular ? "true" : "false")
                          << ",\"weakly_regular\":" << (c.weakly_regular ? "true" : "false")
                          << ",\"quasiregular\":" << (c.quasiregular ? "true" : "false")
                          << ",\"indirectly_regular\":" << (c.indirectly_regular ? "true" : "false")
                          << ",\"unconflicted\":" << (c.unconflicted ? "true" : "false")
                          << ",\"conflicted\":" << (c.conflicted ? "true" : "false")
                          << ",\"hypertransitive\":" << (c.hypertransitive ? "true" : "false")
                          << ",\"hyperdefinite\":" << (c.hyperdefinite ? "true" : "false")
                          << ",\"mcn\":" << (c.mcn ? "true" : "false") << "}\n";
            } else {
                std::cout << s.universe().label(p) << ": "
                          << (c.regular ? "regular " : "")
                          << (c.weakly_regular ? "weakly_regular " : "")
                          << (c.quasiregular ? "quasiregular " : "")
                          << (c.indirectly_regular ? "indirectly_regular " : "")
                          << (c.unconflicted ? "unconflicted " : "conflicted ")
                          << (c.hypertransitive ? "hypertransitive " : "")
                          << (c.hyperdefinite ? "hyperdefinite " : "")
                          << (c.mcn ? "mcn" : "") << "\n";
            }
        }
        return 0;
    }
    if (partition->parsed()) {
        Semitopology s = load_spec(spec);
        TopenPartition part = topen_partition(s);
        for (Mask t : part.maximal_topens)
            std::cout << "topen " << s.universe().to_string(t) << "\n";
        std::cout << "irregular " << s.universe().to_string(part.irregular_points) << "\n";
        return 0;
    }
    if (closure_cmd->parsed() || interior_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        Mask x = s.universe().parse_set(set_arg);
        Mask r = closure_cmd->parsed() ? s.closure(x) : s.interior(x);
        std::cout << s.universe().to_string(r) << "\n";
        return 0;
    }
    if (intertwined_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        int p = s.universe().index(p_arg);
        int q = s.universe().index(q_arg);
        bool result;
        if (method == "brute") {
            result = intertwined(s, p, q);
        } else if (method == "sat") {
            WitnessFunction w = witness_from_semitopology(s);
            result = witness_intertwined(w, p, q);
        } else {
            WitnessContext wc = make_witness_context(s);
            Valuation3 ambient;
            ambient.value.assign(s.size(), Three::B);
            result = valid(intertwined_w(p, q), ambient, wc.ctx);
        }
        std::cout << (result ? "true" : "false") << "\n";
        return 0;
    }
    if (soberify_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        SoberifyResult r = soberify(s);
        emit(soberify_to_json(r, s), out_path);
        return 0;
    }
    if (extremal_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        for (const auto& f : extremal_valuations(s)) {
            for (int p = 0; p < s.size(); ++p)
                std::cout << s.universe().label(p) << "="
                          << (f(p) == Three::T ? "T" : f(p) == Three::B ? "B" : "F")
                          << (p + 1 < s.size() ? " " : "");
            std::cout << "\n";
        }
        return 0;
    }
    if (eval_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        PredPtr phi = parse_pred(pred_text, s.universe());
        if (!is_closed(phi)) throw Error("predicate has free variables");
        Valuation3 f;
        if (!valuation_path.empty())
            f = valuation_from_json(slurp(valuation_path), s.universe());
        else
            f.value.assign(s.size(), Three::B);
        WitnessContext wc = make_witness_context(s);
        Three v = eval(phi, f, wc.ctx);
        std::cout << (v == Three::T ? "T" : v == Three::B ? "B" : "F") << "\n";
        return 0;
    }
    if (derive_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        TagSequent sigma = parse_sequent(slurp(sequent_path), s.universe());
        std::cout << (derive(sigma, s.universe()) ? "derivable" : "not derivable") << "\n";
        return 0;
    }
    if (sat_cmd->parsed()) {
        Cnf cnf = read_dimacs_file(spec);
        bool sat = sat_check(cnf, method == "dpll" ? SatMethod::dpll : SatMethod::reduction);
        std::cout << (sat ? "sat" : "unsat") << "\n";
        return 0;
    }
    if (horn_cmd->parsed()) {
        auto [theory, names] = parse_horn3(slurp(spec));
        auto model = hornsat3(theory);
        if (!model) {
            std::cout << "unsat\n";
            return 0;
        }
        std::cout << "sat";
        for (size_t i = 0; i < names.size(); ++i)
            std::cout << " " << names[i] << "="
                      << ((*model)(i) == Three::T ? "T" : (*model)(i) == Three::B ? "B" : "F");
        std::cout << "\n";
        return 0;
    }
    if (catalog_cmd->parsed()) {
        emit(semitopology_to_json(catalog(spec, param_n)), out_path);
        return 0;
    }
    if (graph_cmd->parsed()) {
        Semitopology s = load_spec(spec);
        DotOptions opts;
        opts.flank_edges = with_flanks;
        if (dot || true) std::cout << to_dot(s, opts);
        return 0;
    }
    if (figures_cmd->parsed()) {
        auto checks = run_figure_checks();
        int failed = 0;
        for (const auto& c : checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.passed && !c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
            if (!c.passed) ++failed;
        }
        std::cout << checks.size() - failed << "/" << checks.size() << " figure checks passed\n";
        return failed == 0 ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const semitopo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
