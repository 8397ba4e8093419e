#include "commands.hpp"

#include "suq2/qarith/qpoint.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace suq2::cli;

namespace {

// --config file.json: keys are long option names; values fill options absent from the command line.
// A nested object named after the subcommand applies to that subcommand only.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    nlohmann::json cfg = nlohmann::json::parse(in);
    if (!cfg.is_object()) throw std::runtime_error("config must be a JSON object");
    std::string sub;
    for (const auto& a : args)
        if (!a.empty() && a[0] != '-') {
            sub = a;
            break;
        }
    auto present = [&](const std::string& key) {
        for (const auto& a : args)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> extra;
    auto take = [&](const nlohmann::json& obj) {
        for (const auto& [key, value] : obj.items()) {
            if (value.is_object() || present(key)) continue;
            if (value.is_boolean()) {
                if (value.get<bool>()) extra.push_back("--" + key);
                continue;
            }
            extra.push_back("--" + key);
            extra.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    };
    if (cfg.contains(sub) && cfg[sub].is_object()) take(cfg[sub]);
    take(cfg);
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void emit(const std::string& name, const Options& o, const Outcome& out) {
    for (const auto& t : out.tables) std::cout << t.pretty() << "\n";
    Format f = parse_format(o.format);
    if (f == Format::Pretty) return;
    if (f == Format::Csv) {
        auto path = output_path(o.output, name + ".csv");
        write_file(path, out.tables.at(out.primary).csv());
        std::cout << "wrote " << path.string() << "\n";
        for (const auto& [suffix, t] : out.extra_csv) {
            auto p = path;
            p.replace_filename(path.stem().string() + "_" + suffix + ".csv");
            write_file(p, t.csv());
            std::cout << "wrote " << p.string() << "\n";
        }
        return;
    }
    nlohmann::json doc{{"command", name}, {"ok", out.ok}};
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& t : out.tables) tables.push_back(t.json());
    doc["tables"] = tables;
    if (!out.data.is_null()) doc["data"] = out.data;
    auto path = output_path(o.output, name + ".json");
    write_file(path, doc.dump(1) + "\n");
    std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic analysis on SU_q(2): verification suites and reports"};
    app.require_subcommand(1);
    Options o;
    std::map<CLI::App*, std::pair<std::string, std::function<Outcome(const Options&)>>> commands;

    auto common = [&](CLI::App* s) {
        s->add_option("--q", o.q, "deformation parameter, e.g. 1/2, 0.8 or 1");
        s->add_option("--lmax", o.lmax, "largest spin, e.g. 3/2");
        s->add_option("--p", o.p, "Lebesgue exponent");
        s->add_option("--b", o.b, "Hausdorff-Young-Paley exponent");
        s->add_option("--beta", o.beta, "summability exponent");
        s->add_option("--seed", o.seed, "seed for the random samplers");
        s->add_option("--trials", o.trials, "number of random samples");
        s->add_option("--degree", o.degree, "maximal degree of random polynomials");
        s->add_option("--output", o.output, "output file (default: $SUQ2_OUTPUT_DIR/<command>.<ext>)");
        s->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    };
    auto add = [&](const std::string& name, const std::string& help, std::function<Outcome(const Options&)> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        commands[s] = {name, std::move(fn)};
        return s;
    };

    add("orthogonality", "Peter-Weyl orthogonality relations, exact", run_orthogonality);
    add("hopf", "Hopf *-algebra axioms and rewriting confluence on random triples", run_hopf);
    add("fourier", "Fourier round trip and Plancherel on random polynomials", run_fourier);
    auto* ineq = add("inequality", "Hausdorff-Young / Paley / Hardy-Littlewood sweeps", run_inequality);
    ineq->add_option("--kind", o.kind, "hy, paley, hy-paley, hl or cor58")->required();
    ineq->add_option("--dirac", o.dirac, "classical or q (weights for hl and cor58)");
    auto* mult = add("multiplier", "Fourier multiplier bounds and symbol extraction", run_multiplier);
    mult->add_flag("--bound", o.bound, "L^p -> L^q bound of a symbol");
    mult->add_flag("--extract", o.extract, "extract(apply(sigma)) and the adjoint symbol");
    mult->add_option("--q-exp", o.q_exp, "target exponent of the L^p -> L^q bound");
    mult->add_option("--symbol", o.symbol, "identity or random");
    auto* spec = add("spectrum", "summability classification of a Dirac spectrum", run_spectrum);
    spec->add_option("--dirac", o.dirac, "classical or q");
    spec->add_flag("--classify", o.classify, "run the analytic classifier");
    spec->add_option("--multiplicity", o.multiplicity, "quantum, plain or both");
    auto* comm = add("commutator", "commutator boundedness ratio scan", run_commutator);
    comm->add_flag("--scan", o.scan, "scan all index tuples");
    comm->add_option("--dirac", o.dirac, "classical or q");
    auto* calc = add("calculus", "3D and 4D differential calculi", run_calculus);
    calc->add_option("--kind", o.kind, "3d or 4d");
    calc->add_option("--check", o.check, "leibniz, growth or admissible");
    calc->add_option("--dirac", o.dirac, "classical or q (admissible)");
    auto* dg = add("dirac-geometric", "eigenvalues of the geometric Dirac operator", run_dirac_geometric);
    dg->add_flag("--eigenvalues", o.eigenvalues, "diagonalize the spin blocks");
    auto* lap = add("laplacian", "q-Laplacian eigenvalues", run_laplacian);
    lap->add_flag("--eigenvalues", o.eigenvalues, "check the eigenvalue identity");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    for (const auto& [sub, entry] : commands) {
        if (!sub->parsed()) continue;
        try {
            for (const auto& item : split_list(o.q))
                if (!suq2::qarith::QPoint::parse(item).exact())
                    std::cerr << "warning: q = " << item << " is a float; evaluations at q run in double precision (give p/q for exact values)\n";
            Outcome out = entry.second(o);
            emit(entry.first, o, out);
            return out.ok ? 0 : 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
