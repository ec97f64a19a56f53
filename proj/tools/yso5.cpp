#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "yso5/error.hpp"
#include "yso5/relation_tables.hpp"
#include "yso5/report.hpp"
#include "yso5/rtt_engine.hpp"
#include "yso5/so5_rep.hpp"
#include "yso5/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<yso5::Scalar> parse_list(const std::string& text, const char* flag) {
    std::vector<yso5::Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(yso5::Scalar::parse(item));
        } catch (const yso5::Error& e) {
            throw yso5::ParseError(std::string(flag) + ": " + e.what());
        }
    }
    if (out.empty()) throw yso5::ParseError(std::string(flag) + ": empty list");
    return out;
}

struct Args {
    std::string suite;
    std::string x = "1", c = "1", h, thetas = "0,1", weights, tables, out, format = "md", source = "lax";
    std::string rep = "spinor";
    int L = 2, N = 5, grid = 7, levels = 2, sites = 2, imax = 1, jmax = 1;
    bool allow_large = false;
};

yso5::SuiteOptions to_options(const Args& a) {
    yso5::SuiteOptions o;
    o.x = yso5::Scalar::parse(a.x);
    o.c = yso5::Scalar::parse(a.c);
    if (!a.h.empty()) o.h = yso5::Scalar::parse(a.h);
    o.L = a.L;
    o.N = a.N;
    o.grid = a.grid;
    o.levels = a.levels;
    o.sites = a.sites;
    o.thetas = parse_list(a.thetas, "--thetas");
    if (!a.weights.empty()) o.weights = parse_list(a.weights, "--weights");
    if (!a.tables.empty()) {
        o.tables.clear();
        std::stringstream ss(a.tables);
        std::string item;
        while (std::getline(ss, item, ',')) o.tables.push_back(yso5::relation_table(item).name);
    }
    o.source = a.source;
    o.allow_large = a.allow_large;
    return o;
}

std::vector<std::pair<std::string, std::string>> config_echo(const Args& a, const yso5::SuiteOptions& o) {
    std::vector<std::pair<std::string, std::string>> cfg;
    auto join = [](const std::vector<yso5::Scalar>& v) {
        std::string s;
        for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
        return s;
    };
    cfg.emplace_back("x", o.x.to_string());
    cfg.emplace_back("c", o.c.to_string());
    cfg.emplace_back("h", o.h ? o.h->to_string() : "default");
    cfg.emplace_back("L", std::to_string(o.L));
    cfg.emplace_back("N", std::to_string(o.N));
    cfg.emplace_back("grid", std::to_string(o.grid));
    cfg.emplace_back("levels", std::to_string(o.levels));
    cfg.emplace_back("sites", std::to_string(o.sites));
    cfg.emplace_back("thetas", join(o.thetas));
    cfg.emplace_back("weights", o.weights ? join(*o.weights) : "none");
    std::string tables;
    for (size_t k = 0; k < o.tables.size(); ++k) tables += (k ? "," : "") + o.tables[k];
    cfg.emplace_back("tables", tables);
    cfg.emplace_back("source", a.suite == "all" ? "lax" : o.source);
    cfg.emplace_back("allow_large", o.allow_large ? "true" : "false");
    return cfg;
}

int run_verify(const Args& a) {
    yso5::SuiteOptions o = to_options(a);
    yso5::RunReport report;
    report.command = "verify " + a.suite;
    report.config = config_echo(a, o);
    if (a.suite == "so5")
        report.results = yso5::run_so5_suite(o);
    else if (a.suite == "ybe")
        report.results = yso5::run_ybe_suite(o);
    else if (a.suite == "rtt")
        report.results = yso5::run_rtt_suite(o);
    else if (a.suite == "drinfeld")
        report.results = yso5::run_drinfeld_suite(o);
    else if (a.suite == "fock")
        report.results = yso5::run_fock_suite(o);
    else
        report.results = yso5::run_all_suites(o);
    report.sort();

    std::string json = report.to_json().dump(2) + "\n";
    if (!a.out.empty()) {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw yso5::Error("cannot write " + a.out);
        f << json;
    }
    if (a.format == "json")
        std::cout << json;
    else
        std::cout << report.to_markdown();
    return report.any_failed() ? kExitFail : 0;
}

int run_dump_gens(const Args& a) {
    yso5::GeneratorSet g = a.rep == "vector" ? yso5::build_vector_generators()
                                             : yso5::build_spinor_generators(yso5::build_clifford());
    nlohmann::ordered_json j;
    j["rep"] = a.rep;
    j["dim"] = g.rep_dim;
    nlohmann::ordered_json gens = nlohmann::ordered_json::object();
    for (size_t k = 0; k < 10; ++k) gens[yso5::adjoint_basis()[k].label()] = yso5::sparse_to_json(g.gens[k]);
    j["generators"] = gens;
    std::cout << j.dump(a.format == "json" ? -1 : 2) << "\n";
    return 0;
}

int run_dump_relations(const Args& a) {
    yso5::RelationSet rs = yso5::expand_rtt(a.imax, a.jmax, yso5::Scalar::parse(a.x));
    if (a.format != "json") {
        for (const auto& r : rs.relations) std::cout << r.label << ": " << r.poly.to_string() << " = 0\n";
        return 0;
    }
    nlohmann::ordered_json j;
    j["imax"] = a.imax;
    j["jmax"] = a.jmax;
    j["max_level"] = rs.max_level;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs.relations) {
        nlohmann::ordered_json e;
        e["label"] = r.label;
        e["source"] = "rtt-expansion";
        e["order"] = {r.i, r.j};
        e["entry"] = r.entry;
        e["prefactor"] = r.prefactor.to_string();
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [w, c] : r.poly.terms()) terms.push_back({{"word", yso5::word_to_string(w)}, {"coeff", c.to_string()}});
        e["terms"] = terms;
        arr.push_back(e);
    }
    j["relations"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Yangian Y(so(5)) relations"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    Args a;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", a.suite, "so5 | ybe | rtt | drinfeld | fock | all")
        ->required()
        ->check(CLI::IsMember({"so5", "ybe", "rtt", "drinfeld", "fock", "all"}));
    verify->add_option("--x", a.x, "R-matrix parameter x");
    verify->add_option("--c", a.c, "Fock coupling c");
    verify->add_option("--h", a.h, "deformation parameter h (Fock default: c, Lax default: 1)");
    verify->add_option("--L", a.L, "Fock chain length");
    verify->add_option("--N", a.N, "R-matrix dimension (odd, >= 3)");
    verify->add_option("--grid", a.grid, "YBE grid size (>= 7)");
    verify->add_option("--levels", a.levels, "RTT orders (1, m) for m <= levels");
    verify->add_option("--sites", a.sites, "Lax monodromy sites");
    verify->add_option("--thetas", a.thetas, "comma separated inhomogeneities");
    verify->add_option("--weights", a.weights, "comma separated one-body weights, one per site");
    verify->add_option("--tables", a.tables, "comma separated relation tables");
    verify->add_option("--source", a.source, "Drinfel'd source: lax | fock")->check(CLI::IsMember({"lax", "fock"}));
    verify->add_option("--out", a.out, "write the JSON report to this path");
    verify->add_option("--format", a.format, "stdout format: json | md")->check(CLI::IsMember({"json", "md"}));
    verify->add_flag("--allow-large", a.allow_large, "admit L = 4");

    auto* dump = app.add_subcommand("dump", "print generators or extracted relations");
    dump->require_subcommand(1);
    auto* gens = dump->add_subcommand("gens", "so(5) generator matrices");
    gens->add_option("--rep", a.rep, "spinor | vector")->check(CLI::IsMember({"spinor", "vector"}));
    gens->add_option("--format", a.format, "json | md")->check(CLI::IsMember({"json", "md"}));
    auto* rels = dump->add_subcommand("relations", "RTT coefficient relations");
    rels->add_option("--imax", a.imax, "largest u order");
    rels->add_option("--jmax", a.jmax, "largest v order");
    rels->add_option("--x", a.x, "R-matrix parameter x");
    rels->add_option("--format", a.format, "json | md")->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(a);
        if (gens->parsed()) return run_dump_gens(a);
        if (rels->parsed()) return run_dump_relations(a);
    } catch (const yso5::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const yso5::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
