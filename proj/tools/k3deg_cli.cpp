// Command line front end for the verification library. Subcommands mirror
// the library layers: lattice, models, toric, flops, and a combined report.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <k3deg/catalog.hpp>
#include <k3deg/checks.hpp>
#include <k3deg/degen.hpp>

#ifndef K3DEG_DEFAULT_CATALOG
#define K3DEG_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace {

int print_results(const std::vector<k3deg::checks::CheckResult>& results) {
    long long bad = 0;
    for (const auto& c : results) {
        std::string line = c.pass ? "PASS " : "FAIL ";
        line += c.id;
        if (!c.subject.empty()) line += " [" + c.subject + "]";
        if (!c.pass && !c.detail.empty()) line += ": " + c.detail;
        std::cout << line << "\n";
        if (!c.pass) ++bad;
    }
    std::cout << (results.size() - bad) << " of " << results.size()
              << " checks passed\n";
    return bad == 0 ? 0 : 1;
}

nlohmann::json state_json(const k3deg::degen::State& st) {
    nlohmann::json j;
    auto tg = k3deg::degen::tags(st);
    auto gamma = k3deg::degen::classify_gamma(st);
    auto miss = k3deg::degen::missing_labels(st);
    j["gamma"] = gamma;
    j["k2"] = {st.sides[0].k2, st.sides[1].k2};
    j["tags"] = {tg[0], tg[1]};
    j["broken"] = std::vector<std::string>(miss.begin(), miss.end());
    return j;
}

int run_flops(const std::string& emit, bool quotient) {
    auto q = k3deg::degen::enumerate_degenerations();
    if (emit == "dot") {
        std::cout << k3deg::degen::to_dot(q, quotient);
        return 0;
    }
    if (emit == "json") {
        nlohmann::json j;
        j["states"] = q.full.states.size();
        if (quotient) {
            nlohmann::json classes = nlohmann::json::array();
            for (std::size_t c = 0; c < q.classes.size(); ++c) {
                nlohmann::json e = state_json(q.full.states[q.rep[c]]);
                e["size"] = q.classes[c].size();
                classes.push_back(e);
            }
            j["classes"] = classes;
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [a, b] : q.edges) edges.push_back({a, b});
            j["edges"] = edges;
        } else {
            nlohmann::json states = nlohmann::json::array();
            for (const auto& st : q.full.states)
                states.push_back(state_json(st));
            j["nodes"] = states;
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [a, b] : q.full.edges) edges.push_back({a, b});
            j["edges"] = edges;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    // Plain listing, one line per node.
    if (quotient) {
        std::cout << q.full.states.size() << " states, " << q.classes.size()
                  << " classes up to reflection, " << q.edges.size()
                  << " adjacencies\n";
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            const auto& st = q.full.states[q.rep[c]];
            std::string g;
            for (const auto& part : k3deg::degen::classify_gamma(st)) {
                if (!g.empty()) g += "+";
                g += part;
            }
            std::printf("  class %2zu  %-12s K^2 (%3d,%3d)  size %zu\n", c,
                        g.c_str(), st.sides[0].k2, st.sides[1].k2,
                        q.classes[c].size());
        }
    } else {
        std::cout << q.full.states.size() << " states, "
                  << q.full.edges.size() << " flop edges\n";
        for (std::size_t i = 0; i < q.full.states.size(); ++i) {
            const auto& st = q.full.states[i];
            std::string g;
            for (const auto& part : k3deg::degen::classify_gamma(st)) {
                if (!g.empty()) g += "+";
                g += part;
            }
            std::printf("  state %2zu  %-12s K^2 (%3d,%3d)\n", i, g.c_str(),
                        st.sides[0].k2, st.sides[1].k2);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of a lattice polarised degeneration "
                 "catalog"};
    app.require_subcommand(1);
    std::string catalog_path = K3DEG_DEFAULT_CATALOG;
    app.add_option("--catalog", catalog_path, "Catalog JSON file")
        ->capture_default_str();

    auto* lat = app.add_subcommand("lattice", "Intersection form checks");
    lat->require_subcommand(1);
    lat->add_subcommand("check", "Verify the lattice layer of the catalog");

    auto* models = app.add_subcommand("models", "Projective model checks");
    models->require_subcommand(1);
    auto* models_verify =
        models->add_subcommand("verify", "Verify the model tables");
    std::string model_name;
    models_verify->add_option("--model", model_name,
                              "Restrict to one model by name");

    auto* toric = app.add_subcommand("toric", "Toric mirror checks");
    toric->require_subcommand(1);
    toric->add_subcommand("verify", "Verify the toric layer of the catalog");

    auto* flops = app.add_subcommand("flops", "Degeneration graph");
    flops->require_subcommand(1);
    auto* flops_enum = flops->add_subcommand(
        "enumerate", "Enumerate type III degenerations by flops");
    std::string emit;
    flops_enum->add_option("--emit", emit, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));
    bool no_quotient = false;
    flops_enum->add_flag("--no-reflection-quotient", no_quotient,
                         "Work with raw states instead of reflection "
                         "classes");

    auto* report = app.add_subcommand("report", "Run every check");
    std::string format = "markdown";
    report->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    bool deterministic = false;
    report->add_flag("--deterministic", deterministic,
                     "Omit timing so output is reproducible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (flops_enum->parsed())
            return run_flops(emit, !no_quotient);

        auto cat = k3deg::catalog::load_catalog(catalog_path);
        std::vector<k3deg::checks::CheckResult> out;
        if (lat->parsed()) {
            k3deg::checks::run_lattice_checks(cat, out);
            k3deg::checks::run_moduli_checks(cat, out);
            return print_results(out);
        }
        if (models_verify->parsed()) {
            if (!model_name.empty()) {
                k3deg::checks::run_model_checks(
                    cat, k3deg::catalog::model_by_name(cat, model_name),
                    out);
            } else {
                for (const auto& m : cat.models)
                    k3deg::checks::run_model_checks(cat, m, out);
            }
            return print_results(out);
        }
        if (toric->parsed()) {
            k3deg::checks::run_toric_checks(cat, out);
            return print_results(out);
        }
        if (report->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            auto rep = k3deg::checks::run_all(cat);
            auto t1 = std::chrono::steady_clock::now();
            std::optional<long long> elapsed;
            if (!deterministic)
                elapsed = std::chrono::duration_cast<
                              std::chrono::milliseconds>(t1 - t0)
                              .count();
            std::cout << (format == "json"
                              ? k3deg::checks::to_json(rep, elapsed)
                              : k3deg::checks::to_markdown(rep, elapsed));
            return rep.ok() ? 0 : 1;
        }
    } catch (const k3deg::catalog::CatalogError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
