// Top level acceptance run: eight named criteria, one verdict line each.
// Returns nonzero when any criterion fails.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <k3deg/catalog.hpp>
#include <k3deg/checks.hpp>
#include <k3deg/degen.hpp>
#include <k3deg/dynkin.hpp>
#include <k3deg/gram.hpp>
#include <k3deg/lattice.hpp>
#include <k3deg/ns_model.hpp>
#include <k3deg/toric.hpp>

#ifndef K3DEG_CATALOG
#define K3DEG_CATALOG "data/catalog.json"
#endif

using namespace k3deg;

namespace {

int failures = 0;

void verdict(int n, const std::string& label, bool ok,
             const std::string& why = "") {
    std::string line = ok ? "PASS" : "FAIL";
    line += " criterion " + std::to_string(n) + ": " + label;
    if (!ok && !why.empty()) line += " (" + why + ")";
    std::cout << line << "\n";
    if (!ok) ++failures;
}

void criterion(int n, const std::string& label,
               const std::function<std::string()>& body) {
    try {
        std::string why = body();
        verdict(n, label, why.empty(), why);
    } catch (const std::exception& e) {
        verdict(n, label, false, e.what());
    }
}

// Reuse a library check runner and collapse its results to one verdict.
std::string collapse(const std::vector<checks::CheckResult>& results) {
    for (const auto& c : results)
        if (!c.pass) return c.id + " [" + c.subject + "]: " + c.detail;
    return "";
}

} // namespace

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : K3DEG_CATALOG;
    catalog::Catalog cat;
    try {
        cat = catalog::load_catalog(path);
    } catch (const std::exception& e) {
        std::cerr << "cannot load catalog: " << e.what() << "\n";
        return 2;
    }

    criterion(1, "rank 18 even unimodular form of signature (1,17)", [&] {
        auto fails = ns_model::verify_m_identification();
        if (!fails.empty()) return fails.front();
        auto g = lattice::gram_minor(lattice::basis18());
        Rat det = lattice::determinant(g);
        if (det != Rat(1) && det != Rat(-1)) return std::string("det");
        auto sig = lattice::inertia(g);
        if (sig.positive != 1 || sig.null != 0 || sig.negative != 17)
            return std::string("inertia");
        for (const auto& idx : lattice::basis18())
            if (lattice::pair(lattice::unit(idx), lattice::unit(idx))
                    .num() % 2 != 0)
                return std::string("odd diagonal");
        return std::string();
    });

    criterion(2, "three relations vanish against all 21 generators", [&] {
        for (const lattice::Vec& rel :
             {lattice::r1(), lattice::r2(), lattice::r3()})
            for (int i = 0; i < lattice::kGenerators; ++i)
                if (lattice::pair(rel, lattice::unit(i)) != Rat(0))
                    return "nonzero pairing with " + lattice::names()[i];
        return std::string();
    });

    criterion(3, "quartic model carries 4 sections and A11+E6", [&] {
        const auto& m = catalog::model_by_name(cat, "e6e12");
        lattice::Vec d = m.polarising_divisor;
        if (lattice::pair(d, d) != Rat(4))
            return std::string("self intersection is not 4");
        auto it = m.expected_h0.find(1);
        if (it == m.expected_h0.end() || it->second != 4)
            return std::string("table does not give 4 sections");
        if (ns_model::rr_sections(d) != 4)
            return std::string("lattice count is not 4");
        if (ns_model::hilbert_h0(m.weights, m.degrees, 1) != 4)
            return std::string("coordinate ring count is not 4");
        long long verified = 0;
        for (const auto& s : m.sections)
            if (s.cls && lattice::verify_section(
                             *s.cls, static_cast<int>(s.degree), d))
                ++verified;
        if (verified != 4) return std::string("section classes fail");
        if (m.singularities != std::vector<std::string>{"A11", "E6"})
            return std::string("singular fibres are not A11+E6");
        return std::string();
    });

    criterion(4, "every recorded section class rounds correctly", [&] {
        long long checked = 0;
        for (const auto& m : cat.models)
            for (const auto& s : m.sections) {
                if (!s.cls) continue;
                ++checked;
                if (!lattice::integral(*s.cls))
                    return m.name + "/" + s.name + " fractional";
                if (!lattice::verify_section(
                        *s.cls, static_cast<int>(s.degree),
                        m.polarising_divisor))
                    return m.name + "/" + s.name + " mismatch";
            }
        if (checked < 20) return std::string("too few recorded classes");
        return std::string();
    });

    criterion(5, "toric mirror family and its coordinate pipeline", [&] {
        gram::IntMatrix rows;
        for (const auto& v : cat.toric.vertices)
            rows.push_back({v[0], v[1], v[2]});
        if (toric::sublattice_index(rows) != 6)
            return std::string("vertex sublattice index is not 6");
        auto g = toric::Grading::from_weights(cat.toric.weight_relation);
        if (toric::group_elements(g).size() != 6)
            return std::string("symmetry group order is not 6");
        auto cd = toric::cox_degree(g, {1, 1, 1, 1});
        if (cd.degree != 12 || cd.cls != toric::ClassTuple{0, 0, 0, 0})
            return std::string("coordinate product degree is off");
        if (toric::invariant_monomials(g).size() != 9)
            return std::string("family does not have 9 monomials");
        if (cat.toric.b_invariants.size() != 5)
            return std::string("expected 5 invariant combinations");
        std::vector<checks::CheckResult> out;
        checks::run_toric_checks(cat, out);
        return collapse(out);
    });

    criterion(6, "eleven degenerate pairs linked by single flops", [&] {
        auto q = degen::enumerate_degenerations();
        if (q.classes.size() != 11)
            return std::string("class count is not 11");
        for (const auto& st : q.full.states)
            if (!degen::triple_point_check(st))
                return std::string("a state fails the gluing balance");
        auto join_sorted = [](std::vector<std::string> parts) {
            std::sort(parts.begin(), parts.end());
            std::string key;
            for (const auto& part : parts)
                key += (key.empty() ? "" : "+") + part;
            return key;
        };
        std::map<std::string, const catalog::ClassRow*> rows;
        for (const auto& row : cat.graph.classes)
            rows[join_sorted(row.gamma)] = &row;
        std::map<int, std::string> keys;
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            const auto& rep = q.full.states[q.rep[c]];
            std::string key = join_sorted(degen::classify_gamma(rep));
            auto it = rows.find(key);
            if (it == rows.end()) return "unlisted class " + key;
            const auto& row = *it->second;
            if (row.k2 != std::abs(rep.sides[0].k2))
                return "K^2 level off for " + key;
            if (static_cast<int>(q.classes[c].size()) != row.size)
                return "class size off for " + key;
            keys[static_cast<int>(c)] = row.key;
        }
        if (keys.size() != rows.size())
            return std::string("class sets differ");
        std::set<std::pair<std::string, std::string>> got, want;
        for (const auto& [a, b] : q.edges) {
            auto ka = keys.at(a), kb = keys.at(b);
            got.insert({std::min(ka, kb), std::max(ka, kb)});
        }
        for (const auto& row : cat.graph.classes)
            for (const auto& nb : row.neighbors)
                want.insert({std::min(row.key, nb), std::max(row.key, nb)});
        if (got != want) return std::string("adjacency differs");
        return std::string();
    });

    criterion(7, "involution quotient intersection numbers", [&] {
        std::set<std::string> fixed(cat.involution.fixed.begin(),
                                    cat.involution.fixed.end());
        for (const auto& name : lattice::names()) {
            bool fix = fixed.count(name) > 0;
            Rat got = ns_model::quotient_self_intersection(name, fix);
            long long want;
            if (name == "T")
                want = 4;
            else if (name == "S")
                want = 0;
            else
                want = fix ? -4 : -1;
            if (got != Rat(want)) return "value off for " + name;
            auto it = cat.involution.quotient_self_intersections.find(name);
            if (it == cat.involution.quotient_self_intersections.end() ||
                it->second != want)
                return "catalog value off for " + name;
        }
        return std::string();
    });

    criterion(8, "randomised invariance and round trip suites", [&] {
        std::vector<checks::CheckResult> out;
        checks::run_property_checks(cat, out);
        return collapse(out);
    });

    std::cout << (8 - failures) << " of 8 criteria satisfied\n";
    return failures == 0 ? 0 : 1;
}
