#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3deg/dynkin.hpp"
#include "k3deg/lattice.hpp"
#include "k3deg/rational.hpp"

namespace k3deg::ns_model {

using lattice::Vec;

// Number of monomials of weighted total degree n in one variable per weight.
inline long long count_monomials(const std::vector<int>& weights,
                                 long long n) {
    if (n < 0) return 0;
    std::vector<long long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        for (long long k = w; k <= n; ++k)
            dp[static_cast<std::size_t>(k)] +=
                dp[static_cast<std::size_t>(k - w)];
    }
    return dp[static_cast<std::size_t>(n)];
}

// Dimension of the degree n*d piece of the coordinate ring of a complete
// intersection in weighted projective space, via inclusion-exclusion over
// the defining equations. The intersection must have expected codimension
// and degrees low enough that no higher Koszul syzygies contribute, which
// holds for every model shipped in the catalog.
inline long long hilbert_h0(const std::vector<int>& weights,
                            const std::vector<int>& degrees, long long n) {
    std::size_t r = degrees.size();
    if (r > 16) throw std::invalid_argument("too many equations");
    long long total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        long long drop = 0;
        int bits = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i)) {
                drop += degrees[i];
                ++bits;
            }
        long long c = count_monomials(weights, n - drop);
        total += (bits % 2 == 0) ? c : -c;
    }
    return total;
}

// Expected section count 2 + D^2/2 for a big and nef class with integral
// canonical representative. Refuses anything outside that range instead of
// returning a number the formula does not control.
inline long long rr_sections(const Vec& d) {
    Vec c = lattice::canonicalize(d);
    if (!lattice::integral(c))
        throw std::invalid_argument(
            "class is not integral modulo the three relations");
    if (!lattice::nef(d))
        throw std::invalid_argument("class is not nef");
    if (!lattice::big(d))
        throw std::invalid_argument("class has non-positive self intersection");
    Rat rr = lattice::riemann_roch(d);
    if (!rr.is_integer())
        throw std::logic_error("section count is not an integer");
    return rr.num();
}

inline Vec floor_multiple(const Vec& d, long long n) {
    return lattice::floor_of(lattice::scale(Rat(n), d));
}

// Self intersection of a generator's image on the quotient by the
// involution: fixed curves push down with a factor 2, curves swapped with a
// partner descend with a factor 1/2.
inline Rat quotient_self_intersection(const std::string& name, bool fixed) {
    int i = lattice::name_index(name);
    Rat c2(lattice::gram()[i][i]);
    return fixed ? Rat(2) * c2 : c2 / Rat(2);
}

// Confirms that the 18 retained generators span a copy of the even
// unimodular lattice of signature (1,17) split as U + E8 + E8.
inline std::vector<std::string> verify_m_identification() {
    std::vector<std::string> failures;
    auto minor = lattice::gram_minor(lattice::basis18());
    Rat det = lattice::determinant(minor);
    if (det != Rat(1) && det != Rat(-1))
        failures.push_back("retained basis determinant is " + det.str() +
                           ", expected a unit");
    for (std::size_t i = 0; i < minor.size(); ++i) {
        Rat half = minor[i][i] / Rat(2);
        if (!half.is_integer()) {
            failures.push_back("retained basis has an odd diagonal entry");
            break;
        }
    }
    auto sig = lattice::inertia(minor);
    if (!(sig == lattice::Inertia{1, 0, 17}))
        failures.push_back("retained basis signature is (" +
                           std::to_string(sig.positive) + "," +
                           std::to_string(sig.null) + "," +
                           std::to_string(sig.negative) +
                           "), expected (1,0,17)");
    const Vec& h1 = lattice::h_first();
    const Vec& h2 = lattice::h_second();
    if (lattice::pair(h1, h1) != Rat(0) || lattice::pair(h2, h2) != Rat(0) ||
        lattice::pair(h1, h2) != Rat(1))
        failures.push_back("hyperbolic generators do not pair as [[0,1],[1,0]]");
    for (const auto* block :
         {&lattice::e8_block_low(), &lattice::e8_block_high()}) {
        for (int i : *block) {
            Vec e = lattice::unit(i);
            if (lattice::pair(h1, e) != Rat(0) ||
                lattice::pair(h2, e) != Rat(0)) {
                failures.push_back(
                    "hyperbolic generators are not orthogonal to the E8 "
                    "blocks");
                break;
            }
        }
        auto labels = dynkin::classify_generators(*block);
        if (labels != std::vector<std::string>{"E8"})
            failures.push_back("an eight generator block is not of type E8");
    }
    return failures;
}

struct FibreInput {
    Vec cls;
    std::map<std::string, int> marks;
    std::string type;
};

struct FibrationInput {
    std::string name;
    std::vector<FibreInput> fibres;
    std::vector<std::string> sections;
    std::vector<int> euler;
};

// Component count of a Kodaira fibre by symbol; covers the two shapes the
// catalog uses.
inline std::optional<int> fibre_component_count(const std::string& type) {
    if (type == "II*") return 9;
    if (type.size() >= 3 && type.front() == 'I' && type.back() == '*') {
        std::string digits = type.substr(1, type.size() - 2);
        if (digits.empty()) return std::nullopt;
        for (char c : digits)
            if (c < '0' || c > '9') return std::nullopt;
        return std::stoi(digits) + 5;
    }
    return std::nullopt;
}

// Full consistency check of one elliptic fibration record: fibre classes
// are isotropic, nef, supported exactly on the marked components with the
// stated multiplicities, have the shape their Kodaira symbol demands, meet
// every listed section once, and the Euler numbers add up to 24.
inline std::vector<std::string> check_fibration(const FibrationInput& f) {
    std::vector<std::string> failures;
    auto complain = [&](const std::string& msg) {
        failures.push_back(f.name + ": " + msg);
    };
    for (std::size_t fi = 0; fi < f.fibres.size(); ++fi) {
        const FibreInput& fib = f.fibres[fi];
        std::string tag = "fibre " + std::to_string(fi) + " (" + fib.type +
                          ")";
        if (lattice::pair(fib.cls, fib.cls) != Rat(0))
            complain(tag + " has nonzero self intersection");
        if (!lattice::nef(fib.cls)) complain(tag + " is not nef");
        std::vector<int> support;
        Vec rebuilt = lattice::zero();
        bool marks_ok = true;
        for (const auto& [name, m] : fib.marks) {
            int i = lattice::name_index(name);
            support.push_back(i);
            if (m <= 0) {
                complain(tag + " has a non-positive multiplicity on " + name);
                marks_ok = false;
            }
            rebuilt = lattice::add(rebuilt, lattice::scale(Rat(m),
                                                           lattice::unit(i)));
        }
        if (rebuilt != fib.cls)
            complain(tag + " class is not the stated combination of its "
                           "components");
        for (int i : support)
            if (lattice::pair(fib.cls, lattice::unit(i)) != Rat(0))
                complain(tag + " is not orthogonal to component " +
                         lattice::names()[i]);
        auto want = fibre_component_count(fib.type);
        if (!want) {
            complain(tag + " has an unrecognized Kodaira symbol");
            continue;
        }
        if (static_cast<int>(support.size()) != *want) {
            complain(tag + " has " + std::to_string(support.size()) +
                     " components, symbol demands " + std::to_string(*want));
            continue;
        }
        if (!marks_ok) continue;
        if (fib.type == "II*") {
            auto labels = dynkin::classify_generators(support);
            if (labels != std::vector<std::string>{"E9"})
                complain(tag + " support is not a single E9 chain");
            std::vector<int> profile;
            for (const auto& [name, m] : fib.marks) profile.push_back(m);
            std::sort(profile.begin(), profile.end());
            if (profile != std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6})
                complain(tag + " multiplicities do not match the II* fibre");
        } else {
            int n = *want - 5;
            const auto& g = lattice::gram();
            std::map<int, int> degree;
            for (int a : support) degree[a] = 0;
            bool adjacency_ok = true;
            for (std::size_t a = 0; a < support.size(); ++a)
                for (std::size_t b = a + 1; b < support.size(); ++b) {
                    int p = g[support[a]][support[b]];
                    if (p != 0 && p != 1) {
                        complain(tag + " has an unexpected internal pairing");
                        adjacency_ok = false;
                    }
                    if (p == 1) {
                        ++degree[support[a]];
                        ++degree[support[b]];
                    }
                }
            if (!adjacency_ok) continue;
            std::vector<int> profile;
            for (const auto& [v, deg] : degree) profile.push_back(deg);
            std::sort(profile.begin(), profile.end());
            std::vector<int> expect{1, 1, 1, 1};
            for (int k = 1; k < n; ++k) expect.push_back(2);
            expect.push_back(3);
            expect.push_back(3);
            std::sort(expect.begin(), expect.end());
            if (profile != expect) {
                complain(tag + " support is not a D-shaped chain of type I" +
                         std::to_string(n) + "*");
                continue;
            }
            for (const auto& [v, deg] : degree)
                if (deg == 1 &&
                    fib.marks.at(lattice::names()[v]) != 1)
                    complain(tag + " has an outer component of multiplicity "
                                   "other than 1");
        }
        for (const auto& s : f.sections) {
            int i = lattice::name_index(s);
            if (lattice::pair(fib.cls, lattice::unit(i)) != Rat(1))
                complain(tag + " does not meet section " + s + " once");
        }
    }
    for (std::size_t a = 0; a + 1 < f.fibres.size(); ++a)
        if (!lattice::lin_equiv(f.fibres[a].cls, f.fibres[a + 1].cls))
            complain("fibre classes " + std::to_string(a) + " and " +
                     std::to_string(a + 1) + " are not linearly equivalent");
    long long euler = 0;
    for (int e : f.euler) euler += e;
    if (euler != 24)
        complain("Euler numbers sum to " + std::to_string(euler) +
                 ", expected 24");
    return failures;
}

} // namespace k3deg::ns_model
