#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "k3deg/gram.hpp"
#include "k3deg/rational.hpp"

namespace k3deg::toric {

using RatVert = std::array<Rat, 3>;
using IntVert = std::array<long long, 3>;
using Exponents = std::array<int, 4>;

namespace detail {

inline std::array<Rat, 3> cross(const RatVert& a, const RatVert& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot(const RatVert& a, const RatVert& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline RatVert sub(const RatVert& a, const RatVert& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// Scale a rational inequality n.x <= c to a primitive integer vector
// (n0,n1,n2,c) so equal facet planes collapse to one representative.
inline std::array<long long, 4> primitive_plane(const std::array<Rat, 3>& n,
                                                const Rat& c) {
    std::array<Rat, 4> row{n[0], n[1], n[2], c};
    long long mult = 1;
    for (const auto& x : row)
        mult = std::lcm(mult, x.den());
    std::array<long long, 4> out{};
    long long g = 0;
    for (int i = 0; i < 4; ++i) {
        Rat scaled = row[i] * Rat(mult);
        out[i] = scaled.num();
        g = std::gcd(g, std::llabs(out[i]));
    }
    if (g == 0) throw std::logic_error("degenerate plane");
    for (auto& x : out) x /= g;
    return out;
}

} // namespace detail

// Facet inequalities n.x <= c of the convex hull, found by testing every
// plane spanned by three vertices against the whole vertex set.
inline std::vector<std::array<long long, 4>> facet_planes(
    const std::vector<RatVert>& verts) {
    std::set<std::array<long long, 4>> planes;
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto nv = detail::cross(detail::sub(verts[j], verts[i]),
                                        detail::sub(verts[k], verts[i]));
                if (nv[0] == Rat(0) && nv[1] == Rat(0) && nv[2] == Rat(0))
                    continue;
                Rat c = detail::dot(nv, verts[i]);
                bool all_le = true, all_ge = true;
                for (const auto& v : verts) {
                    Rat d = detail::dot(nv, v);
                    if (d > c) all_le = false;
                    if (d < c) all_ge = false;
                }
                if (all_le && all_ge) continue;
                if (all_le)
                    planes.insert(detail::primitive_plane(nv, c));
                else if (all_ge)
                    planes.insert(detail::primitive_plane(
                        {-nv[0], -nv[1], -nv[2]}, -c));
            }
    if (planes.size() < 4)
        throw std::invalid_argument(
            "vertex set does not span a three dimensional polytope");
    return {planes.begin(), planes.end()};
}

// Vertices of the polar polytope {y : y.x >= -1 on the input}, sorted
// lexicographically. The origin must be strictly interior.
inline std::vector<RatVert> polar_dual(const std::vector<RatVert>& verts) {
    std::set<RatVert> dual;
    for (const auto& p : facet_planes(verts)) {
        if (p[3] <= 0)
            throw std::invalid_argument(
                "origin is not an interior point of the polytope");
        Rat c(p[3]);
        dual.insert({Rat(-p[0]) / c, Rat(-p[1]) / c, Rat(-p[2]) / c});
    }
    return {dual.begin(), dual.end()};
}

inline std::vector<RatVert> to_rational(const std::vector<IntVert>& verts) {
    std::vector<RatVert> out;
    out.reserve(verts.size());
    for (const auto& v : verts) out.push_back({Rat(v[0]), Rat(v[1]), Rat(v[2])});
    return out;
}

inline std::vector<RatVert> polar_dual(const std::vector<IntVert>& verts) {
    return polar_dual(to_rational(verts));
}

inline bool is_reflexive(const std::vector<IntVert>& verts) {
    for (const auto& v : polar_dual(verts))
        for (const auto& x : v)
            if (!x.is_integer()) return false;
    return true;
}

// Index in the ambient integer lattice of the sublattice generated by
// the rows, via the product of Smith invariant factors.
inline long long sublattice_index(const gram::IntMatrix& rows) {
    if (rows.empty()) throw std::invalid_argument("no generators");
    const std::size_t cols = rows[0].size();
    auto snf = gram::smith_normal_form(rows);
    if (snf.factors.size() < cols)
        throw std::invalid_argument(
            "generators cannot span a finite index sublattice");
    long long index = 1;
    for (long long f : snf.factors) {
        if (f == 0)
            throw std::invalid_argument(
                "generators span a sublattice of infinite index");
        index *= f;
    }
    return index;
}

// Grading data of a weighted homogeneous coordinate ring with a finite
// diagonal symmetry group. The first weight must be 1 so exponent
// tuples can be shifted into the character constraint.
struct Grading {
    std::array<int, 4> weights;
    int modulus;
    std::array<int, 4> moduli;

    static Grading from_weights(const std::array<int, 4>& w) {
        Grading g;
        g.weights = w;
        g.modulus = w[0] + w[1] + w[2] + w[3];
        if (w[0] != 1)
            throw std::invalid_argument("first weight must be 1");
        for (int i = 0; i < 4; ++i) {
            if (w[i] <= 0) throw std::invalid_argument("weights must be positive");
            g.moduli[i] = g.modulus / std::gcd(w[i], g.modulus);
        }
        return g;
    }
};

using ClassTuple = std::array<int, 4>;

inline int mod_reduce(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

// Quotient by the diagonal copy: shift every entry by the first one so
// representatives have a leading zero.
inline ClassTuple class_normal_form(const Grading& g, const ClassTuple& t) {
    ClassTuple out{};
    for (int i = 0; i < 4; ++i)
        out[i] = mod_reduce(static_cast<long long>(t[i]) - t[0], g.moduli[i]);
    return out;
}

inline ClassTuple class_add(const Grading& g, const ClassTuple& a,
                            const ClassTuple& b) {
    ClassTuple s{};
    for (int i = 0; i < 4; ++i)
        s[i] = mod_reduce(static_cast<long long>(a[i]) + b[i], g.moduli[i]);
    return class_normal_form(g, s);
}

struct CoxDegree {
    long long degree = 0;
    ClassTuple cls{};

    friend bool operator==(const CoxDegree& a, const CoxDegree& b) {
        return a.degree == b.degree && a.cls == b.cls;
    }
};

// Total weighted degree plus the residual symmetry class of a monomial
// exponent tuple. The class is computed by trading the degree against
// the first coordinate and then reducing modulo the diagonal.
inline CoxDegree cox_degree(const Grading& g, const Exponents& e) {
    long long deg = 0;
    for (int i = 0; i < 4; ++i)
        deg += static_cast<long long>(g.weights[i]) * e[i];
    ClassTuple raw{};
    raw[0] = mod_reduce(e[0] - deg, g.moduli[0]);
    for (int i = 1; i < 4; ++i) raw[i] = mod_reduce(e[i], g.moduli[i]);
    return {deg, class_normal_form(g, raw)};
}

inline int char_value(const Grading& g, const ClassTuple& t,
                      const Exponents& e) {
    long long acc = 0;
    for (int i = 0; i < 4; ++i)
        acc += static_cast<long long>(g.weights[i]) * t[i] * e[i];
    return mod_reduce(acc, g.modulus);
}

// The finite symmetry group: character tuples satisfying the weight
// relation, modulo the diagonal, listed in sorted normal form.
inline std::vector<ClassTuple> group_elements(const Grading& g) {
    std::set<ClassTuple> out;
    ClassTuple t{};
    for (t[0] = 0; t[0] < g.moduli[0]; ++t[0])
        for (t[1] = 0; t[1] < g.moduli[1]; ++t[1])
            for (t[2] = 0; t[2] < g.moduli[2]; ++t[2])
                for (t[3] = 0; t[3] < g.moduli[3]; ++t[3]) {
                    long long rel = 0;
                    for (int i = 0; i < 4; ++i)
                        rel += static_cast<long long>(g.weights[i]) * t[i];
                    if (rel % g.modulus == 0)
                        out.insert(class_normal_form(g, t));
                }
    return {out.begin(), out.end()};
}

struct GroupCount {
    long long constrained = 0;
    long long diagonal = 0;
    long long cosets = 0;
};

// Counts the constrained character tuples, the diagonal subgroup and the
// resulting quotient order; the quotient order must match the element
// enumeration and the defining sublattice index.
inline GroupCount group_order(const Grading& g) {
    GroupCount out;
    ClassTuple t{};
    for (t[0] = 0; t[0] < g.moduli[0]; ++t[0])
        for (t[1] = 0; t[1] < g.moduli[1]; ++t[1])
            for (t[2] = 0; t[2] < g.moduli[2]; ++t[2])
                for (t[3] = 0; t[3] < g.moduli[3]; ++t[3]) {
                    long long rel = 0;
                    for (int i = 0; i < 4; ++i)
                        rel += static_cast<long long>(g.weights[i]) * t[i];
                    if (rel % g.modulus == 0) ++out.constrained;
                }
    std::set<ClassTuple> diag;
    for (int k = 0; k < g.modulus; ++k) {
        ClassTuple d{};
        for (int i = 0; i < 4; ++i) d[i] = mod_reduce(k, g.moduli[i]);
        diag.insert(d);
    }
    out.diagonal = static_cast<long long>(diag.size());
    if (out.constrained % out.diagonal != 0)
        throw std::logic_error("diagonal subgroup does not divide evenly");
    out.cosets = out.constrained / out.diagonal;
    return out;
}

// Monomials of degree equal to the weight sum that are fixed by every
// group element, in lexicographic order.
inline std::vector<Exponents> invariant_monomials(const Grading& g) {
    auto cls = group_elements(g);
    std::set<Exponents> out;
    Exponents e{};
    for (e[0] = 0; e[0] * g.weights[0] <= g.modulus; ++e[0])
        for (e[1] = 0;
             e[0] * g.weights[0] + e[1] * g.weights[1] <= g.modulus; ++e[1])
            for (e[2] = 0; e[0] * g.weights[0] + e[1] * g.weights[1] +
                               e[2] * g.weights[2] <=
                           g.modulus;
                 ++e[2])
                for (e[3] = 0; e[0] * g.weights[0] + e[1] * g.weights[1] +
                                   e[2] * g.weights[2] + e[3] * g.weights[3] <=
                               g.modulus;
                     ++e[3]) {
                    long long deg = 0;
                    for (int i = 0; i < 4; ++i)
                        deg += static_cast<long long>(g.weights[i]) * e[i];
                    if (deg != g.modulus) continue;
                    bool fixed = true;
                    for (const auto& t : cls)
                        if (char_value(g, t, e) != 0) {
                            fixed = false;
                            break;
                        }
                    if (fixed) out.insert(e);
                }
    return {out.begin(), out.end()};
}

// Integer combination of exponent tuples; a combination representing an
// expression invariant under the torus action sums to zero.
inline std::array<long long, 4> combine_exponents(
    const std::vector<std::pair<Exponents, long long>>& parts) {
    std::array<long long, 4> acc{};
    for (const auto& [e, c] : parts)
        for (int i = 0; i < 4; ++i) acc[i] += c * e[i];
    return acc;
}

inline bool invariance_check(
    const std::vector<std::pair<Exponents, long long>>& parts) {
    auto acc = combine_exponents(parts);
    return acc[0] == 0 && acc[1] == 0 && acc[2] == 0 && acc[3] == 0;
}

} // namespace k3deg::toric
