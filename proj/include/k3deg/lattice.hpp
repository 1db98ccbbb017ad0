#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "k3deg/rational.hpp"

namespace k3deg::lattice {

// The divisor model: 21 generators named E0..E18, S, T. The 19 root
// classes form a chain E1-..-E17 with E0 attached at E3 and E18 at E15;
// S is isotropic and T has square 2. Divisor classes are rational
// combinations of the generators, written as 21-component vectors.

inline constexpr int kGenerators = 21;
inline constexpr int kRoots = 19;
inline constexpr int kS = 19;
inline constexpr int kT = 20;

using Vec = std::array<Rat, kGenerators>;

inline const std::array<std::string, kGenerators>& names() {
    static const std::array<std::string, kGenerators> v = [] {
        std::array<std::string, kGenerators> a;
        for (int i = 0; i < kRoots; ++i) a[i] = "E" + std::to_string(i);
        a[kS] = "S";
        a[kT] = "T";
        return a;
    }();
    return v;
}

inline int name_index(std::string_view name) {
    const auto& ns = names();
    for (int i = 0; i < kGenerators; ++i)
        if (ns[i] == name) return i;
    throw std::invalid_argument("unknown generator name: " +
                                std::string(name));
}

using Gram = std::array<std::array<int, kGenerators>, kGenerators>;

inline const Gram& gram() {
    static const Gram g = [] {
        Gram m{};
        auto set = [&](int i, int j, int v) {
            m[i][j] = v;
            m[j][i] = v;
        };
        for (int i = 0; i < kRoots; ++i) m[i][i] = -2;
        for (int i = 1; i < 17; ++i) set(i, i + 1, 1);
        set(0, 3, 1);
        set(18, 15, 1);
        m[kS][kS] = 0;
        m[kT][kT] = 2;
        set(kS, kT, 2);
        set(kS, 1, 1);
        set(kS, 17, 1);
        set(kT, 0, 1);
        set(kT, 18, 1);
        return m;
    }();
    return g;
}

inline Vec zero() {
    Vec v{};
    return v;
}

inline Vec unit(int i) {
    Vec v{};
    v.at(static_cast<std::size_t>(i)) = Rat(1);
    return v;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r;
    for (int i = 0; i < kGenerators; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r;
    for (int i = 0; i < kGenerators; ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r;
    for (int i = 0; i < kGenerators; ++i) r[i] = c * a[i];
    return r;
}

inline Rat pair(const Vec& a, const Vec& b) {
    const Gram& g = gram();
    Rat acc;
    for (int i = 0; i < kGenerators; ++i) {
        if (a[i] == Rat(0)) continue;
        for (int j = 0; j < kGenerators; ++j) {
            if (g[i][j] == 0 || b[j] == Rat(0)) continue;
            acc += a[i] * Rat(g[i][j]) * b[j];
        }
    }
    return acc;
}

// Vector notation "a0;a1,...,a17;a18|s,t".
inline Vec parse_vec(std::string_view s) {
    auto split = [](std::string_view text, char sep) {
        std::vector<std::string_view> out;
        std::size_t start = 0;
        while (true) {
            std::size_t p = text.find(sep, start);
            if (p == std::string_view::npos) {
                out.push_back(text.substr(start));
                break;
            }
            out.push_back(text.substr(start, p - start));
            start = p + 1;
        }
        return out;
    };
    std::size_t bar = s.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("divisor literal lacks '|'");
    auto head = split(s.substr(0, bar), ';');
    auto tail = split(s.substr(bar + 1), ',');
    if (head.size() != 3 || tail.size() != 2)
        throw std::invalid_argument("malformed divisor literal");
    auto mids = split(head[1], ',');
    if (mids.size() != 17)
        throw std::invalid_argument("divisor literal needs 17 middle entries");
    Vec v;
    v[0] = Rat::parse(head[0]);
    for (int i = 0; i < 17; ++i) v[i + 1] = Rat::parse(mids[i]);
    v[18] = Rat::parse(head[2]);
    v[kS] = Rat::parse(tail[0]);
    v[kT] = Rat::parse(tail[1]);
    return v;
}

inline std::string format_vec(const Vec& v) {
    std::string out = v[0].str() + ";";
    for (int i = 1; i <= 17; ++i) {
        if (i > 1) out += ",";
        out += v[i].str();
    }
    out += ";" + v[18].str() + "|" + v[kS].str() + "," + v[kT].str();
    return out;
}

inline const Vec& r1() {
    static const Vec v =
        parse_vec("3;2,4,6,5,4,3,2,1,0,-1,-2,-3,-4,-5,-6,-4,-2;-3|0,0");
    return v;
}

inline const Vec& r2() {
    static const Vec v =
        parse_vec("1;0,1,2,2,2,2,2,2,2,2,2,2,2,2,2,1,0;1|-1,0");
    return v;
}

inline const Vec& r3() {
    static const Vec v =
        parse_vec("1;1,2,3,3,3,3,3,3,3,3,3,3,3,3,3,2,1;1|0,-1");
    return v;
}

// Shift by multiples of the three relations to clear the T, S and E10
// coordinates. Every class has exactly one such representative, so two
// classes agree in the quotient iff their canonical forms are equal.
inline Vec canonicalize(Vec v) {
    v = add(v, scale(v[kT], r3()));
    v = add(v, scale(v[kS], r2()));
    v = add(v, scale(v[10], r1()));
    if (v[kT] != Rat(0) || v[kS] != Rat(0) || v[10] != Rat(0))
        throw std::logic_error("canonicalize failed to clear coordinates");
    return v;
}

inline bool lin_equiv(const Vec& a, const Vec& b) {
    return canonicalize(sub(a, b)) == zero();
}

inline Vec floor_of(const Vec& v) {
    Vec r;
    for (int i = 0; i < kGenerators; ++i) r[i] = Rat(v[i].floor());
    return r;
}

inline bool integral(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_integer()) return false;
    return true;
}

inline bool nef(const Vec& v) {
    for (int i = 0; i < kGenerators; ++i)
        if (pair(v, unit(i)) < Rat(0)) return false;
    return true;
}

inline bool big(const Vec& v) { return pair(v, v) > Rat(0); }

inline Rat riemann_roch(const Vec& v) {
    return Rat(2) + pair(v, v) / Rat(2);
}

inline bool verify_section(const Vec& cls, int n, const Vec& d) {
    return lin_equiv(cls, floor_of(scale(Rat(n), d)));
}

inline const Vec& h_first() {
    static const Vec v = parse_vec("3;2,4,6,5,4,3,2,1,0,0,0,0,0,0,0,0,0;0|0,0");
    return v;
}

inline const Vec& h_second() {
    static const Vec v = add(h_first(), unit(9));
    return v;
}

inline const std::vector<int>& e8_block_low() {
    static const std::vector<int> v = [] {
        std::vector<int> b;
        for (int i = 0; i < 8; ++i) b.push_back(i);
        return b;
    }();
    return v;
}

inline const std::vector<int>& e8_block_high() {
    static const std::vector<int> v = [] {
        std::vector<int> b;
        for (int i = 11; i < 19; ++i) b.push_back(i);
        return b;
    }();
    return v;
}

// Indices of the 18 generators spanning the polarising sublattice
// (all roots except E10).
inline const std::vector<int>& basis18() {
    static const std::vector<int> v = [] {
        std::vector<int> b;
        for (int i = 0; i < 10; ++i) b.push_back(i);
        for (int i = 11; i < 19; ++i) b.push_back(i);
        return b;
    }();
    return v;
}

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
K determinant(Matrix<K> a) {
    std::size_t n = a.size();
    K det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!(a[i][k] == K(0))) {
                piv = i;
                break;
            }
        if (piv == n) return K(0);
        if (piv != k) {
            std::swap(a[k], a[piv]);
            det = -det;
        }
        det = det * a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == K(0)) continue;
            K f = a[i][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
        }
    }
    return det;
}

struct Inertia {
    int positive = 0;
    int null = 0;
    int negative = 0;
    bool operator==(const Inertia&) const = default;
};

// Symmetric congruence reduction; counts pivot signs exactly.
template <class K>
Inertia inertia(Matrix<K> a) {
    std::size_t n = a.size();
    Inertia sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == K(0)) {
            std::size_t piv = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!(a[j][j] == K(0))) {
                    piv = j;
                    break;
                }
            if (piv != n) {
                std::swap(a[k], a[piv]);
                for (auto& row : a) std::swap(row[k], row[piv]);
            } else {
                std::size_t oi = n, oj = n;
                for (std::size_t i = k; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (!(a[i][j] == K(0))) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) {
                    sig.null += static_cast<int>(n - k);
                    break;
                }
                for (std::size_t c = 0; c < n; ++c) a[oi][c] += a[oj][c];
                for (std::size_t r = 0; r < n; ++r) a[r][oi] += a[r][oj];
                if (oi != k) {
                    std::swap(a[k], a[oi]);
                    for (auto& row : a) std::swap(row[k], row[oi]);
                }
            }
        }
        K d = a[k][k];
        if (d > K(0))
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == K(0)) continue;
            K f = a[i][k] / d;
            for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a[k][i] = K(0);
            a[i][k] = K(0);
        }
    }
    return sig;
}

inline Matrix<Rat> gram_minor(const std::vector<int>& idxs) {
    Matrix<Rat> m(idxs.size(), std::vector<Rat>(idxs.size()));
    for (std::size_t i = 0; i < idxs.size(); ++i)
        for (std::size_t j = 0; j < idxs.size(); ++j)
            m[i][j] = Rat(gram()[idxs[i]][idxs[j]]);
    return m;
}

} // namespace k3deg::lattice
