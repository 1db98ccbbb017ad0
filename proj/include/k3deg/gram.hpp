#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3deg/lattice.hpp"

namespace k3deg::gram {

using IntMatrix = lattice::Matrix<long long>;

inline IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Standard negative definite ADE Gram matrices plus the hyperbolic
// plane. The D shape is a chain of n-1 nodes with one extra node on the
// second node from the end; the E shape puts the extra node on the
// third, and is accepted for every n >= 6 (the shapes past E8 are
// merely graphs here, not definite lattices).
inline IntMatrix standard(char family, int n) {
    if (family == 'H') return {{0, 1}, {1, 0}};
    auto chain = [](int size) {
        IntMatrix m(size, std::vector<long long>(size, 0));
        for (int i = 0; i < size; ++i) m[i][i] = -2;
        for (int i = 0; i + 1 < size; ++i) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
        return m;
    };
    auto attach = [](IntMatrix& m, int a, int b) {
        m[a][b] = 1;
        m[b][a] = 1;
    };
    if (family == 'A') {
        if (n < 1) throw std::invalid_argument("A family needs rank >= 1");
        return chain(n);
    }
    if (family == 'D') {
        if (n < 4) throw std::invalid_argument("D family needs rank >= 4");
        IntMatrix m = chain(n);
        m[n - 2][n - 1] = 0;
        m[n - 1][n - 2] = 0;
        attach(m, 1, n - 1);
        return m;
    }
    if (family == 'E') {
        if (n < 6) throw std::invalid_argument("E family needs rank >= 6");
        IntMatrix m = chain(n);
        m[n - 2][n - 1] = 0;
        m[n - 1][n - 2] = 0;
        attach(m, 2, n - 1);
        return m;
    }
    throw std::invalid_argument(std::string("unknown lattice family: ") +
                                family);
}

inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    std::size_t na = a.size();
    std::size_t nb = b.size();
    IntMatrix m(na + nb, std::vector<long long>(na + nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) m[i][j] = a[i][j];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) m[na + i][na + j] = b[i][j];
    return m;
}

inline bool even_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][i] % 2 != 0) return false;
    return true;
}

inline lattice::Matrix<Rat> to_rational(const IntMatrix& m) {
    lattice::Matrix<Rat> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (long long v : m[i]) out[i].push_back(Rat(v));
    }
    return out;
}

struct SmithResult {
    std::vector<long long> factors;
    IntMatrix left;
    IntMatrix right;
};

// Row and column reduction to diagonal form with the transforms carried
// along, so left * input * right equals the diagonal exactly. Factors
// are non-negative, divide in chain order, and end with zeros when the
// matrix is singular.
inline SmithResult smith_normal_form(IntMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols)
            throw std::invalid_argument("ragged matrix");
    IntMatrix u = identity(rows);
    IntMatrix v = identity(cols);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (std::size_t c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
    };

    std::size_t limit = rows < cols ? rows : cols;
    std::size_t t = 0;
    for (; t < limit; ++t) {
        bool have_pivot = false;
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (pi == rows ||
                         std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            have_pivot = true;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                long long q = a[i][t] / a[t][t];
                if (q != 0) add_row(i, t, -q);
                if (a[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                long long q = a[t][j] / a[t][t];
                if (q != 0) add_col(j, t, -q);
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            bool pulled = false;
            for (std::size_t i = t + 1; i < rows && !pulled; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        pulled = true;
                        break;
                    }
            if (!pulled) break;
        }
        if (!have_pivot) break;
    }
    for (std::size_t k = 0; k < limit; ++k)
        if (a[k][k] < 0) {
            for (std::size_t c = 0; c < cols; ++c) a[k][c] = -a[k][c];
            for (std::size_t c = 0; c < rows; ++c) u[k][c] = -u[k][c];
        }

    SmithResult out;
    out.factors.reserve(limit);
    for (std::size_t k = 0; k < limit; ++k) out.factors.push_back(a[k][k]);
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

struct FiniteAbelianGroup {
    std::vector<long long> invariant_factors;
    long long order = 1;
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// Quotient of the standard lattice by the row span of a square integer
// matrix. Nonzero determinant is required; the trivial factors are
// dropped and the order is the product of the rest.
inline FiniteAbelianGroup lattice_quotient(const IntMatrix& rows) {
    if (rows.empty() || rows.size() != rows[0].size())
        throw std::invalid_argument("quotient needs a square matrix");
    SmithResult s = smith_normal_form(rows);
    FiniteAbelianGroup g;
    for (long long f : s.factors) {
        if (f == 0)
            throw std::invalid_argument("sublattice is not of finite index");
        g.order *= f;
        if (f >= 2) g.invariant_factors.push_back(f);
    }
    return g;
}

} // namespace k3deg::gram
