#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3deg/rational.hpp"

namespace k3deg::poly {

// Exponent map of a single monomial; only nonzero exponents are stored
// and negative exponents are allowed.
using Monomial = std::map<std::string, int>;

// Sparse multivariate polynomial over exact rationals. Symbols carry no
// intrinsic meaning, so ambient variables and named parameters live in
// the same ring and callers decide which symbols count for grading.
class Poly {
public:
    using Terms = std::map<Monomial, Rat>;

    Poly() = default;

    static Poly constant(const Rat& c) {
        Poly p;
        if (c != Rat(0)) p.terms_[Monomial{}] = c;
        return p;
    }

    static Poly var(const std::string& name, int power = 1) {
        Poly p;
        Monomial m;
        if (power != 0) m[name] = power;
        p.terms_[m] = Rat(1);
        return p;
    }

    static Poly term(const Rat& c, const Monomial& m) {
        Poly p;
        if (c != Rat(0)) p.terms_[m] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant())
            throw std::invalid_argument("polynomial is not constant");
        return terms_.begin()->second;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
        return r;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.accumulate(merge(ma, mb), ca * cb);
        return r;
    }

    friend Poly operator*(const Poly& a, const Rat& c) {
        Poly r;
        if (c == Rat(0)) return r;
        for (const auto& [m, cc] : a.terms_) r.terms_[m] = cc * c;
        return r;
    }

    friend Poly operator/(const Poly& a, const Rat& c) {
        if (c == Rat(0)) throw std::domain_error("division by zero");
        return a * (Rat(1) / c);
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly r = constant(Rat(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    int degree_in(const std::string& v) const {
        int best = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            int e = it == m.end() ? 0 : it->second;
            if (first || e > best) best = e;
            first = false;
        }
        return best;
    }

    int min_exponent_in(const std::string& v) const {
        int best = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            int e = it == m.end() ? 0 : it->second;
            if (first || e < best) best = e;
            first = false;
        }
        return best;
    }

    // Terms whose exponent of v equals e, with v struck out.
    Poly coeff_in(const std::string& v, int e) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            int got = it == m.end() ? 0 : it->second;
            if (got != e) continue;
            Monomial rest = m;
            rest.erase(v);
            r.terms_[rest] = c;
        }
        return r;
    }

    Poly derivative(const std::string& v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) continue;
            int e = it->second;
            Monomial down = m;
            if (e == 1)
                down.erase(v);
            else
                down[v] = e - 1;
            r.accumulate(down, c * Rat(e));
        }
        return r;
    }

    // Simultaneous substitution. Negative powers of a substituted symbol
    // require the image to be a single term so it can be inverted.
    Poly substitute_all(const std::map<std::string, Poly>& images) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Poly acc = constant(c);
            Monomial untouched;
            for (const auto& [v, e] : m) {
                auto it = images.find(v);
                if (it == images.end()) {
                    untouched[v] = e;
                    continue;
                }
                acc = acc * raise(it->second, e);
            }
            out += acc * var_product(untouched);
        }
        return out;
    }

    Poly substitute(const std::string& v, const Poly& image) const {
        return substitute_all({{v, image}});
    }

    // Minimal monomial multiple clearing every negative exponent, with
    // the multiplier reported alongside the result.
    std::pair<Poly, Monomial> clear_denominators() const {
        Monomial clearing;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m)
                if (e < 0 && -e > clearing[v]) clearing[v] = -e;
        for (auto it = clearing.begin(); it != clearing.end();)
            it = it->second == 0 ? clearing.erase(it) : std::next(it);
        Poly cleared = *this * var_product(clearing);
        return {cleared, clearing};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (out.empty()) {
                if (a < Rat(0)) {
                    out += "-";
                    a = -a;
                }
            } else if (a < Rat(0)) {
                out += " - ";
                a = -a;
            } else {
                out += " + ";
            }
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += a.str();
            } else if (a == Rat(1)) {
                out += mono;
            } else if (a.is_integer()) {
                out += a.str() + "*" + mono;
            } else {
                out += std::to_string(a.num()) + "*" + mono + "/" +
                       std::to_string(a.den());
            }
        }
        return out;
    }

    static Poly parse(std::string_view text);

private:
    Terms terms_;

    void accumulate(const Monomial& m, const Rat& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != Rat(0)) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second == Rat(0)) terms_.erase(it);
    }

    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (const auto& [v, e] : b) {
            int total = (m.count(v) ? m[v] : 0) + e;
            if (total == 0)
                m.erase(v);
            else
                m[v] = total;
        }
        return m;
    }

    static Poly var_product(const Monomial& m) {
        Poly p = constant(Rat(1));
        if (!m.empty()) p.terms_ = {{m, Rat(1)}};
        return p;
    }

    static Poly raise(const Poly& p, int e) {
        if (e >= 0) return p.pow(e);
        if (p.terms_.size() != 1)
            throw std::invalid_argument(
                "negative power of a non-monomial image");
        const auto& [m, c] = *p.terms_.begin();
        Monomial inv;
        for (const auto& [v, k] : m) inv[v] = -k;
        return term(Rat(1) / c, inv).pow(-e);
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("trailing input");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() &&
               (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n'))
            ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = product();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += product();
            else if (eat('-'))
                acc -= product();
            else
                break;
        }
        return acc;
    }

    Poly product() {
        Poly acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.zero())
                    fail("division is only by nonzero constants");
                acc = acc / d.constant_value();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            int e = integer();
            if (neg) e = -e;
            if (e >= 0) return base.pow(e);
            if (base.terms().size() != 1)
                fail("negative power of a non-monomial");
            const auto& [m, c] = *base.terms().begin();
            Monomial im;
            for (const auto& [v, k] : m) im[v] = -k;
            return Poly::term(Rat(1) / c, im).pow(-e);
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c >= '0' && c <= '9') return Poly::constant(Rat(integer()));
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::string name;
            while (pos_ < s_.size()) {
                char d = s_[pos_];
                bool ok = (d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
                          (d >= '0' && d <= '9') || d == '_';
                if (!ok) break;
                name += d;
                ++pos_;
            }
            return Poly::var(name);
        }
        fail("expected a number, a symbol or '('");
    }

    int integer() {
        skip();
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9')
            fail("expected digits");
        long long acc = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            acc = acc * 10 + (s_[pos_] - '0');
            if (acc > INT32_MAX) fail("integer literal too large");
            ++pos_;
        }
        return static_cast<int>(acc);
    }
};

} // namespace detail

inline Poly Poly::parse(std::string_view text) {
    return detail::Parser(text).run();
}

inline long long weighted_degree(const Monomial& m,
                                 const std::map<std::string, int>& weights) {
    long long acc = 0;
    for (const auto& [v, e] : m) {
        auto it = weights.find(v);
        if (it != weights.end())
            acc += static_cast<long long>(e) * it->second;
    }
    return acc;
}

// Common weighted degree of all terms, or nothing when they disagree.
// Symbols missing from the weight map count zero, which is how the
// coefficient parameters stay out of the grading.
inline std::optional<long long> homogeneous_degree(
    const Poly& p, const std::map<std::string, int>& weights) {
    std::optional<long long> deg;
    for (const auto& [m, c] : p.terms()) {
        long long d = weighted_degree(m, weights);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<long long>(0);
}

struct CompletedPower {
    Poly reduced;
    Poly shift;
};

// Eliminates the degree k-1 coefficient of var by the substitution
// var -> var - shift, where shift is the subleading coefficient divided
// by k times the leading one. The leading coefficient must be a single
// term and the division must close up in the polynomial ring.
inline CompletedPower complete_power(const Poly& p, const std::string& var,
                                     int k) {
    if (k != 2 && k != 3)
        throw std::invalid_argument("complete_power expects k of 2 or 3");
    if (p.min_exponent_in(var) < 0)
        throw std::invalid_argument("polynomial has negative powers of " +
                                    var);
    if (p.degree_in(var) != k)
        throw std::invalid_argument("polynomial does not have degree " +
                                    std::to_string(k) + " in " + var);
    Poly lead = p.coeff_in(var, k);
    if (lead.terms().size() != 1)
        throw std::domain_error("leading coefficient is not a single term");
    const auto& [lm, lc] = *lead.terms().begin();
    Poly sub = p.coeff_in(var, k - 1);
    Poly shift;
    for (const auto& [m, c] : sub.terms()) {
        Monomial q = m;
        for (const auto& [v, e] : lm) {
            int total = (q.count(v) ? q[v] : 0) - e;
            if (total == 0)
                q.erase(v);
            else
                q[v] = total;
        }
        for (const auto& [v, e] : q)
            if (e < 0)
                throw std::domain_error(
                    "subleading coefficient is not divisible by the "
                    "leading term");
        shift += Poly::term(c / (lc * Rat(k)), q);
    }
    Poly reduced = p.substitute(var, Poly::var(var) - shift);
    if (!reduced.coeff_in(var, k - 1).zero())
        throw std::logic_error("power completion left a subleading term");
    if (reduced.substitute(var, Poly::var(var) + shift) != p)
        throw std::logic_error("power completion shift does not invert");
    return {std::move(reduced), std::move(shift)};
}

} // namespace k3deg::poly
