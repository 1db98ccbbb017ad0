#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3deg {

// Exact rational arithmetic on 64-bit numerator and denominator.
// Intermediate products go through 128-bit integers; a result that does
// not fit back into 64 bits after reduction throws overflow_error.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        reduce_small();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = w(a.num_) * b.den_ + w(b.num_) * a.den_;
        __int128 d = w(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = w(a.num_) * b.den_ - w(b.num_) * a.den_;
        __int128 d = w(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(w(a.num_) * b.num_, w(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(w(a.num_) * b.den_, w(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return w(a.num_) * b.den_ < w(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Accepts "p" or "p/q", optionally signed.
    static Rat parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rat: empty literal");
        std::size_t slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rat(parse_int(s));
        return Rat(parse_int(s.substr(0, slash)),
                   parse_int(s.substr(slash + 1)));
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static __int128 w(std::int64_t v) { return static_cast<__int128>(v); }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rat: value exceeds 64 bits");
        return static_cast<std::int64_t>(v);
    }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rat r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void reduce_small() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static std::int64_t parse_int(std::string_view s) {
        while (!s.empty() && (s.front() == ' ')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ')) s.remove_suffix(1);
        if (s.empty()) throw std::invalid_argument("Rat: empty integer");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("Rat: sign only");
        __int128 acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rat: bad digit in literal");
            acc = acc * 10 + (s[i] - '0');
            if (acc > static_cast<__int128>(INT64_MAX) + 1)
                throw std::overflow_error("Rat: literal exceeds 64 bits");
        }
        return narrow(neg ? -acc : acc);
    }
};

} // namespace k3deg
