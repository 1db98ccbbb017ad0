#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

#include <k3deg/poly.hpp>

using k3deg::Rat;
using k3deg::poly::Monomial;
using k3deg::poly::Poly;

namespace {

// Random sparse polynomial in x, y with small rational coefficients.
// Exponent zero entries are dropped so monomials stay in normal form.
Poly random_poly(std::mt19937& rng) {
    auto roll = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % (hi - lo + 1));
    };
    Poly p;
    int terms = roll(0, 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int xe = roll(0, 3), ye = roll(0, 3);
        if (xe) m["x"] = xe;
        if (ye) m["y"] = ye;
        p += Poly::term(Rat(roll(-5, 5), roll(1, 3)), m);
    }
    return p;
}

} // namespace

TEST_CASE("ring axioms hold on random inputs") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_poly(rng);
        Poly b = random_poly(rng);
        Poly c = random_poly(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == Poly());
        REQUIRE(a * Poly::constant(Rat(1)) == a);
        REQUIRE(a * Poly::constant(Rat(0)) == Poly());
    }
}

TEST_CASE("parse and str agree") {
    for (const char* text :
         {"x^3 + y^2 - 1", "2*x*y/3 - x + 5", "a^2*b - b^2*a",
          "1/2", "-x^2 + x - 1", "t^6 - 2*t^3 + 1"}) {
        Poly p = Poly::parse(text);
        REQUIRE(Poly::parse(p.str()) == p);
    }
    REQUIRE(Poly::parse("(x + y)^2") ==
            Poly::parse("x^2 + 2*x*y + y^2"));
}

TEST_CASE("substitution composes") {
    std::mt19937 rng(34);
    Poly x = Poly::var("x");
    for (int trial = 0; trial < 40; ++trial) {
        Poly p = random_poly(rng);
        Poly q = random_poly(rng);
        Poly r = random_poly(rng);
        // p(x -> q)(y -> r) done jointly or in sequence when q has no y.
        if (q.degree_in("y") == 0) {
            Poly seq = p.substitute("x", q).substitute("y", r);
            Poly joint = p.substitute_all(
                {{"x", q.substitute("y", r)}, {"y", r}});
            REQUIRE(seq == joint);
        }
        // Shift and unshift is the identity.
        REQUIRE(p.substitute("x", x - q.substitute("x", Poly()))
                    .substitute("x", x + q.substitute("x", Poly())) == p);
    }
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937 rng(56);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng);
        Poly b = random_poly(rng);
        REQUIRE((a * b).derivative("x") ==
                a.derivative("x") * b + a * b.derivative("x"));
    }
}

TEST_CASE("clearing denominators inverts as multiplication") {
    Poly p = Poly::term(Rat(1), {{"x", -2}}) +
             Poly::term(Rat(3), {{"y", -1}, {"x", 1}}) +
             Poly::constant(Rat(5));
    auto [cleared, mult] = p.clear_denominators();
    REQUIRE(mult == Monomial{{"x", 2}, {"y", 1}});
    REQUIRE(cleared.min_exponent_in("x") >= 0);
    REQUIRE(cleared.min_exponent_in("y") >= 0);
    REQUIRE(cleared == p * Poly::term(Rat(1), mult));
}

TEST_CASE("weighted and plain homogeneous degrees") {
    using k3deg::poly::homogeneous_degree;
    Poly p = Poly::parse("x^6 + x^3*y^2 + y^4 - z");
    std::map<std::string, int> w{{"x", 2}, {"y", 3}, {"z", 12}};
    REQUIRE(homogeneous_degree(p, w) == 12);
    std::map<std::string, int> plain{{"x", 1}, {"y", 1}, {"z", 1}};
    REQUIRE_FALSE(homogeneous_degree(p, plain).has_value());
}

TEST_CASE("power completion kills the subleading coefficient") {
    using k3deg::poly::complete_power;
    Poly p = Poly::parse("y^2 + 3*x*y + x^3 - 2");
    auto done = complete_power(p, "y", 2);
    REQUIRE(done.shift == Poly::parse("3*x/2"));
    REQUIRE(done.reduced.coeff_in("y", 1).zero());
    REQUIRE(done.reduced.substitute(
                "y", Poly::var("y") + done.shift) == p);

    Poly cubic = Poly::parse("x^3 + 6*x^2 + z*x + 1");
    auto done3 = complete_power(cubic, "x", 3);
    REQUIRE(done3.shift == Poly::constant(Rat(2)));
    REQUIRE(done3.reduced.coeff_in("x", 2).zero());

    REQUIRE_THROWS_AS(complete_power(Poly::parse("x^4 + x^3"), "x", 4),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        complete_power(Poly::parse("z*y^2 + x*y + 1"), "y", 2),
        std::domain_error);
}
