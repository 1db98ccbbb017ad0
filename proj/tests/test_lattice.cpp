#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <k3deg/lattice.hpp>

using namespace k3deg;
using namespace k3deg::lattice;

TEST_CASE("generator table is consistent") {
    REQUIRE(names().size() == kGenerators);
    for (int i = 0; i < kGenerators; ++i)
        REQUIRE(name_index(names()[i]) == i);
    REQUIRE_THROWS_AS(name_index("E99"), std::invalid_argument);
}

TEST_CASE("pairing matrix is symmetric with even diagonal") {
    for (int i = 0; i < kGenerators; ++i)
        for (int j = 0; j < kGenerators; ++j)
            REQUIRE(pair(unit(i), unit(j)) == pair(unit(j), unit(i)));
    for (int i = 0; i < kGenerators; ++i) {
        Rat d = pair(unit(i), unit(i));
        REQUIRE(d.is_integer());
        REQUIRE(d.num() % 2 == 0);
    }
    for (int i = 0; i < kRoots; ++i)
        REQUIRE(pair(unit(i), unit(i)) == Rat(-2));
    REQUIRE(pair(unit(kS), unit(kS)) == Rat(0));
    REQUIRE(pair(unit(kT), unit(kT)) == Rat(2));
    REQUIRE(pair(unit(kS), unit(kT)) == Rat(2));
}

TEST_CASE("vector notation round trips") {
    std::mt19937 rng(2024);
    auto coin = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % (hi - lo + 1));
    };
    for (int trial = 0; trial < 50; ++trial) {
        Vec v = zero();
        for (int i = 0; i < kGenerators; ++i)
            v[i] = Rat(coin(-9, 9), coin(1, 4));
        REQUIRE(parse_vec(format_vec(v)) == v);
    }
    REQUIRE_THROWS(parse_vec("1;2,3"));
}

TEST_CASE("relations pair to zero with everything") {
    for (const Vec& rel : {r1(), r2(), r3()})
        for (int i = 0; i < kGenerators; ++i)
            REQUIRE(pair(rel, unit(i)) == Rat(0));
}

TEST_CASE("canonicalize is an idempotent projection along the relations") {
    std::mt19937 rng(99);
    auto coin = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % (hi - lo + 1));
    };
    for (int trial = 0; trial < 100; ++trial) {
        Vec v = zero();
        for (int i = 0; i < kGenerators; ++i)
            v[i] = Rat(coin(-6, 6), coin(1, 3));
        Vec c = canonicalize(v);
        REQUIRE(canonicalize(c) == c);
        REQUIRE(c[kS] == Rat(0));
        REQUIRE(c[kT] == Rat(0));
        REQUIRE(c[10] == Rat(0));
        for (int i = 0; i < kGenerators; ++i)
            REQUIRE(pair(v, unit(i)) == pair(c, unit(i)));
        Vec shifted = add(v, scale(Rat(coin(-3, 3)), r1()));
        shifted = add(shifted, scale(Rat(coin(-3, 3)), r2()));
        shifted = add(shifted, scale(Rat(coin(-3, 3)), r3()));
        REQUIRE(canonicalize(shifted) == c);
        REQUIRE(lin_equiv(shifted, v));
    }
}

TEST_CASE("floor rounds coordinates after canonicalizing") {
    Vec v = zero();
    v[0] = Rat(7, 2);
    v[5] = Rat(-1, 3);
    Vec f = floor_of(v);
    REQUIRE(integral(f));
    REQUIRE(f[0] == Rat(3));
    REQUIRE(f[5] == Rat(-1));
}

TEST_CASE("degree two polarisation has three sections") {
    // T is the degree two class; RR gives 2 + T^2/2 = 3.
    REQUIRE(riemann_roch(unit(kT)) == Rat(3));
    REQUIRE(nef(unit(kT)));
    REQUIRE(big(unit(kT)));
}

TEST_CASE("distinguished classes of the two elliptic structures") {
    Vec f0 = h_first();
    REQUIRE(pair(f0, f0) == Rat(0));
    REQUIRE(nef(f0));
    Vec f1 = h_second();
    REQUIRE(f1 == add(f0, unit(9)));
    REQUIRE(pair(f1, f1) == Rat(0));
    // Distinct genus one structures: the two fibre classes meet once.
    REQUIRE(pair(f0, f1) == Rat(1));
    REQUIRE_FALSE(lin_equiv(f0, f1));
    REQUIRE(lin_equiv(add(f0, r1()), f0));
}

TEST_CASE("choice of eighteen generators spans an identified sublattice") {
    auto idx = basis18();
    REQUIRE(idx.size() == 18);
    auto g = gram_minor(idx);
    Rat det = determinant(g);
    REQUIRE((det == Rat(1) || det == Rat(-1)));
    auto sig = inertia(g);
    REQUIRE(sig.positive == 1);
    REQUIRE(sig.null == 0);
    REQUIRE(sig.negative == 17);
}

TEST_CASE("verify_section accepts the floor and rejects off by one") {
    Vec d = unit(kT);
    REQUIRE(verify_section(floor_of(scale(Rat(3), d)), 3, d));
    REQUIRE_FALSE(verify_section(add(floor_of(scale(Rat(3), d)), unit(kT)),
                                 3, d));
}
