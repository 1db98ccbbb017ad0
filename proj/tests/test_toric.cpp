#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <k3deg/gram.hpp>
#include <k3deg/toric.hpp>

using namespace k3deg;
using namespace k3deg::toric;

namespace {

// The weighted projective simplex P(1,1,4,6) shifted so the origin is
// interior, the running example throughout the toric layer.
const std::vector<IntVert> kVerts{
    {-1, -1, -1}, {11, -1, -1}, {-1, 2, -1}, {-1, -1, 1}};

} // namespace

TEST_CASE("simplex is reflexive and duality is an involution") {
    REQUIRE(is_reflexive(kVerts));
    auto rational = to_rational(kVerts);
    auto dual = polar_dual(kVerts);
    auto back = polar_dual(dual);
    // Compare as vertex sets; duality may reorder.
    auto key = [](const std::vector<RatVert>& vs) {
        std::set<std::array<std::string, 3>> s;
        for (const auto& v : vs)
            s.insert({v[0].str(), v[1].str(), v[2].str()});
        return s;
    };
    REQUIRE(key(back) == key(rational));
    REQUIRE(key(dual) != key(rational));
}

TEST_CASE("standard simplex is reflexive, a dilate is not") {
    std::vector<IntVert> p3{
        {-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};
    REQUIRE(is_reflexive(p3));
    std::vector<IntVert> doubled;
    for (const auto& v : p3)
        doubled.push_back({2 * v[0], 2 * v[1], 2 * v[2]});
    REQUIRE_FALSE(is_reflexive(doubled));
}

TEST_CASE("vertex sublattice has index six") {
    gram::IntMatrix rows;
    for (const auto& v : kVerts)
        rows.push_back({v[0], v[1], v[2]});
    REQUIRE(sublattice_index(rows) == 6);
}

TEST_CASE("grading from the weight relation") {
    auto g = Grading::from_weights({1, 1, 4, 6});
    REQUIRE(g.modulus == 12);
    REQUIRE(g.moduli == std::array<int, 4>{12, 12, 3, 2});
    REQUIRE(group_elements(g).size() == 6);
    REQUIRE(group_order(g).cosets == 6);
    REQUIRE_THROWS_AS(Grading::from_weights({2, 3, 4, 6}),
                      std::invalid_argument);
}

TEST_CASE("degrees add under multiplication of monomials") {
    auto g = Grading::from_weights({1, 1, 4, 6});
    Exponents a{3, 1, 2, 0}, b{0, 2, 1, 1};
    Exponents ab;
    for (int i = 0; i < 4; ++i) ab[i] = a[i] + b[i];
    auto da = cox_degree(g, a);
    auto db = cox_degree(g, b);
    auto dab = cox_degree(g, ab);
    REQUIRE(dab.degree == da.degree + db.degree);
    REQUIRE(dab.cls == class_add(g, da.cls, db.cls));
}

TEST_CASE("anticanonical invariant family has nine members") {
    auto g = Grading::from_weights({1, 1, 4, 6});
    auto fam = invariant_monomials(g);
    REQUIRE(fam.size() == 9);
    REQUIRE(std::is_sorted(fam.begin(), fam.end()));
    for (const auto& e : fam) {
        auto d = cox_degree(g, e);
        REQUIRE(d.degree == 12);
        REQUIRE(d.cls == ClassTuple{0, 0, 0, 0});
    }
    // The coordinate product and the pure powers are all in the family.
    REQUIRE(std::count(fam.begin(), fam.end(),
                       Exponents{1, 1, 1, 1}) == 1);
    REQUIRE(std::count(fam.begin(), fam.end(),
                       Exponents{12, 0, 0, 0}) == 1);
    REQUIRE(std::count(fam.begin(), fam.end(),
                       Exponents{0, 0, 3, 0}) == 1);
    REQUIRE(std::count(fam.begin(), fam.end(),
                       Exponents{0, 0, 0, 2}) == 1);
}

TEST_CASE("invariance check accepts balanced coefficient combinations") {
    // The combination a4^2/(a0*a1) of family members is torus
    // invariant; a4/(a0*a1) and a bare a4 are not.
    std::vector<std::pair<Exponents, long long>> good{
        {{6, 6, 0, 0}, 1}, {{12, 0, 0, 0}, -1}, {{0, 12, 0, 0}, -1}};
    std::vector<std::pair<Exponents, long long>> bad{{{6, 6, 0, 0}, 1}};
    auto total_good = combine_exponents(good);
    REQUIRE(total_good == std::array<long long, 4>{-6, -6, 0, 0});
    REQUIRE_FALSE(invariance_check(good));
    std::vector<std::pair<Exponents, long long>> scaled{
        {{6, 6, 0, 0}, 2}, {{12, 0, 0, 0}, -1}, {{0, 12, 0, 0}, -1}};
    REQUIRE(invariance_check(scaled));
    REQUIRE_FALSE(invariance_check(bad));
}
