#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <k3deg/lattice.hpp>
#include <k3deg/ns_model.hpp>

using namespace k3deg;
using namespace k3deg::ns_model;

namespace {

// Brute force count of monomials of exact weighted degree n.
long long brute_count(const std::vector<int>& w, long long n) {
    if (w.empty()) return n == 0 ? 1 : 0;
    long long total = 0;
    std::vector<int> rest(w.begin() + 1, w.end());
    for (long long k = 0; k * w[0] <= n; ++k)
        total += brute_count(rest, n - k * w[0]);
    return total;
}

} // namespace

TEST_CASE("monomial counting matches brute force") {
    for (auto& w : std::vector<std::vector<int>>{
             {1, 1, 1}, {1, 1, 2, 3}, {2, 5}, {1, 2, 2, 3, 4}}) {
        for (long long n = 0; n <= 12; ++n)
            REQUIRE(count_monomials(w, n) == brute_count(w, n));
    }
    REQUIRE_THROWS_AS(count_monomials({1, 0}, 3), std::invalid_argument);
}

TEST_CASE("hypersurface section counts by inclusion and exclusion") {
    // Quartic surface in P3: h0(O(n)) - h0(O(n-4)).
    std::vector<int> w{1, 1, 1, 1};
    REQUIRE(hilbert_h0(w, {4}, 1) == 4);
    REQUIRE(hilbert_h0(w, {4}, 2) == 10);
    REQUIRE(hilbert_h0(w, {4}, 4) == 34);
    // Complete intersection of two quadrics in P4.
    std::vector<int> w5{1, 1, 1, 1, 1};
    REQUIRE(hilbert_h0(w5, {2, 2}, 2) == 13);
}

TEST_CASE("strict section count needs a nef and big class") {
    using namespace k3deg::lattice;
    REQUIRE(rr_sections(unit(kT)) == 3);
    REQUIRE_THROWS_AS(rr_sections(h_first()), std::invalid_argument);
    Vec half = scale(Rat(1, 2), unit(kT));
    REQUIRE_THROWS_AS(rr_sections(half), std::invalid_argument);
}

TEST_CASE("quotient intersection numbers under the involution") {
    REQUIRE(quotient_self_intersection("T", true) == Rat(4));
    REQUIRE(quotient_self_intersection("S", false) == Rat(0));
    REQUIRE(quotient_self_intersection("E1", true) == Rat(-4));
    REQUIRE(quotient_self_intersection("E2", false) == Rat(-1));
}

TEST_CASE("ambient lattice identification has no failures") {
    REQUIRE(verify_m_identification().empty());
}
