#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <k3deg/dynkin.hpp>

using k3deg::dynkin::classify_graph;

namespace {

// Adjacency for a path 0-1-...-(n-1).
std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return e;
}

std::vector<std::string> classify_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::set<int>> adj;
    std::vector<int> nodes(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = i;
        adj[i];
    }
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return classify_graph<int>(nodes, adj);
}

} // namespace

TEST_CASE("paths classify as A") {
    for (int n = 1; n <= 12; ++n) {
        auto got = classify_edges(n, path_edges(n));
        REQUIRE(got == std::vector<std::string>{"A" + std::to_string(n)});
    }
}

TEST_CASE("fork at the second node classifies as D") {
    for (int n = 4; n <= 12; ++n) {
        auto edges = path_edges(n - 1);
        edges.push_back({1, n - 1});
        auto got = classify_edges(n, edges);
        REQUIRE(got == std::vector<std::string>{"D" + std::to_string(n)});
    }
}

TEST_CASE("fork at the third node classifies as E") {
    for (int n = 6; n <= 18; ++n) {
        auto edges = path_edges(n - 1);
        edges.push_back({2, n - 1});
        auto got = classify_edges(n, edges);
        REQUIRE(got == std::vector<std::string>{"E" + std::to_string(n)});
    }
}

TEST_CASE("disjoint unions come back sorted by name") {
    auto edges = path_edges(3);
    edges.push_back({4, 5});
    edges.push_back({5, 6});
    edges.push_back({6, 7});
    edges.push_back({7, 8});
    edges.push_back({5, 9});
    // nodes 0..2 a path, node 3 isolated, nodes 4..9 a D6 fork.
    auto got = classify_edges(10, edges);
    REQUIRE(got == std::vector<std::string>{"A1", "A3", "D6"});
}

TEST_CASE("classification is invariant under relabelling") {
    std::mt19937 rng(7);
    auto base = path_edges(7);
    base.push_back({2, 7});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : base) edges.push_back({perm[a], perm[b]});
        std::shuffle(edges.begin(), edges.end(), rng);
        REQUIRE(classify_edges(8, edges) ==
                std::vector<std::string>{"E8"});
    }
}

TEST_CASE("non tree shapes are rejected") {
    auto cycle = path_edges(4);
    cycle.push_back({3, 0});
    REQUIRE_THROWS_AS(classify_edges(4, cycle), std::invalid_argument);

    auto star = std::vector<std::pair<int, int>>{
        {0, 1}, {0, 2}, {0, 3}, {0, 4}};
    REQUIRE_THROWS_AS(classify_edges(5, star), std::invalid_argument);

    auto two_forks = path_edges(6);
    two_forks.push_back({1, 6});
    two_forks.push_back({4, 7});
    REQUIRE_THROWS_AS(classify_edges(8, two_forks),
                      std::invalid_argument);
}

TEST_CASE("named root configurations on the ambient lattice") {
    using k3deg::dynkin::classify_names;
    REQUIRE(classify_names({"E1", "E2", "E3"}) ==
            std::vector<std::string>{"A3"});
    // E0 hangs off E3, so dropping E1 turns the fork into a D leg pair.
    REQUIRE(classify_names({"E0", "E2", "E3", "E4", "E5", "E6", "E7"}) ==
            std::vector<std::string>{"D7"});
    REQUIRE(classify_names({"E0", "E1", "E2", "E3", "E4", "E5", "E6",
                            "E7"}) == std::vector<std::string>{"E8"});
    REQUIRE_THROWS_AS(classify_names({"T"}), std::invalid_argument);
}
