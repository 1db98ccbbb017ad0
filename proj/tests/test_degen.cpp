#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <k3deg/degen.hpp>

using namespace k3deg::degen;

TEST_CASE("seed state is a balanced pair") {
    State st = seed_state();
    REQUIRE(st.sides[0].k2 == -3);
    REQUIRE(st.sides[1].k2 == 3);
    REQUIRE(triple_point_check(st));
    auto gamma = classify_gamma(st);
    REQUIRE(gamma == std::vector<std::string>{"E12", "E6"});
    auto miss = missing_labels(st);
    REQUIRE(miss == std::set<std::string>{"E12"});
    REQUIRE(eligible(st, 0) == std::vector<std::string>{"c1"});
    REQUIRE(eligible(st, 1) == std::vector<std::string>{"c2"});
}

TEST_CASE("flop moves one unit of K^2 and stays consistent") {
    State st = seed_state();
    std::string nid = flop(st, 1, "c2");
    REQUIRE(st.sides[0].k2 == -4);
    REQUIRE(st.sides[1].k2 == 4);
    REQUIRE(triple_point_check(st));
    auto gamma = classify_gamma(st);
    REQUIRE(gamma == std::vector<std::string>{"D5", "E13"});
    // Undoing on the other side returns to the seed.
    flop(st, 0, nid);
    REQUIRE(canonical(st) == canonical(seed_state()));
}

TEST_CASE("blow down then up restores the side") {
    std::mt19937 rng(321);
    State st = seed_state();
    for (int warm = 0; warm < 4; ++warm) {
        int side = static_cast<int>(rng() % 2);
        auto cands = eligible(st, side);
        if (!cands.empty())
            flop(st, side, cands[rng() % cands.size()]);
    }
    for (int trial = 0; trial < 50; ++trial) {
        int side = static_cast<int>(rng() % 2);
        auto cands = eligible(st, side);
        if (cands.empty()) continue;
        const std::string cid = cands[rng() % cands.size()];
        Side before = st.sides[side];
        auto label = before.curves.at(cid).label;
        std::string pid = blow_down(st.sides[side], cid);
        blow_up(st.sides[side], pid, cid, label);
        REQUIRE(st.sides[side] == before);
    }
}

TEST_CASE("tag accounting over the whole enumeration") {
    auto q = enumerate_degenerations();
    REQUIRE(q.full.states.size() == 21);
    REQUIRE(q.classes.size() == 11);
    REQUIRE(q.edges.size() == 10);
    std::vector<std::size_t> sizes;
    for (const auto& c : q.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    std::vector<std::size_t> want{1};
    want.insert(want.end(), 10, 2);
    REQUIRE(sizes == want);

    for (const auto& st : q.full.states) {
        REQUIRE(triple_point_check(st));
        auto tg = tags(st);
        auto miss = missing_labels(st);
        std::set<std::string> seen;
        for (int s = 0; s < 2; ++s)
            for (const auto& l : tg[s]) REQUIRE(seen.insert(l).second);
        REQUIRE(seen.size() + miss.size() == 19);
        REQUIRE(miss.size() >= 1);
        REQUIRE(miss.size() <= 2);
    }
}

TEST_CASE("single flops change the tagged sets by at most two labels") {
    auto q = enumerate_degenerations();
    for (const auto& [a, b] : q.full.edges) {
        auto ma = missing_labels(q.full.states[a]);
        auto mb = missing_labels(q.full.states[b]);
        std::vector<std::string> sym;
        std::set_symmetric_difference(ma.begin(), ma.end(), mb.begin(),
                                      mb.end(), std::back_inserter(sym));
        REQUIRE(sym.size() >= 1);
        REQUIRE(sym.size() <= 3);
    }
}

TEST_CASE("K^2 census covers every level once, eight twice") {
    auto q = enumerate_degenerations();
    std::map<int, int> census;
    for (const auto& st : q.full.states) ++census[st.sides[0].k2];
    REQUIRE(census.size() == 19);
    for (int k = -9; k <= 9; ++k)
        REQUIRE(census.at(k) == ((k == 8 || k == -8) ? 2 : 1));
}

TEST_CASE("reflection pairs states across the sign of K^2") {
    auto q = enumerate_degenerations();
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        const auto& members = q.classes[c];
        std::set<int> levels;
        for (int m : members) levels.insert(q.full.states[m].sides[0].k2);
        if (members.size() == 2) {
            REQUIRE(levels.size() == 2);
            REQUIRE(*levels.begin() == -*levels.rbegin());
        } else {
            REQUIRE(members.size() == 1);
            REQUIRE(*levels.begin() == 0);
        }
    }
}

TEST_CASE("surface names translate to K^2 and labels mirror") {
    REQUIRE(surface_k2("P2") == 9);
    REQUIRE(surface_k2("F1") == 8);
    REQUIRE(surface_k2("F2") == 8);
    REQUIRE(surface_k2("Bl7(P2)") == 2);
    REQUIRE(surface_k2("Bl17(P2)") == -8);
    REQUIRE_THROWS_AS(surface_k2("K3"), std::invalid_argument);
    REQUIRE(mirror_label("E0") == "E18");
    REQUIRE(mirror_label("E9") == "E9");
    REQUIRE(mirror_label("E13") == "E5");
    REQUIRE_THROWS_AS(mirror_label("S"), std::invalid_argument);
}

TEST_CASE("dot output names every class") {
    auto q = enumerate_degenerations();
    auto dot = to_dot(q, true);
    REQUIRE(dot.find("graph degenerations") != std::string::npos);
    for (std::size_t c = 0; c < q.classes.size(); ++c)
        REQUIRE(dot.find("n" + std::to_string(c) + " [label=") !=
                std::string::npos);
}
