#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "k3deg/dynkin.hpp"

namespace k3deg::degen {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error(what);
}

// A curve on one component of a degenerate surface pair: its
// self-intersection, its degree against the polarisation, and the
// lattice label it carries once it has become a (-2) curve.
struct Curve {
    int sq = 0;
    int d = 0;
    std::optional<std::string> label;

    friend bool operator==(const Curve&, const Curve&) = default;
};

// Point data maps a curve id to (multiplicity, depth) of the curve at
// an infinitely near marked point.
using PointData = std::map<std::string, std::pair<int, int>>;

struct Side {
    std::map<std::string, Curve> curves;
    std::map<std::string, PointData> points;
    std::map<std::pair<std::string, std::string>, int> inter;
    int k2 = 0;
    int d2 = 0;

    friend bool operator==(const Side&, const Side&) = default;

    int get_i(const std::string& a, const std::string& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = inter.find(key);
        return it == inter.end() ? 0 : it->second;
    }

    void set_i(const std::string& a, const std::string& b, int v) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (v)
            inter[key] = v;
        else
            inter.erase(key);
    }
};

struct State {
    std::array<Side, 2> sides;
    std::array<std::string, 2> shared;
    int next_id = 1;
};

// Contracts a transverse (-1) curve of degree 1. Curves through it pick
// up its intersection numbers, the marked point remembers the infinitely
// near data, and both K^2 and the degree square rise by one.
inline std::string blow_down(Side& s, const std::string& cid) {
    auto cit = s.curves.find(cid);
    require(cit != s.curves.end(), "blow_down of an unknown curve");
    require(cit->second.sq == -1 && cit->second.d == 1,
            "blow_down needs a (-1) curve of degree 1");
    std::vector<std::string> locs;
    for (const auto& [pid, p] : s.points)
        if (p.count(cid)) locs.push_back(pid);
    require(locs.size() == 1, "curve must sit at exactly one marked point");
    const std::string pid = locs[0];
    require(s.points[pid][cid] == std::make_pair(1, 1),
            "curve must be transverse at its marked point");
    std::vector<std::string> others;
    for (const auto& [e, c] : s.curves)
        if (e != cid) others.push_back(e);
    std::map<std::string, int> ic;
    for (const auto& e : others) ic[e] = s.get_i(e, cid);
    for (std::size_t i = 0; i < others.size(); ++i)
        for (std::size_t j = i + 1; j < others.size(); ++j) {
            const auto& e = others[i];
            const auto& f = others[j];
            if (ic[e] && ic[f]) s.set_i(e, f, s.get_i(e, f) + ic[e] * ic[f]);
        }
    for (const auto& e : others)
        if (ic[e]) {
            s.curves[e].sq += ic[e] * ic[e];
            s.curves[e].d += ic[e];
        }
    s.k2 += 1;
    s.d2 += 1;
    PointData q = s.points[pid];
    q.erase(cid);
    for (const auto& e : others)
        if (ic[e] > 0) {
            int old = q.count(e) ? q[e].second : 0;
            q[e] = {ic[e], old + ic[e]};
        }
    s.points[pid] = q;
    s.curves.erase(cid);
    for (auto it = s.inter.begin(); it != s.inter.end();)
        it = (it->first.first == cid || it->first.second == cid)
                 ? s.inter.erase(it)
                 : std::next(it);
    return pid;
}

// Inverse of blow_down: inserts a fresh (-1) curve at a marked point and
// peels one level off the infinitely near data there.
inline std::string blow_up(Side& s, const std::string& pid,
                           const std::string& new_id,
                           std::optional<std::string> label = std::nullopt) {
    auto pit = s.points.find(pid);
    require(pit != s.points.end(), "blow_up at an unknown point");
    require(!s.curves.count(new_id), "curve id already in use");
    s.curves[new_id] = Curve{-1, 1, std::move(label)};
    PointData newp{{new_id, {1, 1}}};
    std::vector<std::pair<std::string, std::pair<int, int>>> entries(
        pit->second.begin(), pit->second.end());
    for (const auto& [e, mk] : entries) {
        int m = mk.first, k = mk.second;
        s.curves[e].sq -= m * m;
        s.curves[e].d -= m;
        s.set_i(e, new_id, m);
        require(k >= m, "point depth must cover the multiplicity");
        if (k - m > 0) newp[e] = {m, k - m};
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& e = entries[i].first;
            const auto& f = entries[j].first;
            int nv = s.get_i(e, f) - entries[i].second.first *
                                         entries[j].second.first;
            require(nv >= 0, "excess intersection must stay nonnegative");
            s.set_i(e, f, nv);
        }
    s.points[pid] = newp;
    s.k2 -= 1;
    s.d2 -= 1;
    return new_id;
}

// Curves that can flop: transverse (-1) curves of degree 1 sitting only
// at the shared marked point of their side.
inline std::vector<std::string> eligible(const State& st, int side) {
    const Side& s = st.sides[side];
    const std::string& shared = st.shared[side];
    std::vector<std::string> out;
    for (const auto& [cid, c] : s.curves) {
        if (c.sq != -1 || c.d != 1) continue;
        std::vector<std::string> locs;
        for (const auto& [pid, p] : s.points)
            if (p.count(cid)) locs.push_back(pid);
        if (locs != std::vector<std::string>{shared}) continue;
        auto it = s.points.at(shared).find(cid);
        if (it != s.points.at(shared).end() &&
            it->second == std::make_pair(1, 1))
            out.push_back(cid);
    }
    return out;
}

// Contracts an eligible curve on one side and blows up the shared point
// on the other. A curve that lands on square -2 under the blow-up
// inherits the contracted curve's label, which is how lattice labels
// migrate across the pair.
inline std::string flop(State& st, int side, const std::string& cid) {
    Side& s = st.sides[side];
    Side& t = st.sides[1 - side];
    auto lam = s.curves.at(cid).label;
    std::string pid = blow_down(s, cid);
    require(pid == st.shared[side], "flopped curve must sit at the shared point");
    std::string new_id = "g" + std::to_string(st.next_id++);
    std::map<std::string, int> pre;
    for (const auto& [e, c] : t.curves) pre[e] = c.sq;
    blow_up(t, st.shared[1 - side], new_id, std::nullopt);
    for (auto& [e, c] : t.curves) {
        if (e == new_id) continue;
        auto it = pre.find(e);
        if (it != pre.end() && it->second == -1 && c.sq == -2 && !c.label)
            c.label = lam;
    }
    return new_id;
}

// The anticanonical pair both degeneration chains start from: a cycle of
// eleven labelled (-2) curves plus a (-1) on one component, the mirror
// tail of six labelled (-2) curves plus a (-1) on the other.
inline State seed_state() {
    State st;
    Side& v1 = st.sides[0];
    v1.curves["a0"] = Curve{-2, 0, "E0"};
    for (int i = 1; i <= 11; ++i) {
        v1.curves["a" + std::to_string(i)] =
            Curve{-2, 0, "E" + std::to_string(i)};
        if (i > 1)
            v1.set_i("a" + std::to_string(i - 1), "a" + std::to_string(i), 1);
    }
    v1.set_i("a0", "a3", 1);
    v1.curves["c1"] = Curve{-1, 1, "E12"};
    v1.set_i("a11", "c1", 1);
    v1.points["P1"] = PointData{{"c1", {1, 1}}};
    v1.k2 = v1.d2 = -3;
    Side& v2 = st.sides[1];
    v2.curves["c2"] = Curve{-1, 1, "E12"};
    for (int i = 13; i <= 18; ++i)
        v2.curves["b" + std::to_string(i)] =
            Curve{-2, 0, "E" + std::to_string(i)};
    for (int i = 14; i <= 17; ++i)
        v2.set_i("b" + std::to_string(i - 1), "b" + std::to_string(i), 1);
    v2.set_i("c2", "b13", 1);
    v2.set_i("b15", "b18", 1);
    v2.points["P2"] = PointData{{"c2", {1, 1}}};
    v2.k2 = v2.d2 = 3;
    st.shared = {"P1", "P2"};
    st.next_id = 1;
    return st;
}

using Node = std::tuple<int, char, std::string>;
using InitColor = std::tuple<char, int, int, int, int>;
using EncEdge = std::tuple<int, int, std::string>;
using Encoding =
    std::tuple<std::pair<int, int>, std::vector<InitColor>, std::vector<EncEdge>>;

// Canonical form of a state as an edge-labelled graph: colour refinement
// to cut the symmetry down, then a brute force minimum over the small
// set of remaining orderings.
inline Encoding encode(const State& st, std::array<int, 2> order) {
    const Side* sides[2] = {&st.sides[order[0]], &st.sides[order[1]]};
    std::string shared[2] = {st.shared[order[0]], st.shared[order[1]]};

    std::map<Node, InitColor> init;
    std::map<Node, std::vector<std::pair<std::string, Node>>> adj;
    std::vector<Node> nodes;
    for (int slot = 0; slot < 2; ++slot) {
        for (const auto& [cid, c] : sides[slot]->curves) {
            Node n{slot, 'c', cid};
            int tagged = (c.sq == -2 && c.label.has_value()) ? 1 : 0;
            init[n] = InitColor{'c', slot, c.sq, c.d, tagged};
            nodes.push_back(n);
            adj[n];
        }
        for (const auto& [pid, p] : sides[slot]->points) {
            Node n{slot, 'p', pid};
            init[n] = InitColor{'p', slot, 0, 0, 0};
            nodes.push_back(n);
            adj[n];
        }
    }
    for (int slot = 0; slot < 2; ++slot) {
        for (const auto& [key, v] : sides[slot]->inter) {
            Node na{slot, 'c', key.first};
            Node nb{slot, 'c', key.second};
            std::string lab = "I" + std::to_string(v);
            adj[na].push_back({lab, nb});
            adj[nb].push_back({lab, na});
        }
        for (const auto& [pid, p] : sides[slot]->points) {
            Node np{slot, 'p', pid};
            for (const auto& [cid, mk] : p) {
                Node nc{slot, 'c', cid};
                std::string lab = "P" + std::to_string(mk.first) + "," +
                                  std::to_string(mk.second);
                adj[np].push_back({lab, nc});
                adj[nc].push_back({lab, np});
            }
        }
    }
    Node g1{0, 'p', shared[0]};
    Node g2{1, 'p', shared[1]};
    adj[g1].push_back({"G", g2});
    adj[g2].push_back({"G", g1});

    std::map<InitColor, int> ranks;
    for (const auto& n : nodes) ranks[init[n]];
    {
        int i = 0;
        for (auto& [v, r] : ranks) r = i++;
    }
    std::map<Node, int> color;
    for (const auto& n : nodes) color[n] = ranks[init[n]];
    while (true) {
        using Key = std::pair<int, std::vector<std::pair<std::string, int>>>;
        std::map<Node, Key> key;
        for (const auto& n : nodes) {
            std::vector<std::pair<std::string, int>> nb;
            for (const auto& [lab, m] : adj[n]) nb.push_back({lab, color[m]});
            std::sort(nb.begin(), nb.end());
            key[n] = Key{color[n], std::move(nb)};
        }
        std::map<Key, int> kr;
        for (const auto& n : nodes) kr[key[n]];
        {
            int i = 0;
            for (auto& [v, r] : kr) r = i++;
        }
        std::map<Node, int> fresh;
        for (const auto& n : nodes) fresh[n] = kr[key[n]];
        if (fresh == color) break;
        std::set<int> before, after;
        for (const auto& n : nodes) {
            before.insert(color[n]);
            after.insert(fresh[n]);
        }
        bool stable = before.size() == after.size();
        color = fresh;
        if (stable) break;
    }

    std::map<int, std::vector<Node>> groups;
    for (const auto& n : nodes) groups[color[n]].push_back(n);
    long long ambiguity = 1;
    for (const auto& [g, members] : groups) {
        for (std::size_t t = 2; t <= members.size(); ++t) ambiguity *= t;
        require(ambiguity <= 100000, "canonical search space must stay small");
    }

    std::vector<std::vector<std::vector<Node>>> perms;
    for (auto& [g, members] : groups) {
        std::sort(members.begin(), members.end());
        std::vector<std::vector<Node>> ps;
        std::vector<Node> cur = members;
        do {
            ps.push_back(cur);
        } while (std::next_permutation(cur.begin(), cur.end()));
        perms.push_back(std::move(ps));
    }

    std::optional<Encoding> best;
    std::vector<std::size_t> pick(perms.size(), 0);
    while (true) {
        std::vector<Node> ordering;
        for (std::size_t g = 0; g < perms.size(); ++g)
            for (const auto& n : perms[g][pick[g]]) ordering.push_back(n);
        std::map<Node, int> pos;
        for (std::size_t i = 0; i < ordering.size(); ++i)
            pos[ordering[i]] = static_cast<int>(i);
        std::set<EncEdge> edges;
        for (const auto& n : nodes)
            for (const auto& [lab, m] : adj[n]) {
                int i = pos[n], j = pos[m];
                edges.insert(i < j ? EncEdge{i, j, lab} : EncEdge{j, i, lab});
            }
        std::vector<InitColor> colors;
        for (const auto& n : ordering) colors.push_back(init[n]);
        Encoding enc{{sides[0]->k2, sides[1]->k2}, std::move(colors),
                     std::vector<EncEdge>(edges.begin(), edges.end())};
        if (!best || enc < *best) best = std::move(enc);
        std::size_t g = 0;
        while (g < perms.size() && ++pick[g] == perms[g].size()) {
            pick[g] = 0;
            ++g;
        }
        if (g == perms.size()) break;
    }
    return *best;
}

inline Encoding canonical(const State& st) { return encode(st, {0, 1}); }

// Canonical form up to swapping the two sides of the pair.
inline Encoding canonical_reflected(const State& st) {
    return std::min(encode(st, {0, 1}), encode(st, {1, 0}));
}

inline std::vector<std::string> all_labels() {
    std::vector<std::string> out;
    for (int i = 0; i < 19; ++i) out.push_back("E" + std::to_string(i));
    return out;
}

// Sorted labels of the labelled (-2) curves, per side.
inline std::array<std::vector<std::string>, 2> tags(const State& st) {
    std::array<std::vector<std::string>, 2> out;
    for (int side = 0; side < 2; ++side) {
        for (const auto& [cid, c] : st.sides[side].curves)
            if (c.sq == -2 && c.label) out[side].push_back(*c.label);
        std::sort(out[side].begin(), out[side].end());
    }
    return out;
}

// ADE type of the (-2) configuration across both sides, as a sorted
// list of component labels.
inline std::vector<std::string> classify_gamma(const State& st) {
    std::vector<std::string> labels;
    for (int side = 0; side < 2; ++side) {
        const Side& s = st.sides[side];
        std::vector<std::string> two;
        for (const auto& [cid, c] : s.curves)
            if (c.sq == -2) two.push_back(cid);
        std::map<std::string, std::set<std::string>> adj;
        for (const auto& cid : two) adj[cid];
        for (std::size_t i = 0; i < two.size(); ++i)
            for (std::size_t j = i + 1; j < two.size(); ++j) {
                int v = s.get_i(two[i], two[j]);
                require(v == 0 || v == 1, "(-2) curves must meet simply");
                if (v) {
                    adj[two[i]].insert(two[j]);
                    adj[two[j]].insert(two[i]);
                }
            }
        std::set<std::string> seen;
        for (const auto& cid : two) {
            if (seen.count(cid)) continue;
            std::vector<std::string> comp;
            std::vector<std::string> stack{cid};
            seen.insert(cid);
            while (!stack.empty()) {
                std::string v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (const auto& w : adj[v])
                    if (!seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            labels.push_back(dynkin::classify_component(comp, adj));
        }
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

inline std::set<std::string> missing_labels(const State& st) {
    auto t = tags(st);
    std::set<std::string> out;
    for (const auto& l : all_labels()) out.insert(l);
    for (const auto& l : t[0]) out.erase(l);
    for (const auto& l : t[1]) out.erase(l);
    return out;
}

// Both components carry degree matching their K^2, and the two K^2
// values cancel. This is the numerical condition for the pair to glue
// along the marked points.
inline bool triple_point_check(const State& st) {
    return st.sides[0].k2 + st.sides[1].k2 == 0 &&
           st.sides[0].d2 == st.sides[0].k2 && st.sides[1].d2 == st.sides[1].k2;
}

struct FlopGraph {
    std::vector<State> states;
    std::vector<Encoding> canon;
    std::map<Encoding, int> index;
    std::set<std::pair<int, int>> edges;
};

// Breadth-first closure of the seed under flops, with states identified
// by canonical form. Every flop is undone immediately as a consistency
// check on the engine.
inline FlopGraph enumerate_states() {
    FlopGraph r;
    State s0 = seed_state();
    Encoding c0 = canonical(s0);
    r.index[c0] = 0;
    r.states.push_back(std::move(s0));
    r.canon.push_back(std::move(c0));
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        State cur = r.states[i];
        for (int side = 0; side < 2; ++side)
            for (const auto& cid : eligible(cur, side)) {
                State child = cur;
                std::string nid = flop(child, side, cid);
                Encoding cc = canonical(child);
                State back = child;
                flop(back, 1 - side, nid);
                require(canonical(back) == r.canon[i],
                        "reverse flop must return to the parent");
                int j;
                auto it = r.index.find(cc);
                if (it == r.index.end()) {
                    j = static_cast<int>(r.states.size());
                    r.index.emplace(cc, j);
                    r.states.push_back(std::move(child));
                    r.canon.push_back(std::move(cc));
                } else {
                    j = it->second;
                }
                int a = static_cast<int>(i);
                if (j != a) r.edges.insert({std::min(a, j), std::max(a, j)});
            }
    }
    return r;
}

struct QuotientGraph {
    FlopGraph full;
    std::vector<std::vector<int>> classes;
    std::vector<int> rep;
    std::vector<int> class_of;
    std::set<std::pair<int, int>> edges;
};

// The flop graph up to swapping the two sides. Classes are ordered by
// their reflected canonical form, and each class is represented by its
// member with the smallest plain canonical form.
inline QuotientGraph enumerate_degenerations() {
    QuotientGraph q;
    q.full = enumerate_states();
    const int n = static_cast<int>(q.full.states.size());
    std::map<Encoding, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i)
        buckets[canonical_reflected(q.full.states[i])].push_back(i);
    q.class_of.assign(n, -1);
    for (const auto& [enc, members] : buckets) {
        int ci = static_cast<int>(q.classes.size());
        int rep = members[0];
        for (int m : members)
            if (q.full.canon[m] < q.full.canon[rep]) rep = m;
        for (int m : members) q.class_of[m] = ci;
        q.classes.push_back(members);
        q.rep.push_back(rep);
    }
    for (const auto& [a, b] : q.full.edges) {
        int ca = q.class_of[a], cb = q.class_of[b];
        require(ca != cb, "flop edge inside a reflection class");
        q.edges.insert({std::min(ca, cb), std::max(ca, cb)});
    }
    return q;
}

inline int surface_k2(const std::string& name) {
    if (name == "P2") return 9;
    if (name == "F1" || name == "F2") return 8;
    auto open = name.find('(');
    if (name.rfind("Bl", 0) == 0 && open != std::string::npos &&
        name.substr(open) == "(P2)")
        return 9 - std::stoi(name.substr(2, open - 2));
    throw std::invalid_argument("unknown surface name: " + name);
}

inline std::string mirror_label(const std::string& label) {
    if (label.size() < 2 || label[0] != 'E')
        throw std::invalid_argument("mirror of a non-exceptional label");
    return "E" + std::to_string(18 - std::stoi(label.substr(1)));
}

namespace detail {

inline std::string dot_label(const State& st) {
    std::string g;
    for (const auto& part : classify_gamma(st)) {
        if (!g.empty()) g += "+";
        g += part;
    }
    return g + "\\n(" + std::to_string(st.sides[0].k2) + ", " +
           std::to_string(st.sides[1].k2) + ")";
}

} // namespace detail

// Graphviz rendering; nodes show the (-2) configuration and the K^2
// pair, one node per reflection class or per raw state.
inline std::string to_dot(const QuotientGraph& q, bool quotient = true) {
    std::string out = "graph degenerations {\n  node [shape=box];\n";
    if (quotient) {
        for (std::size_t c = 0; c < q.classes.size(); ++c)
            out += "  n" + std::to_string(c) + " [label=\"" +
                   detail::dot_label(q.full.states[q.rep[c]]) + "\"];\n";
        for (const auto& [a, b] : q.edges)
            out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) +
                   ";\n";
    } else {
        for (std::size_t i = 0; i < q.full.states.size(); ++i)
            out += "  n" + std::to_string(i) + " [label=\"" +
                   detail::dot_label(q.full.states[i]) + "\"];\n";
        for (const auto& [a, b] : q.full.edges)
            out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) +
                   ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace k3deg::degen
