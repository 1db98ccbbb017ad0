#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3deg/lattice.hpp"

namespace k3deg::dynkin {

// Classifies simply laced trees, including the T-shaped diagrams with
// leg profile (1,2,k) that extend past E8. Input is one connected
// component with its adjacency sets.
template <class Node>
std::string classify_component(const std::vector<Node>& nodes,
                               const std::map<Node, std::set<Node>>& adj) {
    std::size_t n = nodes.size();
    std::size_t edge_count = 0;
    std::vector<Node> branch;
    for (const Node& v : nodes) {
        std::size_t deg = adj.at(v).size();
        edge_count += deg;
        if (deg > 3)
            throw std::invalid_argument("diagram node of degree > 3");
        if (deg == 3) branch.push_back(v);
    }
    edge_count /= 2;
    if (edge_count != n - 1)
        throw std::invalid_argument("diagram component is not a tree");
    if (branch.size() > 1)
        throw std::invalid_argument("diagram has more than one branch node");
    if (branch.empty()) return "A" + std::to_string(n);
    const Node& b = branch.front();
    std::vector<std::size_t> legs;
    for (const Node& start : adj.at(b)) {
        std::size_t length = 1;
        Node prev = b;
        Node cur = start;
        while (true) {
            Node next{};
            std::size_t fan = 0;
            for (const Node& w : adj.at(cur))
                if (!(w == prev)) {
                    next = w;
                    ++fan;
                }
            if (fan == 0) break;
            if (fan > 1)
                throw std::invalid_argument("diagram has a nested branch");
            prev = cur;
            cur = next;
            ++length;
        }
        legs.push_back(length);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(n);
    if (legs[0] == 1 && legs[1] == 2) return "E" + std::to_string(n);
    throw std::invalid_argument("unrecognized diagram leg profile");
}

// Splits a graph into connected components and classifies each; returns
// the sorted list of labels.
template <class Node>
std::vector<std::string> classify_graph(
    const std::vector<Node>& nodes,
    const std::map<Node, std::set<Node>>& adj) {
    std::set<Node> seen;
    std::vector<std::string> labels;
    for (const Node& start : nodes) {
        if (seen.count(start)) continue;
        std::vector<Node> comp;
        std::vector<Node> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Node v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const Node& w : adj.at(v))
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        labels.push_back(classify_component(comp, adj));
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

// Classification of the sub-diagram spanned by (-2) generators of the
// divisor model; pairings between distinct members must be 0 or 1.
inline std::vector<std::string> classify_generators(
    const std::vector<int>& idxs) {
    const auto& g = lattice::gram();
    std::map<int, std::set<int>> adj;
    for (int i : idxs) {
        if (g[i][i] != -2)
            throw std::invalid_argument("generator is not a (-2)-class");
        adj[i];
    }
    for (std::size_t a = 0; a < idxs.size(); ++a)
        for (std::size_t b = a + 1; b < idxs.size(); ++b) {
            int p = g[idxs[a]][idxs[b]];
            if (p != 0 && p != 1)
                throw std::invalid_argument("unexpected pairing in diagram");
            if (p == 1) {
                adj[idxs[a]].insert(idxs[b]);
                adj[idxs[b]].insert(idxs[a]);
            }
        }
    return classify_graph(idxs, adj);
}

inline std::vector<std::string> classify_names(
    const std::vector<std::string>& names_in) {
    std::vector<int> idx;
    idx.reserve(names_in.size());
    for (const auto& n : names_in) idx.push_back(lattice::name_index(n));
    return classify_generators(idx);
}

} // namespace k3deg::dynkin
