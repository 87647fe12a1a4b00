#pragma once

// Shared test-only machinery: fixture loading, exhaustive graph generation,
// and independent brute-force oracles. Everything here is deliberately
// naive; the point is to check the fast paths against slow obviously-correct
// ones.

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hpoly/graph.hpp"
#include "hpoly/graph_io.hpp"
#include "hpoly/restraint.hpp"

namespace testhelp {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline hpoly::Graph fixture(const std::string& name) {
    return hpoly::parse_edge_list(read_file(std::string(HPOLY_FIXTURES_DIR) + "/" + name + ".el"));
}

// All 2^C(n,2) labeled graphs on n vertices.
inline std::vector<hpoly::Graph> all_graphs(int n) {
    std::vector<hpoly::Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<hpoly::Graph> out;
    for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
        hpoly::Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

// One representative per isomorphism class, deduplicated by invariant
// bucketing plus exact isomorphism tests.
inline std::vector<hpoly::Graph> iso_classes(int n) {
    using Key = std::tuple<int, long, std::vector<int>>;
    std::map<Key, std::vector<hpoly::Graph>> buckets;
    std::vector<hpoly::Graph> reps;
    for (auto& g : all_graphs(n)) {
        Key key{g.edge_count(), g.triangle_count(), g.degree_sequence()};
        auto& bucket = buckets[key];
        bool fresh = true;
        for (const auto& rep : bucket)
            if (hpoly::is_isomorphic(g, rep)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(g);
            reps.push_back(g);
        }
    }
    return reps;
}

inline std::vector<hpoly::Graph> iso_classes_up_to(int n) {
    std::vector<hpoly::Graph> reps;
    for (int i = 1; i <= n; ++i)
        for (auto& g : iso_classes(i)) reps.push_back(std::move(g));
    return reps;
}

// Labeled tree from a Prufer-like sequence.
inline hpoly::Graph tree_from_prufer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq) ++degree[static_cast<std::size_t>(v)];
    hpoly::Graph g(n);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int v : rest) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, v);
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

inline hpoly::Graph random_tree(int n, std::mt19937& rng) {
    if (n == 1) return hpoly::Graph(1);
    if (n == 2) return hpoly::Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& v : seq) v = pick(rng);
    return tree_from_prufer(seq);
}

inline hpoly::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    hpoly::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

// Independent oracle for rho: count proper k-colorings avoiding the
// restraint by trying every assignment.
inline long count_restrained_colorings(const hpoly::Graph& g, const hpoly::Restraint& r, int k) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int f : r.forbidden(v))
                if (f == c) {
                    ok = false;
                    break;
                }
            for (int w : g.neighbors(v))
                if (ok && w < v && color[static_cast<std::size_t>(w)] == c) ok = false;
            if (ok) {
                color[static_cast<std::size_t>(v)] = c;
                self(self, v + 1);
            }
        }
    };
    rec(rec, 0);
    return count;
}

// Independent slow count of induced copies: every |V(h)|-subset of g's
// vertices, tested for induced isomorphism.
inline long count_induced_by_subsets(const hpoly::Graph& g, const hpoly::Graph& h) {
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    long count = 0;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == hn) {
            if (hpoly::is_isomorphic(g.induced_subgraph(subset), h)) ++count;
            return;
        }
        for (int v = start; v <= n - (hn - static_cast<int>(subset.size())); ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace testhelp
