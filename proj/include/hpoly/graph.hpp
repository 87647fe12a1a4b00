#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpoly {

using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph on dense 0-based vertex indices. Immutable in
// spirit: mutation happens only while building; every algorithm here returns
// a new graph. No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::domain_error("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const auto& [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj_) twice += nb.size();
        return static_cast<int>(twice / 2);
    }

    // Idempotent; contraction and file input rely on duplicate edges collapsing.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::domain_error("add_edge: self-loop " + std::to_string(u));
        if (has_edge(u, v)) return;
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as sorted (u, v) pairs with u < v; lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    // Ascending degree multiset.
    std::vector<int> degree_sequence() const {
        std::vector<int> d;
        d.reserve(adj_.size());
        for (const auto& nb : adj_) d.push_back(static_cast<int>(nb.size()));
        std::sort(d.begin(), d.end());
        return d;
    }

    int component_count() const {
        const int n = vertex_count();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack;
        int comps = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            ++comps;
            stack.push_back(s);
            seen[static_cast<std::size_t>(s)] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj_[static_cast<std::size_t>(u)])
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return comps;
    }

    bool is_connected() const { return vertex_count() == 0 || component_count() == 1; }

    // Each triangle counted once.
    long triangle_count() const {
        long tri = 0;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (v < u) continue;
                for (int w : adj_[static_cast<std::size_t>(v)])
                    if (w > v && has_edge(u, w)) ++tri;
            }
        return tri;
    }

    // G/e: removes edge e and merges its ends into min(u, v); the merged
    // vertex inherits both neighborhoods, parallel edges collapse, and the
    // remaining indices compact with order preserved.
    Graph contract_edge(Edge e) const {
        auto [u, v] = e;
        if (u > v) std::swap(u, v);
        if (!has_edge(u, v)) throw std::domain_error("contract_edge: edge not present");
        const int n = vertex_count();
        auto relabel = [&](int x) { return x < v ? x : x - 1; };
        Graph g(n - 1);
        for (int a = 0; a < n; ++a)
            for (int b : adj_[static_cast<std::size_t>(a)]) {
                if (b < a) continue;
                if (a == u && b == v) continue;
                int aa = (a == v) ? u : a;
                int bb = (b == v) ? u : b;
                g.add_edge(relabel(aa), relabel(bb));
            }
        return g;
    }

    Graph remove_edge(Edge e) const {
        auto [u, v] = e;
        if (!has_edge(u, v)) throw std::domain_error("remove_edge: edge not present");
        Graph g(vertex_count());
        for (const auto& [a, b] : edges())
            if (!(a == std::min(u, v) && b == std::max(u, v))) g.add_edge(a, b);
        return g;
    }

    // G[U]: vertices relabeled 0..|U|-1 preserving index order.
    Graph induced_subgraph(const std::vector<int>& u_set) const {
        std::vector<int> vs = u_set;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::vector<int> pos(static_cast<std::size_t>(vertex_count()), -1);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            check_vertex(vs[i]);
            pos[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
        }
        Graph g(static_cast<int>(vs.size()));
        for (int a : vs)
            for (int b : adj_[static_cast<std::size_t>(a)])
                if (a < b && pos[static_cast<std::size_t>(b)] >= 0)
                    g.add_edge(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
        return g;
    }

    // G - U.
    Graph remove_vertices(const std::vector<int>& u_set) const {
        std::vector<char> drop(static_cast<std::size_t>(vertex_count()), 0);
        for (int v : u_set) {
            check_vertex(v);
            drop[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<int> keep;
        for (int v = 0; v < vertex_count(); ++v)
            if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
        return induced_subgraph(keep);
    }

    Graph remove_vertex(int v) const { return remove_vertices({v}); }

    friend Graph disjoint_union(const Graph& a, const Graph& b) {
        Graph g(a.vertex_count() + b.vertex_count());
        for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
        const int off = a.vertex_count();
        for (const auto& [u, v] : b.edges()) g.add_edge(u + off, v + off);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::domain_error("vertex " + std::to_string(v) + " out of range");
    }

    static void insert_sorted(std::vector<int>& nb, int v) {
        nb.insert(std::upper_bound(nb.begin(), nb.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
};

struct GraphStats {
    int vertex_count = 0;
    int edge_count = 0;
    int components = 0;
    long triangles = 0;
    std::vector<int> degree_sequence;  // ascending
};

inline GraphStats stats(const Graph& g) {
    GraphStats s;
    s.vertex_count = g.vertex_count();
    s.edge_count = g.edge_count();
    s.components = g.component_count();
    s.triangles = g.triangle_count();
    s.degree_sequence = g.degree_sequence();
    return s;
}

namespace detail {

// Backtracking isomorphism search. Vertices of g1 are matched in a static
// order (rarest degree first), candidates restricted by degree and by
// adjacency/non-adjacency to the already-matched prefix.
inline bool iso_search(const Graph& g1, const Graph& g2) {
    const int n = g1.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // Rare degrees first shrinks the branching near the root; ties broken
    // by higher degree for stronger adjacency pruning.
    std::vector<int> degcount(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++degcount[static_cast<std::size_t>(g1.degree(v))];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = degcount[static_cast<std::size_t>(g1.degree(a))];
        int cb = degcount[static_cast<std::size_t>(g1.degree(b))];
        if (ca != cb) return ca < cb;
        return g1.degree(a) > g1.degree(b);
    });

    std::vector<int> map1(static_cast<std::size_t>(n), -1);
    std::vector<char> used2(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int a = order[static_cast<std::size_t>(depth)];
        for (int b = 0; b < n; ++b) {
            if (used2[static_cast<std::size_t>(b)]) continue;
            if (g1.degree(a) != g2.degree(b)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int a2 = order[static_cast<std::size_t>(d)];
                ok = g1.has_edge(a, a2) == g2.has_edge(b, map1[static_cast<std::size_t>(a2)]);
            }
            if (!ok) continue;
            map1[static_cast<std::size_t>(a)] = b;
            used2[static_cast<std::size_t>(b)] = 1;
            if (self(self, depth + 1)) return true;
            used2[static_cast<std::size_t>(b)] = 0;
            map1[static_cast<std::size_t>(a)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

// True iff an adjacency- and non-adjacency-preserving vertex bijection
// exists. Deterministic; intended for small graphs (patterns, fixtures,
// memoization collision checks).
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    if (g1.degree_sequence() != g2.degree_sequence()) return false;
    if (g1.vertex_count() == 0) return true;
    if (g1.triangle_count() != g2.triangle_count()) return false;
    return detail::iso_search(g1, g2);
}

}  // namespace hpoly
