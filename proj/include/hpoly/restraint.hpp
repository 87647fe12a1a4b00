#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/graph.hpp"
#include "hpoly/poly.hpp"

namespace hpoly {

// Forbidden color lists, one (possibly empty) sorted set of positive colors
// per vertex of the graph the restraint is paired with.
class Restraint {
public:
    Restraint() = default;
    explicit Restraint(int n) : forbidden_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(forbidden_.size()); }

    void forbid(int v, int color) {
        if (v < 0 || v >= size()) throw std::domain_error("Restraint: vertex out of range");
        if (color < 1) throw std::domain_error("Restraint: colors are positive integers");
        auto& f = forbidden_[static_cast<std::size_t>(v)];
        auto it = std::lower_bound(f.begin(), f.end(), color);
        if (it == f.end() || *it != color) f.insert(it, color);
    }

    const std::vector<int>& forbidden(int v) const {
        if (v < 0 || v >= size()) throw std::domain_error("Restraint: vertex out of range");
        return forbidden_[static_cast<std::size_t>(v)];
    }

    // The paper's k0: largest color mentioned anywhere, 0 if none.
    int max_color() const {
        int m = 0;
        for (const auto& f : forbidden_)
            if (!f.empty()) m = std::max(m, f.back());
        return m;
    }

    // Total number of (vertex, color) restraint entries.
    int total_entries() const {
        std::size_t t = 0;
        for (const auto& f : forbidden_) t += f.size();
        return static_cast<int>(t);
    }

    bool empty() const {
        for (const auto& f : forbidden_)
            if (!f.empty()) return false;
        return true;
    }

    friend bool operator==(const Restraint& a, const Restraint& b) {
        return a.forbidden_ == b.forbidden_;
    }

private:
    std::vector<std::vector<int>> forbidden_;
};

enum class EdgePick { Smallest, Largest };

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Isomorphism-invariant fingerprint of (graph, restraint): per-vertex colors
// seeded by (degree, forbidden list) and refined twice through sorted
// neighbor color multisets.
inline std::uint64_t restrained_fingerprint(const Graph& g, const Restraint& r) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint64_t h = mix64(static_cast<std::uint64_t>(g.degree(v)) + 1);
        for (int c : r.forbidden(v)) h = mix64(h ^ static_cast<std::uint64_t>(c) * 0x100000001b3ull);
        color[static_cast<std::size_t>(v)] = h;
    }
    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = color[static_cast<std::size_t>(v)];
            for (std::uint64_t x : nb) h = mix64(h ^ x);
            next[static_cast<std::size_t>(v)] = h;
        }
        color = std::move(next);
    }
    std::sort(color.begin(), color.end());
    std::uint64_t h = mix64(static_cast<std::uint64_t>(n) << 32 | static_cast<std::uint64_t>(g.edge_count()));
    for (std::uint64_t x : color) h = mix64(h ^ x);
    return h;
}

// Exact isomorphism of restrained graphs: the bijection must preserve
// adjacency, non-adjacency, and each vertex's forbidden list.
inline bool restrained_isomorphic(const Graph& g1, const Restraint& r1, const Graph& g2,
                                  const Restraint& r2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g1.degree(a) > g1.degree(b); });
    std::vector<int> map1(static_cast<std::size_t>(n), -1);
    std::vector<char> used2(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int a = order[static_cast<std::size_t>(depth)];
        for (int b = 0; b < n; ++b) {
            if (used2[static_cast<std::size_t>(b)]) continue;
            if (g1.degree(a) != g2.degree(b)) continue;
            if (r1.forbidden(a) != r2.forbidden(b)) continue;
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
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

// Memo table for rho: fingerprint buckets resolved by exact isomorphism
// with restraints. Purely an accelerator; rho never depends on it for
// correctness.
class RhoMemo {
public:
    const Poly* find(const Graph& g, const Restraint& r) const {
        auto it = buckets_.find(detail::restrained_fingerprint(g, r));
        if (it == buckets_.end()) return nullptr;
        for (const auto& e : it->second)
            if (detail::restrained_isomorphic(g, r, e.graph, e.restraint)) return &e.value;
        return nullptr;
    }

    void insert(const Graph& g, const Restraint& r, Poly value) {
        buckets_[detail::restrained_fingerprint(g, r)].push_back({g, r, std::move(value)});
    }

private:
    struct Entry {
        Graph graph;
        Restraint restraint;
        Poly value;
    };
    std::map<std::uint64_t, std::vector<Entry>> buckets_;
};

namespace detail {

inline Poly rho_impl(const Graph& g, const Restraint& r, EdgePick pick, RhoMemo& memo);

inline Poly rho_connected(const Graph& g, const Restraint& r, EdgePick pick, RhoMemo& memo) {
    if (g.edge_count() == 0) {
        Poly p = Poly::constant(1);
        for (int v = 0; v < g.vertex_count(); ++v)
            p *= Poly::linear(-static_cast<long>(r.forbidden(v).size()), 1);
        return p;
    }
    if (const Poly* hit = memo.find(g, r)) return *hit;

    const auto es = g.edges();
    const Edge e = (pick == EdgePick::Smallest) ? es.front() : es.back();
    const auto [u, v] = e;

    // rho(G, r) = rho(G - e, r) - rho(G / e, r_e), the merged vertex taking
    // the union of the endpoint restraints.
    Poly del = rho_impl(g.remove_edge(e), r, pick, memo);

    Graph gc = g.contract_edge(e);
    Restraint rc(gc.vertex_count());
    const int merged = std::min(u, v);
    const int dropped = std::max(u, v);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == dropped) continue;
        const int w2 = w < dropped ? w : w - 1;
        for (int c : r.forbidden(w)) rc.forbid(w2, c);
    }
    for (int c : r.forbidden(dropped)) rc.forbid(merged, c);
    Poly con = rho_impl(gc, rc, pick, memo);

    Poly result = del - con;
    memo.insert(g, r, result);
    return result;
}

inline Poly rho_impl(const Graph& g, const Restraint& r, EdgePick pick, RhoMemo& memo) {
    if (g.vertex_count() == 0) return Poly::constant(1);
    if (g.component_count() == 1) return rho_connected(g, r, pick, memo);
    // Components color independently, so rho factors across them.
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    Poly p = Poly::constant(1);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) vs.push_back(v);
        Graph sub = g.induced_subgraph(vs);
        Restraint rs(sub.vertex_count());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (int col : r.forbidden(vs[i])) rs.forbid(static_cast<int>(i), col);
        p *= rho_connected(sub, rs, pick, memo);
    }
    return p;
}

}  // namespace detail

// Restrained chromatic polynomial rho_{G,r}: the unique polynomial agreeing
// with the number of proper k-colorings of g avoiding r(v) at each vertex,
// for every integer k >= r.max_color(). Computed by deletion-contraction
// (always the lexicographically smallest edge unless asked otherwise);
// monic of degree |V(g)| with alternating-sign coefficients.
inline Poly rho(const Graph& g, const Restraint& r, EdgePick pick = EdgePick::Smallest,
                RhoMemo* memo = nullptr) {
    if (r.size() != g.vertex_count())
        throw std::domain_error("rho: restraint is defined on a different vertex set");
    RhoMemo local;
    return detail::rho_impl(g, r, pick, memo ? *memo : local);
}

inline Poly rho(const Graph& g) { return rho(g, Restraint(g.vertex_count())); }

// Chromatic polynomial: rho with the trivial restraint.
inline Poly chromatic_polynomial(const Graph& g, RhoMemo* memo = nullptr) {
    return rho(g, Restraint(g.vertex_count()), EdgePick::Smallest, memo);
}

// The restraint a generator (U, C) imposes on G - U: every vertex outside U
// is forbidden each color any of its U-neighbors takes in any coloring of C.
// `u_set` must be sorted and duplicate-free; each coloring lists one color
// per vertex of u_set, in u_set order. The result is indexed by the
// compacted labels of G - U.
inline Restraint restraint_from_generator(const Graph& g, const std::vector<int>& u_set,
                                          const std::vector<std::vector<int>>& colorings) {
    for (const auto& c : colorings)
        if (c.size() != u_set.size())
            throw std::domain_error("restraint_from_generator: coloring domain differs from U");
    std::vector<char> in_u(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : u_set) {
        if (v < 0 || v >= g.vertex_count())
            throw std::domain_error("restraint_from_generator: vertex out of range");
        in_u[static_cast<std::size_t>(v)] = 1;
    }
    Restraint r(g.vertex_count() - static_cast<int>(u_set.size()));
    int label = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_u[static_cast<std::size_t>(v)]) continue;
        for (std::size_t i = 0; i < u_set.size(); ++i)
            if (g.has_edge(v, u_set[i]))
                for (const auto& c : colorings) r.forbid(label, c[i]);
        ++label;
    }
    return r;
}

}  // namespace hpoly
