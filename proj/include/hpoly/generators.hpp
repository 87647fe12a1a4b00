#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hpoly/coloring_graph.hpp"
#include "hpoly/errors.hpp"
#include "hpoly/graph.hpp"
#include "hpoly/poly.hpp"
#include "hpoly/restraint.hpp"

namespace hpoly {

// A minimal H-generator (U, C): a support U in G plus |V(H)| partial
// colorings of U whose differ-on-one-vertex graph is H, in which every
// vertex of U takes at least two colors and the colors used are exactly
// {1..kappa}.
struct Generator {
    std::vector<int> u;                       // sorted support
    std::vector<std::vector<int>> colorings;  // lex-sorted; entry i colors u[i]
    int kappa = 0;

    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        if (a.u != b.u) return a.u < b.u;
        return a.colorings < b.colorings;
    }
    friend bool operator==(const Generator& a, const Generator& b) {
        return a.kappa == b.kappa && a.u == b.u && a.colorings == b.colorings;
    }
};

namespace detail {

// Proper colorings of g[U] using colors from [kappa], in lex order, plus
// the differ-on-one-vertex adjacency among them.
struct LocalColoringGraph {
    std::vector<std::vector<int>> colorings;
    std::vector<std::vector<int>> adj;

    bool adjacent(int a, int b) const {
        const auto& nb = adj[static_cast<std::size_t>(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }
};

inline LocalColoringGraph local_coloring_graph(const Graph& gu, int kappa, std::size_t& nodes,
                                               std::size_t budget) {
    LocalColoringGraph x;
    const int n = gu.vertex_count();
    std::vector<int> partial(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (++nodes > budget) throw budget_error("generator enumeration budget exceeded", budget);
        if (v == n) {
            x.colorings.push_back(partial);
            return;
        }
        for (int c = 1; c <= kappa; ++c) {
            bool ok = true;
            for (int w : gu.neighbors(v))
                if (w < v && partial[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                partial[static_cast<std::size_t>(v)] = c;
                self(self, v + 1);
            }
        }
        partial[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < x.colorings.size(); ++i) index[x.colorings[i]] = static_cast<int>(i);
    x.adj.resize(x.colorings.size());
    std::vector<int> probe;
    for (std::size_t i = 0; i < x.colorings.size(); ++i) {
        probe = x.colorings[i];
        for (int v = 0; v < n; ++v) {
            const int old = probe[static_cast<std::size_t>(v)];
            for (int c = 1; c <= kappa; ++c) {
                if (c == old) continue;
                probe[static_cast<std::size_t>(v)] = c;
                auto it = index.find(probe);
                if (it != index.end() && it->second > static_cast<int>(i)) {
                    x.adj[i].push_back(it->second);
                    x.adj[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
                }
            }
            probe[static_cast<std::size_t>(v)] = old;
        }
    }
    for (auto& nb : x.adj) std::sort(nb.begin(), nb.end());
    return x;
}

// Connectivity-first matching order: each pattern vertex after the first
// is placed next to an already-placed neighbor whenever one exists.
inline std::vector<int> matching_order(const Graph& h) {
    const int n = h.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int w : h.neighbors(v))
                if (placed[static_cast<std::size_t>(w)]) ++links;
            if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = h.degree(v);
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
    }
    return order;
}

// All induced copies of h inside the local coloring graph, reported to the
// sink as sorted index sets; automorphic rediscoveries are the caller's
// problem (deduplicated by set semantics). `palette_cap` bounds the number
// of distinct colors any single support vertex may take across the copy and
// `sum_cap` bounds the total over support vertices; branches exceeding
// either cannot yield minimal generators and are cut. When the pattern is
// vertex-transitive the root of the match is pinned to the smallest index
// in the copy, discarding rotated rediscoveries wholesale.
template <typename Sink>
void induced_copies(const LocalColoringGraph& x, const Graph& h, const std::vector<int>& order,
                    int palette_cap, int sum_cap, int kappa, bool transitive, std::size_t& nodes,
                    std::size_t budget, Sink&& sink) {
    const int hn = h.vertex_count();
    const int xn = static_cast<int>(x.colorings.size());
    if (xn < hn) return;
    const int usize = xn ? static_cast<int>(x.colorings[0].size()) : 0;
    std::vector<int> map(static_cast<std::size_t>(hn), -1);
    std::vector<char> used(static_cast<std::size_t>(xn), 0);
    std::vector<int> everything;
    // Distinct colors seen per support vertex across the mapped prefix, and
    // how often each color appears; minimal generators must end with the
    // full palette {1..kappa} in use, so branches whose remaining capacity
    // cannot reach kappa distinct colors are cut.
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(usize));
    std::vector<int> color_uses(static_cast<std::size_t>(kappa) + 1, 0);
    int distinct = 0;
    int capacity = sum_cap;
    int root = -1;

    // A coloring mapped next to an already-placed neighbor differs from it
    // in one coordinate, so it introduces at most one new color; only the
    // first coloring of each pattern component can introduce up to usize.
    // starts_after[d] counts component starts strictly after depth d.
    std::vector<int> starts_after(static_cast<std::size_t>(hn) + 1, 0);
    for (int d = hn - 1; d >= 0; --d) {
        bool anchored = false;
        for (int e = 0; e < d && !anchored; ++e)
            anchored = h.has_edge(order[static_cast<std::size_t>(d)], order[static_cast<std::size_t>(e)]);
        starts_after[static_cast<std::size_t>(d)] =
            starts_after[static_cast<std::size_t>(d) + 1] + (anchored ? 0 : 1);
    }
    auto future_additions = [&](int depth) {
        // new colors obtainable from the colorings after position `depth`
        return (hn - depth - 1) + (usize - 1) * starts_after[static_cast<std::size_t>(depth) + 1];
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == hn) {
            std::vector<int> copy;
            copy.reserve(static_cast<std::size_t>(hn));
            for (int hv = 0; hv < hn; ++hv) copy.push_back(map[static_cast<std::size_t>(hv)]);
            std::sort(copy.begin(), copy.end());
            sink(copy);
            return;
        }
        const int hv = order[static_cast<std::size_t>(depth)];
        const std::vector<int>* cands = nullptr;
        for (int d = 0; d < depth && !cands; ++d) {
            const int hv2 = order[static_cast<std::size_t>(d)];
            if (h.has_edge(hv, hv2)) cands = &x.adj[static_cast<std::size_t>(map[static_cast<std::size_t>(hv2)])];
        }
        if (!cands) {
            if (everything.empty())
                for (int i = 0; i < xn; ++i) everything.push_back(i);
            cands = &everything;
        }
        for (int cand : *cands) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (transitive && depth > 0 && cand < root) continue;
            if (++nodes > budget)
                throw budget_error("generator enumeration budget exceeded", budget);
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int hv2 = order[static_cast<std::size_t>(d)];
                ok = h.has_edge(hv, hv2) == x.adjacent(cand, map[static_cast<std::size_t>(hv2)]);
            }
            if (!ok) continue;
            const auto& col = x.colorings[static_cast<std::size_t>(cand)];
            int introduced = 0;  // bitmask of support vertices gaining a color
            auto undo = [&]() {
                for (int j = 0; j < usize; ++j)
                    if (introduced >> j & 1) {
                        auto& sj = seen[static_cast<std::size_t>(j)];
                        if (--color_uses[static_cast<std::size_t>(sj.back())] == 0) --distinct;
                        sj.pop_back();
                        ++capacity;
                    }
            };
            for (int j = 0; j < usize && ok; ++j) {
                const int c = col[static_cast<std::size_t>(j)];
                auto& sj = seen[static_cast<std::size_t>(j)];
                if (std::find(sj.begin(), sj.end(), c) == sj.end()) {
                    if (static_cast<int>(sj.size()) >= palette_cap || capacity == 0) {
                        ok = false;
                        break;
                    }
                    sj.push_back(c);
                    --capacity;
                    if (++color_uses[static_cast<std::size_t>(c)] == 1) ++distinct;
                    introduced |= 1 << j;
                }
            }
            if (!ok || distinct + capacity < kappa ||
                distinct + future_additions(depth) < kappa) {
                undo();
                continue;
            }
            if (depth == 0) root = cand;
            map[static_cast<std::size_t>(hv)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            self(self, depth + 1);
            used[static_cast<std::size_t>(cand)] = 0;
            map[static_cast<std::size_t>(hv)] = -1;
            undo();
        }
    };
    rec(rec, 0);
}

// Whether the automorphism group of h acts transitively on its vertices;
// cheap backtracking, intended for small patterns.
inline bool vertex_transitive(const Graph& h) {
    const int n = h.vertex_count();
    if (n <= 1) return true;
    const auto deg0 = h.degree(0);
    for (int v = 1; v < n; ++v)
        if (h.degree(v) != deg0) return false;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (int b = 0; b < n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            if (h.degree(depth) != h.degree(b)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                ok = h.has_edge(depth, d) == h.has_edge(b, map[static_cast<std::size_t>(d)]);
            if (!ok) continue;
            map[static_cast<std::size_t>(depth)] = b;
            used[static_cast<std::size_t>(b)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(b)] = 0;
        }
        map[static_cast<std::size_t>(depth)] = -1;
        return false;
    };
    for (int target = 1; target < n; ++target) {
        std::fill(map.begin(), map.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        map[0] = target;
        used[static_cast<std::size_t>(target)] = 1;
        if (!extend(extend, 1)) return false;
    }
    return true;
}

inline void subsets_of_size(int n, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (size - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Edge connectivity by brute-force minimum cut; patterns are small.
inline int edge_connectivity(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 2 || !h.is_connected()) return 0;
    if (n > 20) return 1;  // conservative for oversized patterns
    int best = h.edge_count();
    const auto es = h.edges();
    for (unsigned long mask = 1; mask < (1ul << (n - 1)); ++mask) {
        // vertex 0 always on the far side, so every proper cut is seen once
        int cut = 0;
        for (const auto& [u, v] : es) {
            const bool su = u != 0 && (mask >> (u - 1) & 1);
            const bool sv = v != 0 && (mask >> (v - 1) & 1);
            if (su != sv) ++cut;
        }
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace detail

// Every minimal H-generator in g, each exactly once, ordered by
// (kappa, U, colorings). Supports run up to |E(H)|/lambda(H) vertices,
// since each support vertex changes color along a full edge cut of the
// pattern. Palettes run up to 2|E(H)| colors, tightened by per-vertex and
// connectivity bounds.
inline std::vector<Generator> enumerate_minimal_generators(
    const Graph& g, const Graph& h, std::size_t budget = kDefaultSearchBudget) {
    if (h.vertex_count() < 1)
        throw std::domain_error("enumerate_minimal_generators: pattern must be non-empty");

    std::set<Generator> found;
    if (h.vertex_count() == 1 && h.edge_count() == 0) {
        // The empty generator; N_1 is the only H generated with zero colors.
        found.insert(Generator{{}, {{}}, 0});
        return {found.begin(), found.end()};
    }

    const int mh = h.edge_count();
    const int hcomp = h.vertex_count() ? h.component_count() : 0;
    // The edges on which a support vertex changes color cross its
    // value-class partition, so each support vertex owns at least an edge
    // cut of the pattern: |U| <= |E(H)| / lambda(H).
    const int lambda = std::max(1, h.is_connected() ? detail::edge_connectivity(h) : 1);
    // In an even-degree connected pattern every vertex-class cut is even,
    // so no support vertex's palette can exceed its share of pattern edges.
    bool eulerian = h.is_connected();
    for (int v = 0; v < h.vertex_count() && eulerian; ++v) eulerian = h.degree(v) % 2 == 0;
    const int max_support = std::min(mh / lambda, g.vertex_count());
    const std::vector<int> order = detail::matching_order(h);
    const bool transitive = detail::vertex_transitive(h);

    std::size_t nodes = 0;
    for (int usize = 1; usize <= max_support; ++usize) {
        std::vector<std::vector<int>> supports;
        detail::subsets_of_size(g.vertex_count(), usize, supports);
        for (const auto& u_set : supports) {
            const Graph gu = g.induced_subgraph(u_set);
            // Per support vertex, the colors it takes exceed its share of
            // pattern edges by at most one per pattern component (by none
            // when the pattern is Eulerian); the other support vertices
            // claim at least one pattern edge each (two when bridgeless).
            const int extra = eulerian ? 0 : hcomp;
            // Colors are bounded three ways: twice the pattern edges, the
            // per-vertex palette sums, and one fresh color per pattern
            // vertex beyond each component's opening coloring.
            const int kappa_hi = std::min(std::min(2 * mh, mh + usize * extra),
                                          h.vertex_count() + (usize - 1) * hcomp);
            const int palette_cap = mh - lambda * (usize - 1) + extra;
            const int sum_cap = mh + usize * extra;
            for (int kappa = 2; kappa <= kappa_hi; ++kappa) {
                auto x = detail::local_coloring_graph(gu, kappa, nodes, budget);
                detail::induced_copies(x, h, order, palette_cap, sum_cap, kappa, transitive, nodes,
                                       budget, [&](const std::vector<int>& copy) {
                    // Minimality: every support vertex varies, and the colors
                    // used are exactly {1..kappa}.
                    std::vector<char> seen(static_cast<std::size_t>(kappa) + 1, 0);
                    for (int idx : copy)
                        for (int c : x.colorings[static_cast<std::size_t>(idx)])
                            seen[static_cast<std::size_t>(c)] = 1;
                    for (int c = 1; c <= kappa; ++c)
                        if (!seen[static_cast<std::size_t>(c)]) return;
                    for (int j = 0; j < usize; ++j) {
                        const int first =
                            x.colorings[static_cast<std::size_t>(copy[0])][static_cast<std::size_t>(j)];
                        bool varies = false;
                        for (int idx : copy)
                            if (x.colorings[static_cast<std::size_t>(idx)][static_cast<std::size_t>(j)] !=
                                first) {
                                varies = true;
                                break;
                            }
                        if (!varies) return;
                    }
                    Generator gen;
                    gen.u = u_set;
                    gen.kappa = kappa;
                    for (int idx : copy) gen.colorings.push_back(x.colorings[static_cast<std::size_t>(idx)]);
                    std::sort(gen.colorings.begin(), gen.colorings.end());
                    found.insert(std::move(gen));
                });
            }
        }
    }
    return {found.begin(), found.end()};
}

// The chromatic H-polynomial: evaluate(h_polynomial(g, h), k) is the number of
// induced copies of h in the k-coloring graph of g, for every integer
// k >= 1. Sum over minimal generators of C(k, kappa) * rho on G - U with
// the generator's restraint. H = N_2 is the one pattern outside the
// generator machinery; it counts non-adjacent coloring pairs, so it is
// computed as C(pi_G, 2) minus the pairs polynomial.
inline Poly h_polynomial(const Graph& g, const Graph& h, std::size_t budget = kDefaultSearchBudget,
                  RhoMemo* memo = nullptr) {
    if (h.vertex_count() < 1) throw std::domain_error("h_polynomial: pattern must be non-empty");
    RhoMemo local;
    RhoMemo& m = memo ? *memo : local;

    if (h.vertex_count() == 2 && h.edge_count() == 0) {
        const Poly chrom = chromatic_polynomial(g, &m);
        const Poly pairs = h_polynomial(g, Graph(2, {{0, 1}}), budget, &m);
        return frac(1, 2) * (chrom * chrom - chrom) - pairs;
    }

    const auto gens = enumerate_minimal_generators(g, h, budget);
    Poly total;
    for (const auto& gen : gens) {
        const Graph rest = g.remove_vertices(gen.u);
        const Restraint r = restraint_from_generator(g, gen.u, gen.colorings);
        total += binomial_poly(static_cast<unsigned>(gen.kappa)) * rho(rest, r, EdgePick::Smallest, &m);
    }
    return total;
}

}  // namespace hpoly
