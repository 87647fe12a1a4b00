#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/errors.hpp"
#include "hpoly/graph.hpp"

namespace hpoly {

inline constexpr std::size_t kDefaultColoringBudget = 1'000'000;
inline constexpr std::size_t kDefaultSearchBudget = 10'000'000;

// The k-coloring graph C_k(G), built explicitly: one vertex per proper
// k-coloring of G, edges between colorings that differ at exactly one vertex
// of G. Ground truth at desk scale for everything the polynomials claim.
class ColoringGraph {
public:
    // Colorings are enumerated in lexicographic order by backtracking with
    // forward pruning, so work is proportional to the partial-coloring tree
    // rather than k^n; the budget caps search nodes as a worst-case guard.
    static ColoringGraph build(const Graph& g, int k,
                               std::size_t budget = kDefaultColoringBudget) {
        if (k < 0) throw std::domain_error("ColoringGraph: negative color count");
        ColoringGraph cg;
        cg.base_ = g;
        cg.k_ = k;
        const int n = g.vertex_count();

        std::size_t nodes = 0;
        std::vector<int> partial(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (++nodes > budget)
                throw budget_error("ColoringGraph: coloring enumeration budget exceeded", budget);
            if (v == n) {
                cg.colorings_.push_back(partial);
                return;
            }
            for (int c = 1; c <= k; ++c) {
                bool ok = true;
                for (int w : g.neighbors(v)) {
                    if (w < v && partial[static_cast<std::size_t>(w)] == c) {
                        ok = false;
                        break;
                    }
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
        for (std::size_t i = 0; i < cg.colorings_.size(); ++i)
            index[cg.colorings_[i]] = static_cast<int>(i);

        cg.adj_.resize(cg.colorings_.size());
        std::vector<int> probe;
        for (std::size_t i = 0; i < cg.colorings_.size(); ++i) {
            probe = cg.colorings_[i];
            for (int v = 0; v < n; ++v) {
                const int old = probe[static_cast<std::size_t>(v)];
                for (int c = 1; c <= k; ++c) {
                    if (c == old) continue;
                    probe[static_cast<std::size_t>(v)] = c;
                    auto it = index.find(probe);
                    if (it != index.end() && it->second > static_cast<int>(i)) {
                        cg.adj_[i].push_back(it->second);
                        cg.adj_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
                    }
                }
                probe[static_cast<std::size_t>(v)] = old;
            }
        }
        for (auto& nb : cg.adj_) std::sort(nb.begin(), nb.end());
        return cg;
    }

    int vertex_count() const { return static_cast<int>(colorings_.size()); }

    long edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj_) twice += nb.size();
        return static_cast<long>(twice / 2);
    }

    long triangle_count() const {
        long tri = 0;
        const int n = vertex_count();
        for (int u = 0; u < n; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (v < u) continue;
                for (int w : adj_[static_cast<std::size_t>(v)])
                    if (w > v && adjacent(u, w)) ++tri;
            }
        return tri;
    }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& coloring(int v) const { return colorings_[static_cast<std::size_t>(v)]; }
    const Graph& base() const { return base_; }
    int colors() const { return k_; }

    // Induced 4-cycles: over non-adjacent vertex pairs, count non-adjacent
    // pairs among their common neighbors; every square is seen from each of
    // its two diagonals, so halve the total.
    long count_induced_c4() const {
        const int n = vertex_count();
        long twice = 0;
        std::vector<int> common;
        for (int a = 0; a < n; ++a) {
            for (int c = a + 1; c < n; ++c) {
                if (adjacent(a, c)) continue;
                common.clear();
                const auto& na = adj_[static_cast<std::size_t>(a)];
                const auto& nc = adj_[static_cast<std::size_t>(c)];
                std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(),
                                      std::back_inserter(common));
                for (std::size_t i = 0; i < common.size(); ++i)
                    for (std::size_t j = i + 1; j < common.size(); ++j)
                        if (!adjacent(common[i], common[j])) ++twice;
            }
        }
        return twice / 2;
    }

    // Exact number of induced copies of h, by backtracking over induced
    // embeddings (adjacency and non-adjacency both enforced), divided by
    // |Aut(h)|. The budget caps total search nodes.
    long count_induced(const Graph& h, std::size_t budget = kDefaultSearchBudget) const {
        if (h.vertex_count() == 0) return 1;
        if (h.vertex_count() > vertex_count()) return 0;
        const long embeddings = count_embeddings(h, budget);
        const long autos = automorphism_count(h, budget);
        return embeddings / autos;
    }

    // Labels "c(v0)c(v1)..."; dot-separated when colors need several digits.
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(colorings_.size());
        for (const auto& col : colorings_) {
            std::string s;
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (k_ > 9 && i > 0) s += '.';
                s += std::to_string(col[i]);
            }
            out.push_back(std::move(s));
        }
        return out;
    }

    Graph to_graph() const {
        Graph g(vertex_count());
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) g.add_edge(u, v);
        return g;
    }

private:
    // Pattern vertices are matched in a connectivity-first order; candidates
    // must reproduce adjacency and non-adjacency to all matched vertices.
    long count_embeddings(const Graph& h, std::size_t budget) const {
        const int hn = h.vertex_count();
        std::vector<int> order = embedding_order(h);
        std::vector<int> map(static_cast<std::size_t>(hn), -1);
        std::vector<char> used(static_cast<std::size_t>(vertex_count()), 0);
        long found = 0;
        std::size_t nodes = 0;

        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == hn) {
                ++found;
                return;
            }
            const int hv = order[static_cast<std::size_t>(depth)];
            // Restrict candidates to neighbors of an already-matched pattern
            // neighbor when one exists; the first vertex scans everything.
            const int anchor = anchor_for(h, order, depth, map);
            const std::vector<int>* cands = nullptr;
            std::vector<int> all;
            if (anchor >= 0) {
                cands = &adj_[static_cast<std::size_t>(anchor)];
            } else {
                all.resize(static_cast<std::size_t>(vertex_count()));
                for (int i = 0; i < vertex_count(); ++i) all[static_cast<std::size_t>(i)] = i;
                cands = &all;
            }
            for (int gv : *cands) {
                if (used[static_cast<std::size_t>(gv)]) continue;
                if (++nodes > budget)
                    throw budget_error("count_induced: search budget exceeded", budget);
                if (static_cast<int>(adj_[static_cast<std::size_t>(gv)].size()) < h.degree(hv))
                    continue;
                bool ok = true;
                for (int d = 0; d < depth && ok; ++d) {
                    const int hv2 = order[static_cast<std::size_t>(d)];
                    ok = h.has_edge(hv, hv2) ==
                         adjacent(gv, map[static_cast<std::size_t>(hv2)]);
                }
                if (!ok) continue;
                map[static_cast<std::size_t>(hv)] = gv;
                used[static_cast<std::size_t>(gv)] = 1;
                self(self, depth + 1);
                used[static_cast<std::size_t>(gv)] = 0;
                map[static_cast<std::size_t>(hv)] = -1;
            }
        };
        rec(rec, 0);
        return found;
    }

    static long automorphism_count(const Graph& h, std::size_t budget) {
        const int n = h.vertex_count();
        std::vector<int> map(static_cast<std::size_t>(n), -1);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        long found = 0;
        std::size_t nodes = 0;
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == n) {
                ++found;
                return;
            }
            for (int b = 0; b < n; ++b) {
                if (used[static_cast<std::size_t>(b)]) continue;
                if (++nodes > budget) throw budget_error("automorphism count budget exceeded", budget);
                if (h.degree(depth) != h.degree(b)) continue;
                bool ok = true;
                for (int d = 0; d < depth && ok; ++d)
                    ok = h.has_edge(depth, d) == h.has_edge(b, map[static_cast<std::size_t>(d)]);
                if (!ok) continue;
                map[static_cast<std::size_t>(depth)] = b;
                used[static_cast<std::size_t>(b)] = 1;
                self(self, depth + 1);
                used[static_cast<std::size_t>(b)] = 0;
            }
        };
        rec(rec, 0);
        return found;
    }

    static std::vector<int> embedding_order(const Graph& h) {
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

    int anchor_for(const Graph& h, const std::vector<int>& order, int depth,
                   const std::vector<int>& map) const {
        const int hv = order[static_cast<std::size_t>(depth)];
        for (int d = 0; d < depth; ++d) {
            const int hv2 = order[static_cast<std::size_t>(d)];
            if (h.has_edge(hv, hv2)) return map[static_cast<std::size_t>(hv2)];
        }
        return -1;
    }

    Graph base_;
    int k_ = 0;
    std::vector<std::vector<int>> colorings_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace hpoly
