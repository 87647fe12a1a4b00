#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "hpoly/generators.hpp"
#include "hpoly/graph.hpp"
#include "hpoly/parallel.hpp"
#include "hpoly/patterns.hpp"
#include "hpoly/poly.hpp"
#include "hpoly/restraint.hpp"

namespace hpoly {

enum class Family { Null, Complete, Tree, Cycle, Pseudotree };

// Parameters for the families with closed-form polynomials. Trees and
// pseudotrees carry their degree multiset; a pseudotree lists the degrees
// of its cycle vertices first (d_1..d_l, then d_{l+1}..d_n).
struct FamilySpec {
    Family family;
    int n = 0;
    std::vector<int> degree_sequence;
    int cycle_length = 0;  // pseudotree only

    static FamilySpec null_family(int n) { return {Family::Null, n, {}, 0}; }
    static FamilySpec complete(int n) { return {Family::Complete, n, {}, 0}; }
    static FamilySpec tree(std::vector<int> degrees) {
        return {Family::Tree, static_cast<int>(degrees.size()), std::move(degrees), 0};
    }
    static FamilySpec cycle(int n) { return {Family::Cycle, n, {}, 0}; }
    static FamilySpec pseudotree(std::vector<int> degrees_cycle_first, int cycle_length) {
        return {Family::Pseudotree, static_cast<int>(degrees_cycle_first.size()),
                std::move(degrees_cycle_first), cycle_length};
    }
};

namespace detail {

inline void validate(const FamilySpec& s) {
    if (s.n < 0) throw std::domain_error("FamilySpec: negative vertex count");
    long degsum = 0;
    for (int d : s.degree_sequence) degsum += d;
    switch (s.family) {
        case Family::Null:
        case Family::Complete:
            if (s.n < 1) throw std::domain_error("FamilySpec: need at least one vertex");
            return;
        case Family::Tree:
            if (s.n < 1 || static_cast<int>(s.degree_sequence.size()) != s.n)
                throw std::domain_error("FamilySpec: tree needs one degree per vertex");
            if (degsum != 2L * (s.n - 1))
                throw std::domain_error("FamilySpec: tree degrees must sum to 2(n-1)");
            for (int d : s.degree_sequence)
                if (d < 0 || d > s.n - 1) throw std::domain_error("FamilySpec: bad tree degree");
            return;
        case Family::Cycle:
            if (s.n < 3) throw std::domain_error("FamilySpec: cycle needs at least 3 vertices");
            return;
        case Family::Pseudotree: {
            if (s.n < 3 || static_cast<int>(s.degree_sequence.size()) != s.n)
                throw std::domain_error("FamilySpec: pseudotree needs one degree per vertex");
            if (s.cycle_length < 3 || s.cycle_length > s.n)
                throw std::domain_error("FamilySpec: pseudotree cycle length out of range");
            if (degsum != 2L * s.n)
                throw std::domain_error("FamilySpec: pseudotree degrees must sum to 2n");
            for (int i = 0; i < s.cycle_length; ++i)
                if (s.degree_sequence[static_cast<std::size_t>(i)] < 2)
                    throw std::domain_error("FamilySpec: cycle vertices have degree >= 2");
            for (int i = 0; i < s.n; ++i) {
                const int d = s.degree_sequence[static_cast<std::size_t>(i)];
                const int hang = i < s.cycle_length ? d - 2 : d;
                if (d < 1 || hang < 0 || hang > s.n - s.cycle_length)
                    throw std::domain_error("FamilySpec: bad pseudotree degree");
            }
            return;
        }
    }
    throw std::domain_error("FamilySpec: unknown family");
}

}  // namespace detail

inline Poly chromatic_cycle(int n) {
    // (k-1)^n + (-1)^n (k-1)
    Poly km1 = Poly::linear(-1, 1);
    Poly p = km1.pow(static_cast<unsigned>(n));
    if (n % 2 == 0)
        p += km1;
    else
        p -= km1;
    return p;
}

// Closed-form chromatic polynomial per family.
inline Poly chromatic_closed(const FamilySpec& s) {
    detail::validate(s);
    const Poly k = Poly::monomial(1);
    const Poly km1 = Poly::linear(-1, 1);
    switch (s.family) {
        case Family::Null: return k.pow(static_cast<unsigned>(s.n));
        case Family::Complete: return falling_factorial(static_cast<unsigned>(s.n));
        case Family::Tree: return k * km1.pow(static_cast<unsigned>(s.n - 1));
        case Family::Cycle: return chromatic_cycle(s.n);
        case Family::Pseudotree:
            return chromatic_cycle(s.cycle_length) *
                   km1.pow(static_cast<unsigned>(s.n - s.cycle_length));
    }
    throw std::domain_error("chromatic_closed: unknown family");
}

inline Poly pairs_cycle(int n) {
    // (n/2) k (k-4) (k-1)^(n-1) + 2n (k-1)^(n-1) + (-1)^n n (k-1)(k-2)
    const Poly k = Poly::monomial(1);
    const Poly km1 = Poly::linear(-1, 1);
    Poly p = frac(n, 2) * (k * Poly::linear(-4, 1) * km1.pow(static_cast<unsigned>(n - 1)));
    p += mpq_class(2 * n) * km1.pow(static_cast<unsigned>(n - 1));
    Poly tail = mpq_class(n) * (km1 * Poly::linear(-2, 1));
    if (n % 2 == 0)
        p += tail;
    else
        p -= tail;
    return p;
}

// Closed-form chromatic pairs polynomial (edge count of the coloring graph)
// per family.
inline Poly pairs_closed(const FamilySpec& s) {
    detail::validate(s);
    const Poly k = Poly::monomial(1);
    const Poly km1 = Poly::linear(-1, 1);
    const Poly km2 = Poly::linear(-2, 1);
    const Poly choose2 = binomial_poly(2);
    switch (s.family) {
        case Family::Null:
            return mpq_class(s.n) * (choose2 * k.pow(static_cast<unsigned>(s.n - 1)));
        case Family::Complete:
            return frac(s.n, 2) * falling_factorial(static_cast<unsigned>(s.n + 1));
        case Family::Tree: {
            Poly sum;
            for (int d : s.degree_sequence)
                sum += km2.pow(static_cast<unsigned>(d)) *
                       km1.pow(static_cast<unsigned>(s.n - d - 1));
            return choose2 * sum;
        }
        case Family::Cycle: return pairs_cycle(s.n);
        case Family::Pseudotree: {
            const int l = s.cycle_length;
            const int hang = s.n - l;
            // Edges of the coloring graph split by whether the recoloured
            // vertex lies on the cycle or hangs off it.
            Poly cycle_sum;
            for (int i = 0; i < l; ++i) {
                const int d = s.degree_sequence[static_cast<std::size_t>(i)];
                cycle_sum += km2.pow(static_cast<unsigned>(d - 2)) *
                             km1.pow(static_cast<unsigned>(hang - (d - 2)));
            }
            Poly p = frac(1, l) * (pairs_cycle(l) * cycle_sum);
            Poly hang_sum;
            for (int i = l; i < s.n; ++i) {
                const int d = s.degree_sequence[static_cast<std::size_t>(i)];
                hang_sum += km2.pow(static_cast<unsigned>(d)) *
                            km1.pow(static_cast<unsigned>(hang - d));
            }
            if (!hang_sum.is_zero())
                p += choose2 * divide_exact(chromatic_cycle(l), k) * hang_sum;
            return p;
        }
    }
    throw std::domain_error("pairs_closed: unknown family");
}

// Restraint on g minus the listed key vertices: each remaining vertex is
// forbidden the palette of every key vertex it neighbors.
inline Restraint neighborhood_restraint(const Graph& g, const std::vector<int>& key_vertices,
                                        const std::vector<std::vector<int>>& palettes) {
    std::vector<char> is_key(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : key_vertices) is_key[static_cast<std::size_t>(v)] = 1;
    Restraint r(g.vertex_count() - static_cast<int>(key_vertices.size()));
    int label = 0;
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (is_key[static_cast<std::size_t>(z)]) continue;
        for (std::size_t i = 0; i < key_vertices.size(); ++i)
            if (g.has_edge(z, key_vertices[i]))
                for (int c : palettes[i]) r.forbid(label, c);
        ++label;
    }
    return r;
}

// General chromatic clique polynomial: C(k,t) * sum over v of rho on G - v
// with v's neighbors forbidden colors 1..t. t = 2 is the pairs polynomial.
inline Poly clique_general(const Graph& g, int t) {
    if (t < 2) throw std::domain_error("clique_general: t >= 2 required");
    std::vector<int> palette(static_cast<std::size_t>(t));
    for (int c = 1; c <= t; ++c) palette[static_cast<std::size_t>(c - 1)] = c;
    std::vector<int> vertices(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = v;
    const auto terms = parallel_map(vertices, [&](int v) {
        return rho(g.remove_vertex(v), neighborhood_restraint(g, {v}, {palette}));
    });
    Poly sum;
    for (const auto& t2 : terms) sum += t2;
    return binomial_poly(static_cast<unsigned>(t)) * sum;
}

// Chromatic pairs polynomial of an arbitrary graph via the restrained sum.
inline Poly pairs_general(const Graph& g) { return clique_general(g, 2); }

// Induced 4-cycle polynomial: a square is two vertices alternately swapping
// colors, with four, three, or two colors in play; three restraint families
// cover the cases.
inline Poly c4_count_poly(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const auto terms = parallel_map(pairs, [&](const std::pair<int, int>& uv) {
        const auto [u, v] = uv;
        Poly term = mpq_class(6) * binomial_poly(4) *
                    rho(g.remove_vertices({u, v}),
                        neighborhood_restraint(g, {u, v}, {{1, 2}, {3, 4}}));
        if (!g.has_edge(u, v)) {
            term += mpq_class(6) * binomial_poly(3) *
                    rho(g.remove_vertices({u, v}),
                        neighborhood_restraint(g, {u, v}, {{1, 2}, {1, 3}}));
            term += binomial_poly(2) * rho(g.remove_vertices({u, v}),
                                           neighborhood_restraint(g, {u, v}, {{1, 2}, {1, 2}}));
        }
        return term;
    });
    Poly total;
    for (const auto& t : terms) total += t;
    return total;
}

namespace detail {

struct C6PairRule {
    int adjacency;  // 1 = edge required, 0 = non-edge required, -1 = any pair
    int multiplicity;
    int kappa;
    std::vector<int> palette_u, palette_v;
};

// Designation: how the rule's (u, v, w) roles map onto an unordered triple.
// Symmetric rules are applied once; designated rules are applied once per
// admissible choice of the distinguished vertex.
enum class C6Designation { Symmetric, DistinguishedW, DistinguishedU };

struct C6TripleRule {
    C6Designation designation;
    bool need_uv_nonedge;   // u-v must be a non-edge
    bool need_uw_nonedge;   // u-w must be a non-edge
    bool need_vw_nonedge;   // v-w must be a non-edge
    int multiplicity;
    int kappa;
    std::vector<int> palette_u, palette_v, palette_w;
};

// Two color-changing vertices: each cycles through three colors.
inline const std::vector<C6PairRule>& c6_pair_rules() {
    static const std::vector<C6PairRule> rules = {
        {1, 1, 3, {1, 2, 3}, {1, 2, 3}},  {0, 6, 3, {1, 2, 3}, {1, 2, 3}},
        {1, 12, 4, {1, 2, 3}, {1, 2, 4}}, {0, 72, 4, {1, 2, 3}, {1, 2, 4}},
        {1, 60, 5, {1, 2, 3}, {1, 4, 5}}, {0, 180, 5, {1, 2, 3}, {1, 4, 5}},
        {-1, 120, 6, {1, 2, 3}, {4, 5, 6}},
    };
    return rules;
}

// Three color-changing vertices: each swaps between two colors; the palette
// overlap pattern dictates which designated vertices must be non-adjacent.
inline const std::vector<C6TripleRule>& c6_triple_rules() {
    static const std::vector<C6TripleRule> rules = {
        {C6Designation::Symmetric, false, false, false, 360, 6, {1, 2}, {3, 4}, {5, 6}},
        {C6Designation::DistinguishedW, true, false, false, 240, 5, {1, 2}, {1, 3}, {4, 5}},
        {C6Designation::DistinguishedW, true, false, false, 24, 4, {1, 2}, {1, 2}, {3, 4}},
        {C6Designation::DistinguishedU, true, true, false, 96, 4, {1, 2}, {1, 3}, {2, 4}},
        {C6Designation::Symmetric, true, true, true, 96, 4, {1, 2}, {1, 3}, {1, 4}},
        {C6Designation::Symmetric, true, true, true, 24, 3, {1, 2}, {1, 3}, {2, 3}},
        {C6Designation::DistinguishedW, true, true, true, 24, 3, {1, 2}, {1, 2}, {1, 3}},
        {C6Designation::Symmetric, true, true, true, 4, 2, {1, 2}, {1, 2}, {1, 2}},
    };
    return rules;
}

}  // namespace detail

// Induced 6-cycle polynomial via the two- and three-vertex restraint
// families. Multiplicities are the minimal-generator counts per designated
// tuple, verified against generic enumeration.
inline Poly c6_count_poly(const Graph& g) {
    const int n = g.vertex_count();

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const auto pair_terms = parallel_map(pairs, [&](const std::pair<int, int>& uv) {
        const auto [u, v] = uv;
        const bool edge = g.has_edge(u, v);
        const Graph rest = g.remove_vertices({u, v});
        Poly term;
        for (const auto& rule : detail::c6_pair_rules()) {
            if (rule.adjacency == 1 && !edge) continue;
            if (rule.adjacency == 0 && edge) continue;
            term += mpq_class(rule.multiplicity) * binomial_poly(static_cast<unsigned>(rule.kappa)) *
                    rho(rest, neighborhood_restraint(g, {u, v}, {rule.palette_u, rule.palette_v}));
        }
        return term;
    });

    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    const auto triple_terms = parallel_map(triples, [&](const std::array<int, 3>& t) {
        const Graph rest = g.remove_vertices({t[0], t[1], t[2]});
        Poly term;
        auto apply = [&](const detail::C6TripleRule& rule, int u, int v, int w) {
            if (rule.need_uv_nonedge && g.has_edge(u, v)) return;
            if (rule.need_uw_nonedge && g.has_edge(u, w)) return;
            if (rule.need_vw_nonedge && g.has_edge(v, w)) return;
            term += mpq_class(rule.multiplicity) * binomial_poly(static_cast<unsigned>(rule.kappa)) *
                    rho(rest, neighborhood_restraint(
                                  g, {u, v, w}, {rule.palette_u, rule.palette_v, rule.palette_w}));
        };
        for (const auto& rule : detail::c6_triple_rules()) {
            switch (rule.designation) {
                case detail::C6Designation::Symmetric:
                    apply(rule, t[0], t[1], t[2]);
                    break;
                case detail::C6Designation::DistinguishedW:
                    apply(rule, t[1], t[2], t[0]);
                    apply(rule, t[0], t[2], t[1]);
                    apply(rule, t[0], t[1], t[2]);
                    break;
                case detail::C6Designation::DistinguishedU:
                    apply(rule, t[0], t[1], t[2]);
                    apply(rule, t[1], t[0], t[2]);
                    apply(rule, t[2], t[0], t[1]);
                    break;
            }
        }
        return term;
    });

    Poly total;
    for (const auto& t : pair_terms) total += t;
    for (const auto& t : triple_terms) total += t;
    return total;
}

enum class SigmaTau { Sigma, Tau };

// tau_n: colorings of P_n with one leaf forbidden {1} and the other {2};
// equals the chromatic polynomial of C_{n+2} divided by k(k-1).
// sigma_n: colorings of P_n with both leaves forbidden {1,2}; small cases
// come straight from rho, larger ones from the tau recurrence.
inline Poly sigma_tau(int n, SigmaTau which) {
    if (n < 1) throw std::domain_error("sigma_tau: n >= 1 required");
    if (which == SigmaTau::Tau) {
        const Poly divisor = Poly::monomial(1) * Poly::linear(-1, 1);
        return divide_exact(chromatic_cycle(n + 2), divisor);
    }
    if (n <= 3) {
        const Graph p = path_graph(n);
        Restraint r(n);
        r.forbid(0, 1);
        r.forbid(0, 2);
        r.forbid(n - 1, 1);
        r.forbid(n - 1, 2);
        return rho(p, r);
    }
    const Poly km1 = Poly::linear(-1, 1);
    Poly p = Poly::linear(-4, 1) * km1.pow(static_cast<unsigned>(n - 1));
    p += mpq_class(2) * (km1 * sigma_tau(n - 3, SigmaTau::Tau));
    p += mpq_class(2) * sigma_tau(n - 2, SigmaTau::Tau);
    return p;
}

// Derive the tree spec (degree multiset) from an explicit graph.
inline FamilySpec tree_spec_from_graph(const Graph& g) {
    if (!g.is_connected() || g.edge_count() != g.vertex_count() - 1)
        throw std::domain_error("tree_spec_from_graph: not a tree");
    std::vector<int> degrees;
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    return FamilySpec::tree(std::move(degrees));
}

// The vertices of the unique cycle of a pseudotree, found by peeling
// degree-1 vertices until none remain.
inline std::vector<int> pseudotree_cycle_vertices(const Graph& g) {
    if (!g.is_connected() || g.edge_count() != g.vertex_count())
        throw std::domain_error("pseudotree: need a connected graph with |E| = |V|");
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        removed[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v))
            if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1)
                queue.push_back(w);
    }
    std::vector<int> cycle;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) cycle.push_back(v);
    return cycle;
}

// Derive the pseudotree spec (cycle-first degree list) from an explicit graph.
inline FamilySpec pseudotree_spec_from_graph(const Graph& g) {
    const auto cycle = pseudotree_cycle_vertices(g);
    std::vector<char> on_cycle(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> degrees;
    for (int v : cycle) {
        on_cycle[static_cast<std::size_t>(v)] = 1;
        degrees.push_back(g.degree(v));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!on_cycle[static_cast<std::size_t>(v)]) degrees.push_back(g.degree(v));
    return FamilySpec::pseudotree(std::move(degrees), static_cast<int>(cycle.size()));
}

}  // namespace hpoly
