#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "hpoly/closed_forms.hpp"
#include "hpoly/graph.hpp"
#include "hpoly/poly.hpp"
#include "hpoly/restraint.hpp"

namespace hpoly {

class not_a_tree_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Standard-form view of a pairs polynomial a_{n+1}k^{n+1} - a_n k^n + ...:
// the leading magnitudes, the lowest power carrying a nonzero coefficient,
// and whether the signs alternate all the way down.
struct CoefficientReport {
    std::array<mpq_class, 3> a_top3;  // a_{n+1}, a_n, a_{n-1}
    int lowest_nonzero_power = 0;
    bool alternating = true;
};

// a_{n+1}, a_n, a_{n-1} of the chromatic pairs polynomial, computed from
// vertex count, edge count, triangle count, and the degree-square sum alone;
// the lowest nonzero power is the component count.
inline CoefficientReport predicted_top_coefficients(const Graph& g) {
    const long n = g.vertex_count();
    const long m = g.edge_count();
    const long tri = g.triangle_count();
    long dsq = 0;
    for (int v = 0; v < g.vertex_count(); ++v) dsq += static_cast<long>(g.degree(v)) * g.degree(v);

    CoefficientReport r;
    r.a_top3[0] = frac(n, 2);
    r.a_top3[1] = frac(n + n * m + 2 * m, 2);
    r.a_top3[2] = frac(1, 2) * (frac(n * m * (m + 1), 2) + mpq_class(2 * m * m - m) -
                                     mpq_class((n + 3) * tri) + frac(dsq, 2));
    r.lowest_nonzero_power = g.component_count();
    r.alternating = true;
    return r;
}

// The same report read off an actual pairs polynomial of an n-vertex graph.
inline CoefficientReport literal_coefficient_report(const Poly& p, int n) {
    if (p.is_zero()) throw std::domain_error("coefficient report of the zero polynomial");
    CoefficientReport r;
    for (int i = 0; i < 3; ++i) {
        const int power = n + 1 - i;
        mpq_class c = power >= 0 ? p.coeff(static_cast<std::size_t>(power)) : mpq_class(0);
        r.a_top3[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : mpq_class(-c);
    }
    int low = 0;
    while (p.coeff(static_cast<std::size_t>(low)) == 0) ++low;
    r.lowest_nonzero_power = low;
    r.alternating = true;
    int expected_sign = 1;  // leading coefficient of a pairs polynomial is positive
    for (int i = p.degree(); i >= low; --i) {
        const mpq_class& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0 || (expected_sign > 0) != (c > 0)) {
            r.alternating = false;
            break;
        }
        expected_sign = -expected_sign;
    }
    return r;
}

// Lowest power with a nonzero coefficient; for a chromatic pairs polynomial
// this is the number of connected components of the underlying graph.
inline int component_count_from_pairs(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("component_count_from_pairs: zero polynomial");
    int low = 0;
    while (p.coeff(static_cast<std::size_t>(low)) == 0) ++low;
    return low;
}

// Pairs polynomial of a disjoint union from the parts' pairs and chromatic
// polynomials.
inline Poly disjoint_union_pairs(const Poly& p1_pairs, const Poly& p1_chrom, const Poly& p2_pairs,
                                 const Poly& p2_chrom) {
    return p1_pairs * p2_chrom + p2_pairs * p1_chrom;
}

// Recovers the degree multiset of an n-vertex tree from its pairs
// polynomial by peeling off n_d for d = 1, 2, ...: divide out C(k,2) and
// the already-recovered terms, divide by (k-2)^(d-1), differentiate, and
// evaluate at 2. Throws not_a_tree_error when p is not the pairs polynomial
// of any n-vertex tree.
inline std::vector<int> recover_tree_degrees(const Poly& p, int n) {
    if (n < 1) throw std::domain_error("recover_tree_degrees: n >= 1 required");
    if (n == 1) {
        if (p != binomial_poly(2))
            throw not_a_tree_error("recover_tree_degrees: polynomial fails the tree form");
        return {0};
    }
    Poly q;
    try {
        q = divide_exact(p, binomial_poly(2));
    } catch (const divisibility_error&) {
        throw not_a_tree_error("recover_tree_degrees: polynomial is not divisible by C(k,2)");
    }
    const Poly km1 = Poly::linear(-1, 1);
    const Poly km2 = Poly::linear(-2, 1);

    std::map<int, long> count;
    long total = 0;
    Poly residue = q;
    for (int d = 1; d <= n - 1 && total < n; ++d) {
        Poly reduced;
        try {
            reduced = divide_exact(residue, km2.pow(static_cast<unsigned>(d - 1)));
        } catch (const divisibility_error&) {
            throw not_a_tree_error("recover_tree_degrees: residue not divisible by (k-2)^(d-1)");
        }
        const mpq_class nd = reduced.derivative().evaluate(2);
        if (nd != 0) {
            if (nd < 0 || nd.get_den() != 1)
                throw not_a_tree_error("recover_tree_degrees: recovered count not a natural number");
            const long c = static_cast<long>(nd.get_num().get_si());
            count[d] = c;
            total += c;
            if (total > n) throw not_a_tree_error("recover_tree_degrees: counts exceed n");
            residue -= mpq_class(c) * (km2.pow(static_cast<unsigned>(d)) *
                                       km1.pow(static_cast<unsigned>(n - d - 1)));
        }
    }
    if (total != n) throw not_a_tree_error("recover_tree_degrees: counts do not sum to n");

    std::vector<int> degrees;
    for (const auto& [d, c] : count)
        for (long i = 0; i < c; ++i) degrees.push_back(d);

    // Full characterization check: the claimed tree form must reproduce p.
    long degsum = 0;
    for (int d : degrees) degsum += d;
    if (degsum != 2L * (n - 1) || pairs_closed(FamilySpec::tree(degrees)) != p)
        throw not_a_tree_error("recover_tree_degrees: polynomial fails the tree form");
    return degrees;
}

namespace detail {

struct PseudotreeShape {
    int cycle_length = 0;
    int degree2_cycle_vertices = 0;
    int leaves = 0;
};

inline PseudotreeShape pseudotree_shape(const Graph& g) {
    PseudotreeShape s;
    const auto cycle = pseudotree_cycle_vertices(g);
    s.cycle_length = static_cast<int>(cycle.size());
    for (int v : cycle)
        if (g.degree(v) == 2) ++s.degree2_cycle_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ++s.leaves;
    return s;
}

}  // namespace detail

// d/dk of the pairs polynomial at k = 2, for a pseudotree. Computed
// symbolically from the restrained sum.
inline mpq_class pseudotree_slope_at_two(const Graph& g) {
    pseudotree_cycle_vertices(g);  // validates pseudotree-ness
    return pairs_general(g).derivative().evaluate(2);
}

// The same slope from structure alone: (-1)^l * l2 + (1 + (-1)^l)/2 * n1,
// where l is the cycle length, l2 the number of degree-2 cycle vertices,
// and n1 the number of leaves.
inline mpq_class pseudotree_slope_from_structure(const Graph& g) {
    const auto s = detail::pseudotree_shape(g);
    const int sign = s.cycle_length % 2 == 0 ? 1 : -1;
    return mpq_class(sign * s.degree2_cycle_vertices) +
           frac(1 + sign, 2) * mpq_class(s.leaves);
}

inline int chromatic_number(const Graph& g, RhoMemo* memo = nullptr) {
    if (g.vertex_count() == 0) return 0;
    const Poly chrom = chromatic_polynomial(g, memo);
    for (int j = 1; j <= g.vertex_count(); ++j)
        if (chrom.evaluate(j) > 0) return j;
    throw std::logic_error("chromatic_number: no value up to n colors");
}

// True iff the k-coloring graph of g contains an induced s-cube: some
// s-subset U and proper coloring c of G[U] with at most floor(k/2) colors
// admit a coloring of G - U avoiding, at each vertex, the doubled palette
// {2c(u)-1, 2c(u)} of its U-neighbors.
inline bool has_hypercube(const Graph& g, int s, int k) {
    if (s < 0 || k < 1) throw std::domain_error("has_hypercube: need s >= 0 and k >= 1");
    RhoMemo memo;
    if (s == 0) return chromatic_polynomial(g, &memo).evaluate(k) > 0;
    if (s > g.vertex_count()) return false;
    const int palette = k / 2;
    if (palette < 1) return false;

    std::vector<std::vector<int>> supports;
    detail::subsets_of_size(g.vertex_count(), s, supports);
    for (const auto& u_set : supports) {
        const Graph gu = g.induced_subgraph(u_set);
        const Graph rest = g.remove_vertices(u_set);
        std::vector<int> coloring(static_cast<std::size_t>(s), 0);
        auto rec = [&](auto&& self, int i) -> bool {
            if (i == s) {
                Restraint r(rest.vertex_count());
                int label = 0;
                for (int z = 0; z < g.vertex_count(); ++z) {
                    if (std::binary_search(u_set.begin(), u_set.end(), z)) continue;
                    for (int j = 0; j < s; ++j)
                        if (g.has_edge(z, u_set[static_cast<std::size_t>(j)])) {
                            r.forbid(label, 2 * coloring[static_cast<std::size_t>(j)] - 1);
                            r.forbid(label, 2 * coloring[static_cast<std::size_t>(j)]);
                        }
                    ++label;
                }
                return rho(rest, r, EdgePick::Smallest, &memo).evaluate(k) > 0;
            }
            for (int c = 1; c <= palette; ++c) {
                bool ok = true;
                for (int j = 0; j < i; ++j)
                    if (gu.has_edge(i, j) && coloring[static_cast<std::size_t>(j)] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                coloring[static_cast<std::size_t>(i)] = c;
                if (self(self, i + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) return true;
    }
    return false;
}

// Sufficient condition: an independent set of size s whose removal leaves a
// graph with chromatic number at most k - 2.
inline bool hypercube_sufficient(const Graph& g, int s, int k) {
    if (s < 0 || k < 1) throw std::domain_error("hypercube_sufficient: need s >= 0 and k >= 1");
    if (s > g.vertex_count()) return false;
    RhoMemo memo;
    std::vector<std::vector<int>> supports;
    detail::subsets_of_size(g.vertex_count(), s, supports);
    for (const auto& u_set : supports) {
        bool independent = true;
        for (std::size_t i = 0; i < u_set.size() && independent; ++i)
            for (std::size_t j = i + 1; j < u_set.size() && independent; ++j)
                if (g.has_edge(u_set[i], u_set[j])) independent = false;
        if (!independent) continue;
        if (chromatic_number(g.remove_vertices(u_set), &memo) <= k - 2) return true;
    }
    return false;
}

}  // namespace hpoly
