// Acceptance suite: every headline result the library claims, executed
// end-to-end with exact arithmetic, one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hpoly/closed_forms.hpp"
#include "hpoly/coloring_graph.hpp"
#include "hpoly/generators.hpp"
#include "hpoly/invariants.hpp"
#include "hpoly/patterns.hpp"
#include "helpers.hpp"

using namespace hpoly;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

Poly poly_desc(const std::vector<std::string>& coeffs) {
    std::vector<mpq_class> c;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        mpq_class q;
        if (q.set_str(*it, 10) != 0) throw Failure("bad literal " + *it);
        q.canonicalize();
        c.push_back(q);
    }
    return Poly(std::move(c));
}

const Poly kPairsT1 = poly_desc({"3", "-23", "72", "-118", "107", "-51", "10", "0"});
const Poly kPairsT23 = poly_desc({"3", "-23", "145/2", "-241/2", "223/2", "-109/2", "11", "0"});
const Poly kPairsR1 = poly_desc({"3", "-27", "197/2", "-187", "391/2", "-107", "24", "0"});
const Poly kPairsR2 = poly_desc({"3", "-27", "197/2", "-373/2", "387/2", "-209/2", "23", "0"});
const Poly kPairsG = poly_desc(
    {"7/2", "-115/2", "807/2", "-3123/2", "3582", "-4843", "3547", "-1074", "0"});
const Poly kSquaresG1 = poly_desc({"21/4", "-225/2", "2103/2", "-22321/4", "36637/2",
                                   "-151647/4", "192091/4", "-67543/2", "9978", "0"});
const Poly kSquaresG2 = poly_desc({"21/4", "-225/2", "2103/2", "-22323/4", "36649/2",
                                   "-151757/4", "192331/4", "-67667/2", "10002", "0"});

// --- criterion bodies -----------------------------------------------------

void criterion_table1() {
    for (int n = 3; n <= 8; ++n) {
        const Graph nn = null_graph(n);
        const Graph kn = complete_graph(n);
        const Graph pn = path_graph(n);
        const Graph sn = star_graph(n);
        const Graph cn = cycle_graph(n);

        require(chromatic_closed(FamilySpec::null_family(n)) == chromatic_polynomial(nn),
                "null chromatic n=" + std::to_string(n));
        require(chromatic_closed(FamilySpec::complete(n)) == chromatic_polynomial(kn),
                "complete chromatic n=" + std::to_string(n));
        require(chromatic_closed(FamilySpec::tree(pn.degree_sequence())) == chromatic_polynomial(pn),
                "tree chromatic n=" + std::to_string(n));
        require(chromatic_closed(FamilySpec::cycle(n)) == chromatic_polynomial(cn),
                "cycle chromatic n=" + std::to_string(n));

        require(pairs_closed(FamilySpec::null_family(n)) == pairs_general(nn),
                "null pairs n=" + std::to_string(n));
        require(pairs_closed(FamilySpec::complete(n)) == pairs_general(kn),
                "complete pairs n=" + std::to_string(n));
        require(pairs_closed(tree_spec_from_graph(pn)) == pairs_general(pn),
                "path pairs n=" + std::to_string(n));
        require(pairs_closed(tree_spec_from_graph(sn)) == pairs_general(sn),
                "star pairs n=" + std::to_string(n));
        require(pairs_closed(FamilySpec::cycle(n)) == pairs_general(cn),
                "cycle pairs n=" + std::to_string(n));
    }
    // generic-enumeration cross-check at the top size
    for (const Graph& g : {null_graph(8), complete_graph(8), path_graph(8), cycle_graph(8)}) {
        require(h_polynomial(g, path_graph(2)) == pairs_general(g), "hpoly cross-check n=8");
        require(h_polynomial(g, null_graph(1)) == chromatic_polynomial(g), "N1 cross-check n=8");
    }
}

void criterion_fig7() {
    const Poly t1 = pairs_general(testhelp::fixture("t1"));
    const Poly t2 = pairs_general(testhelp::fixture("t2"));
    const Poly t3 = pairs_general(testhelp::fixture("t3"));
    require(t1 == kPairsT1, "t1 polynomial");
    require(t2 == kPairsT23, "t2 polynomial");
    require(t3 == kPairsT23, "t3 polynomial");
    require(t2 == t3 && t1 != t2, "t2 = t3 distinct from t1");
}

void criterion_fig8() {
    const Poly r1 = pairs_general(testhelp::fixture("r1"));
    const Poly r2 = pairs_general(testhelp::fixture("r2"));
    require(r1 == kPairsR1, "r1 polynomial");
    require(r2 == kPairsR2, "r2 polynomial");
    require(r1 != r2, "r1 differs from r2");
    for (int p = 5; p <= 7; ++p)
        require(r1.coeff(static_cast<std::size_t>(p)) == r2.coeff(static_cast<std::size_t>(p)),
                "agreement above k^4");
    require(r1.coeff(4) != r2.coeff(4), "divergence at k^4");
}

void criterion_fig9() {
    require(pairs_general(testhelp::fixture("g1")) == kPairsG, "g1 polynomial");
    require(pairs_general(testhelp::fixture("g2")) == kPairsG, "g2 polynomial");
}

void criterion_appendix_squares() {
    const Graph g1 = testhelp::fixture("g1");
    const Graph g2 = testhelp::fixture("g2");
    const Poly s1 = c4_count_poly(g1);
    const Poly s2 = c4_count_poly(g2);
    require(s1 == kSquaresG1, "g1 square polynomial");
    require(s2 == kSquaresG2, "g2 square polynomial");
    require(s1.evaluate(4) == 288 && s2.evaluate(4) == 288, "288 squares at k=4");
    require(s1.evaluate(5) == 24540 && s2.evaluate(5) == 24360, "k=5 square counts");
    require(ColoringGraph::build(g1, 4).count_induced_c4() == 288, "oracle g1 squares at k=4");
    require(ColoringGraph::build(g2, 4).count_induced_c4() == 288, "oracle g2 squares at k=4");
    require(ColoringGraph::build(g1, 5).count_induced_c4() == 24540, "oracle g1 squares at k=5");
    require(ColoringGraph::build(g2, 5).count_induced_c4() == 24360, "oracle g2 squares at k=5");
}

void criterion_three_squares() {
    require(c4_count_poly(path_graph(3)).evaluate(3) == 3, "formula value");
    require(ColoringGraph::build(path_graph(3), 3).count_induced_c4() == 3, "oracle value");
}

void criterion_vanishing() {
    const Graph c5 = cycle_graph(5);
    const Graph theta = k4_minus_e();
    for (const auto& g : testhelp::iso_classes_up_to(5)) {
        require(enumerate_minimal_generators(g, c5).empty(), "C5 generators");
        require(enumerate_minimal_generators(g, theta).empty(), "K4-e generators");
    }
    for (const auto& g : testhelp::iso_classes_up_to(5)) {
        for (int k = 1; k <= 4; ++k) {
            const auto cg = ColoringGraph::build(g, k);
            if (cg.vertex_count() < 4) continue;
            require(cg.count_induced(theta, 100'000'000) == 0, "induced K4-e in a coloring graph");
            if (cg.vertex_count() < 5) continue;
            require(cg.count_induced(c5, 100'000'000) == 0, "induced C5 in a coloring graph");
        }
    }
}

void criterion_oracle_sweep() {
    const std::vector<Graph> patterns = {null_graph(1), path_graph(2), path_graph(3),
                                         complete_graph(3), cycle_graph(4)};
    for (const auto& g : testhelp::iso_classes_up_to(5)) {
        std::vector<Poly> polys;
        for (const auto& h : patterns) polys.push_back(h_polynomial(g, h));
        for (int k = 1; k <= 4; ++k) {
            const auto cg = ColoringGraph::build(g, k);
            for (std::size_t i = 0; i < patterns.size(); ++i)
                require(polys[i].evaluate(k) == cg.count_induced(patterns[i], 100'000'000),
                        "oracle equivalence");
        }
    }
}

void criterion_coefficients() {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : testhelp::iso_classes(n)) {
            const Poly pairs = pairs_general(g);
            const auto predicted = predicted_top_coefficients(g);
            const auto literal = literal_coefficient_report(pairs, n);
            require(predicted.a_top3 == literal.a_top3, "top three coefficients");
            require(literal.lowest_nonzero_power == g.component_count(), "lowest power");
            require(literal.alternating, "alternating signs");
        }
    }
}

void criterion_tree_machinery() {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph t = testhelp::random_tree(n, rng);
        const auto degrees = t.degree_sequence();
        require(recover_tree_degrees(pairs_closed(FamilySpec::tree(degrees)), n) == degrees,
                "degree multiset round trip");
    }
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : testhelp::iso_classes(n)) {
            if (!g.is_connected()) continue;
            bool accepted = true;
            try {
                recover_tree_degrees(pairs_general(g), n);
            } catch (const not_a_tree_error&) {
                accepted = false;
            }
            require(accepted == (g.edge_count() == g.vertex_count() - 1),
                    "tree characterization");
        }
    }
}

std::vector<Graph> pseudotree_classes_up_to(int nmax) {
    std::vector<Graph> reps;
    for (int n = 3; n <= nmax; ++n) {
        std::vector<Graph> trees;
        if (n == 3) {
            trees.push_back(path_graph(3));
        } else {
            std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
            for (;;) {
                trees.push_back(testhelp::tree_from_prufer(seq));
                int i = static_cast<int>(seq.size()) - 1;
                while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
                    seq[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
                ++seq[static_cast<std::size_t>(i)];
            }
        }
        std::vector<Graph> bucket;
        for (const auto& t : trees) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (t.has_edge(u, v)) continue;
                    Graph g = t;
                    g.add_edge(u, v);
                    bool fresh = true;
                    for (const auto& rep : bucket)
                        if (rep.degree_sequence() == g.degree_sequence() &&
                            rep.triangle_count() == g.triangle_count() && is_isomorphic(rep, g)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) bucket.push_back(g);
                }
        }
        for (auto& g : bucket) reps.push_back(std::move(g));
    }
    return reps;
}

void criterion_cycle_uniqueness() {
    const auto pseudotrees = pseudotree_classes_up_to(7);
    require(pseudotrees.size() > 40, "pseudotree census looks complete");
    for (const auto& g : pseudotrees) {
        const mpq_class slope = pseudotree_slope_at_two(g);
        require(slope == pseudotree_slope_from_structure(g), "derivative matches case formula");
        const int n = g.vertex_count();
        const bool is_cycle = g.degree_sequence() == std::vector<int>(static_cast<std::size_t>(n), 2);
        const bool attains = slope == n || slope == -n;
        require(attains == is_cycle, "plus-minus n only for cycles");
    }
}

void criterion_hypercubes() {
    const std::vector<int> expected_first_k = {3, 4, 4, 4, 5, 5, 6, 6};
    for (const auto& name : {"g1", "g2"}) {
        const Graph g = testhelp::fixture(name);
        for (int s = 0; s <= 7; ++s) {
            int first = -1;
            for (int k = 1; k <= 6 && first < 0; ++k)
                if (has_hypercube(g, s, k)) first = k;
            require(first == expected_first_k[static_cast<std::size_t>(s)],
                    std::string(name) + " first k for s=" + std::to_string(s));
        }
        for (int k = 1; k <= 9; ++k) require(!has_hypercube(g, 8, k), "no 8-cube ever");
    }
}

void criterion_disjoint_union() {
    std::mt19937 rng(135791);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph a = testhelp::random_graph(1 + static_cast<int>(rng() % 4), 0.5, rng);
        const Graph b = testhelp::random_graph(1 + static_cast<int>(rng() % 4), 0.5, rng);
        require(disjoint_union_pairs(pairs_general(a), chromatic_polynomial(a), pairs_general(b),
                                     chromatic_polynomial(b)) == pairs_general(disjoint_union(a, b)),
                "composed pairs polynomial");
    }
}

void criterion_n2_identity() {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : testhelp::all_graphs(n)) {
            const Poly chrom = chromatic_polynomial(g);
            const Poly expected =
                frac(1, 2) * (chrom * chrom - chrom) - h_polynomial(g, path_graph(2));
            require(h_polynomial(g, null_graph(2)) == expected, "N2 identity");
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string description;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "family closed forms for n = 3..8, cross-checked", criterion_table1},
        {2, "six-vertex trees: printed pairs polynomials, t2 = t3 != t1", criterion_fig7},
        {3, "six-vertex pseudotrees: printed pairs polynomials diverge at k^4", criterion_fig8},
        {4, "seven-vertex pair shares one printed degree-8 pairs polynomial", criterion_fig9},
        {5, "square polynomials: printed forms, 288 at k=4, 24540 vs 24360 at k=5, oracle at k=4 and k=5",
         criterion_appendix_squares},
        {6, "three squares in the 3-coloring graph of the 3-path", criterion_three_squares},
        {7, "C5 and K4-e vanish: no generators, none induced in coloring graphs",
         criterion_vanishing},
        {8, "polynomials equal oracle counts for five patterns on all graphs up to 5 vertices",
         criterion_oracle_sweep},
        {9, "top-three coefficient formulas and lowest nonzero power up to 6 vertices",
         criterion_coefficients},
        {10, "tree degree recovery round trip and tree characterization", criterion_tree_machinery},
        {11, "pseudotree slope formula; plus-minus n only for cycles (up to 7 vertices)",
         criterion_cycle_uniqueness},
        {12, "hypercube first appearance (3,4,4,4,5,5,6,6) for the seven-vertex pair",
         criterion_hypercubes},
        {13, "disjoint union composition on 20 random unions", criterion_disjoint_union},
        {14, "N2 polynomial identity on all graphs up to 4 vertices", criterion_n2_identity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (error.empty() ? "PASS" : "FAIL") << "  " << c.id << "\t" << c.description << "  ("
             << secs << " s)";
        if (!error.empty()) line << "  [" << error << "]";
        std::cout << line.str() << "\n";
        if (!error.empty()) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
