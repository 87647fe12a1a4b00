// Command-line front end: exact chromatic H-polynomials of coloring graphs,
// their closed forms, the brute-force oracle, and the invariant reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpoly/closed_forms.hpp"
#include "hpoly/coloring_graph.hpp"
#include "hpoly/generators.hpp"
#include "hpoly/graph_io.hpp"
#include "hpoly/invariants.hpp"
#include "hpoly/json_io.hpp"
#include "hpoly/patterns.hpp"

using nlohmann::json;
using namespace hpoly;

namespace {

struct KRange {
    int lo = 1, hi = 6;
};

KRange parse_k_range(const std::string& text) {
    KRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) throw std::domain_error("bad k range '" + text + "'");
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graph files are either an edge list ("n m" header) or a graph6 record.
Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream first_line(text.substr(0, text.find('\n')));
    long a, b;
    if (first_line >> a >> b && (first_line >> std::ws).eof()) return parse_edge_list(text);
    std::string record = text;
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) record.pop_back();
    return parse_graph6(record);
}

Graph resolve_pattern(const std::string& spec) {
    if (auto named = pattern_by_name(spec)) return *named;
    Graph h = parse_graph6(spec);
    if (h.vertex_count() == 0) throw std::domain_error("pattern must have at least one vertex");
    return h;
}

void warn_expensive_pattern(const Graph& h) {
    if (h.edge_count() > 4)
        std::cerr << "warning: pattern has " << h.edge_count()
                  << " edges; generator search is exponential (see --budget-nodes)\n";
}

void emit_polynomial(const Poly& p, const KRange& range, bool as_json,
                     const json* extra = nullptr) {
    if (as_json) {
        json out;
        out["text"] = p.to_string();
        out["coefficients"] = poly_to_json(p);
        json values = json::array();
        for (int k = range.lo; k <= range.hi; ++k)
            values.push_back({k, p.evaluate(k).get_str()});
        out["values"] = values;
        if (extra)
            for (const auto& [key, value] : extra->items()) out[key] = value;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << p.to_string() << "\n";
    for (int k = range.lo; k <= range.hi; ++k)
        std::cout << k << "\t" << p.evaluate(k).get_str() << "\n";
    if (extra) std::cout << extra->dump() << "\n";
}

json hypercube_table(const Graph& g, int s_max, const KRange& range, bool sufficient) {
    json table = json::array();
    for (int s = 0; s <= s_max; ++s)
        for (int k = range.lo; k <= range.hi; ++k) {
            const bool present = sufficient ? hypercube_sufficient(g, s, k) : has_hypercube(g, s, k);
            table.push_back({s, k, present});
        }
    return table;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact chromatic H-polynomials of graph coloring graphs"};
    app.require_subcommand(1);

    std::string graph_path, a_path, b_path, pattern_spec, patterns_spec, k_range_text = "1..6";
    std::string export_dot, export_graph6;
    bool as_json = false, dump_generators = false, sufficient = false;
    std::size_t budget_nodes = kDefaultSearchBudget;
    std::size_t budget_colorings = kDefaultColoringBudget;
    int clique_t = 3;
    int k_single = -1;
    int s_single = -1, s_max = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
        if (needs_graph) cmd->add_option("--graph", graph_path, "graph file (edge list or graph6)")->required();
        cmd->add_option("--k-range", k_range_text, "evaluation range, e.g. 1..6");
        cmd->add_option("--k", k_single, "single k (overrides --k-range)");
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_option("--budget-nodes", budget_nodes, "search node budget");
        cmd->add_option("--budget-colorings", budget_colorings, "coloring enumeration budget");
    };

    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomial");
    add_common(chromatic_cmd);
    auto* pairs_cmd = app.add_subcommand("pairs", "chromatic pairs polynomial (edges of the coloring graph)");
    add_common(pairs_cmd);
    auto* hpoly_cmd = app.add_subcommand("hpoly", "chromatic H-polynomial for a pattern");
    add_common(hpoly_cmd);
    hpoly_cmd->add_option("--pattern", pattern_spec, "named pattern (N2, P3, K4, C5, Q3, K4-e) or graph6")->required();
    hpoly_cmd->add_flag("--dump-generators", dump_generators, "emit the minimal generators as JSON");
    auto* clique_cmd = app.add_subcommand("clique", "chromatic K_t-polynomial");
    add_common(clique_cmd);
    clique_cmd->add_option("--t", clique_t, "clique size t >= 2")->required();
    auto* c4_cmd = app.add_subcommand("c4", "induced 4-cycle polynomial");
    add_common(c4_cmd);
    auto* c6_cmd = app.add_subcommand("c6", "induced 6-cycle polynomial");
    add_common(c6_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "build the coloring graph explicitly and count");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--pattern", pattern_spec, "also count induced copies of this pattern");
    oracle_cmd->add_option("--export-dot", export_dot, "write the coloring graph as DOT");
    oracle_cmd->add_option("--export-graph6", export_graph6, "write the coloring graph as graph6");

    auto* invariants_cmd = app.add_subcommand("invariants", "coefficient and structure report");
    add_common(invariants_cmd);

    auto* hypercube_cmd = app.add_subcommand("hypercube", "induced hypercube presence table");
    add_common(hypercube_cmd);
    hypercube_cmd->add_option("--s", s_single, "single cube dimension");
    hypercube_cmd->add_option("--s-max", s_max, "table rows 0..s-max (default |V|)");
    hypercube_cmd->add_flag("--sufficient", sufficient, "use the independent-set sufficient condition");

    auto* distinguish_cmd = app.add_subcommand("distinguish", "compare two graphs across patterns");
    distinguish_cmd->add_option("--a", a_path, "first graph")->required();
    distinguish_cmd->add_option("--b", b_path, "second graph")->required();
    distinguish_cmd->add_option("--patterns", patterns_spec, "comma-separated pattern names")->required();
    distinguish_cmd->add_flag("--json", as_json, "machine-readable output");
    distinguish_cmd->add_option("--budget-nodes", budget_nodes, "search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    KRange range = parse_k_range(k_range_text);
    if (k_single >= 1) range = {k_single, k_single};

    if (chromatic_cmd->parsed()) {
        emit_polynomial(chromatic_polynomial(load_graph(graph_path)), range, as_json);
    } else if (pairs_cmd->parsed()) {
        emit_polynomial(pairs_general(load_graph(graph_path)), range, as_json);
    } else if (hpoly_cmd->parsed()) {
        const Graph g = load_graph(graph_path);
        const Graph h = resolve_pattern(pattern_spec);
        warn_expensive_pattern(h);
        const Poly p = h_polynomial(g, h, budget_nodes);
        std::optional<json> extra;
        if (dump_generators) {
            json gens = json::array();
            for (const auto& gen : enumerate_minimal_generators(g, h, budget_nodes))
                gens.push_back(generator_to_json(gen));
            extra = json{{"generators", gens}};
        }
        emit_polynomial(p, range, as_json, extra ? &*extra : nullptr);
    } else if (clique_cmd->parsed()) {
        emit_polynomial(clique_general(load_graph(graph_path), clique_t), range, as_json);
    } else if (c4_cmd->parsed()) {
        emit_polynomial(c4_count_poly(load_graph(graph_path)), range, as_json);
    } else if (c6_cmd->parsed()) {
        emit_polynomial(c6_count_poly(load_graph(graph_path)), range, as_json);
    } else if (oracle_cmd->parsed()) {
        if (k_single < 1) throw std::domain_error("oracle requires --k");
        const Graph g = load_graph(graph_path);
        const auto cg = ColoringGraph::build(g, k_single, budget_colorings);
        json out;
        out["vertices"] = cg.vertex_count();
        out["edges"] = cg.edge_count();
        out["triangles"] = cg.triangle_count();
        out["squares"] = cg.count_induced_c4();
        if (!pattern_spec.empty()) {
            const Graph h = resolve_pattern(pattern_spec);
            out["induced_" + pattern_spec] = cg.count_induced(h, budget_nodes);
        }
        if (!export_dot.empty()) {
            std::ofstream dot(export_dot);
            dot << to_dot(cg.to_graph(), cg.labels());
        }
        if (!export_graph6.empty()) {
            std::ofstream g6(export_graph6);
            g6 << encode_graph6(cg.to_graph()) << "\n";
        }
        if (as_json)
            std::cout << out.dump(2) << "\n";
        else
            for (const auto& [key, value] : out.items())
                std::cout << key << "\t" << value.dump() << "\n";
    } else if (invariants_cmd->parsed()) {
        const Graph g = load_graph(graph_path);
        const GraphStats st = stats(g);
        const Poly pairs = pairs_general(g);
        const auto predicted = predicted_top_coefficients(g);
        const auto literal = literal_coefficient_report(pairs, g.vertex_count());
        json out;
        out["vertices"] = st.vertex_count;
        out["edges"] = st.edge_count;
        out["components"] = st.components;
        out["triangles"] = st.triangles;
        out["degree_sequence"] = st.degree_sequence;
        out["pairs_polynomial"] = poly_to_json(pairs);
        out["pairs_text"] = pairs.to_string();
        json top3 = json::array(), top3_literal = json::array();
        for (int i = 0; i < 3; ++i) {
            top3.push_back(predicted.a_top3[static_cast<std::size_t>(i)].get_str());
            top3_literal.push_back(literal.a_top3[static_cast<std::size_t>(i)].get_str());
        }
        out["top_coefficients_predicted"] = top3;
        out["top_coefficients_literal"] = top3_literal;
        out["component_count_from_pairs"] = component_count_from_pairs(pairs);
        out["alternating"] = literal.alternating;
        if (g.is_connected() && st.edge_count == st.vertex_count - 1)
            out["tree_degrees_recovered"] = recover_tree_degrees(pairs, g.vertex_count());
        if (g.is_connected() && st.edge_count == st.vertex_count)
            out["pseudotree_slope_at_2"] = pseudotree_slope_at_two(g).get_str();
        if (as_json)
            std::cout << out.dump(2) << "\n";
        else
            for (const auto& [key, value] : out.items())
                std::cout << key << "\t" << value.dump() << "\n";
    } else if (hypercube_cmd->parsed()) {
        const Graph g = load_graph(graph_path);
        json out;
        if (s_single >= 0 && k_single >= 1) {
            const bool present = sufficient ? hypercube_sufficient(g, s_single, k_single)
                                            : has_hypercube(g, s_single, k_single);
            out["present"] = present;
        } else {
            const int rows = s_max >= 0 ? s_max : g.vertex_count();
            out["table"] = hypercube_table(g, rows, range, sufficient);
        }
        if (as_json)
            std::cout << out.dump(2) << "\n";
        else if (out.contains("present"))
            std::cout << (out["present"].get<bool>() ? "yes" : "no") << "\n";
        else
            for (const auto& row : out["table"])
                std::cout << row[0].get<int>() << "\t" << row[1].get<int>() << "\t"
                          << (row[2].get<bool>() ? 1 : 0) << "\n";
    } else if (distinguish_cmd->parsed()) {
        const Graph ga = load_graph(a_path);
        const Graph gb = load_graph(b_path);
        json out = json::object();
        std::stringstream names(patterns_spec);
        std::string name;
        while (std::getline(names, name, ',')) {
            const Graph h = resolve_pattern(name);
            const Poly pa = h_polynomial(ga, h, budget_nodes);
            const Poly pb = h_polynomial(gb, h, budget_nodes);
            if (pa == pb) {
                out[name] = {{"equal", true}};
                if (!as_json) std::cout << name << ": equal\n";
            } else {
                int k = 1;
                while (pa.evaluate(k) == pb.evaluate(k)) ++k;
                out[name] = {{"equal", false},
                             {"first_k", k},
                             {"a", pa.evaluate(k).get_str()},
                             {"b", pb.evaluate(k).get_str()}};
                if (!as_json)
                    std::cout << name << ": differ at k=" << k << " (" << pa.evaluate(k).get_str()
                              << " vs " << pb.evaluate(k).get_str() << ")\n";
            }
        }
        if (as_json) std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
