#pragma once

#include <optional>
#include <string>

#include "hpoly/graph.hpp"

namespace hpoly {

inline Graph null_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::domain_error("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph star_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

// Q_s: vertices are s-bit strings, edges between strings at Hamming
// distance one. Q_0 = N_1, Q_1 = P_2, Q_2 = C_4.
inline Graph hypercube_graph(int s) {
    if (s < 0) throw std::domain_error("hypercube_graph: negative dimension");
    if (s > 20) throw std::domain_error("hypercube_graph: dimension too large");
    const int n = 1 << s;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < s; ++b)
            if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
    return g;
}

inline Graph k4_minus_e() {
    Graph g = complete_graph(4);
    return g.remove_edge({0, 1});
}

// Named pattern lookup for the CLI: N<t>, P<t>, K<t>, C<t>, Q<s>, K4-e.
inline std::optional<Graph> pattern_by_name(const std::string& name) {
    if (name == "K4-e" || name == "K4_e") return k4_minus_e();
    if (name.size() < 2) return std::nullopt;
    const char kind = name[0];
    int num = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        num = num * 10 + (name[i] - '0');
    }
    switch (kind) {
        case 'N': return num >= 1 ? std::optional<Graph>(null_graph(num)) : std::nullopt;
        case 'P': return num >= 1 ? std::optional<Graph>(path_graph(num)) : std::nullopt;
        case 'K': return num >= 1 ? std::optional<Graph>(complete_graph(num)) : std::nullopt;
        case 'C': return num >= 3 ? std::optional<Graph>(cycle_graph(num)) : std::nullopt;
        case 'Q': return std::optional<Graph>(hypercube_graph(num));
        default: return std::nullopt;
    }
}

}  // namespace hpoly
