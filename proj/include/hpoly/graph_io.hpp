#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpoly/errors.hpp"
#include "hpoly/graph.hpp"

namespace hpoly {

// graph6 short form (n <= 62): header byte 63+n, then the upper triangle
// of the adjacency matrix in column order (u < v, v ascending), packed
// big-endian six bits per byte, each offset by 63. Strict: exact record
// length and zero padding bits are required so encode(parse(s)) == s.
inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("graph6: empty input", 0);
    const unsigned char h = static_cast<unsigned char>(text[0]);
    if (h < 63 || h > 126) throw parse_error("graph6: malformed header byte", 0);
    if (h == 126) throw parse_error("graph6: long form not supported (n > 62)", 0);
    const int n = h - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() < 1 + body) throw parse_error("graph6: truncated bit field", text.size());
    if (text.size() > 1 + body) throw parse_error("graph6: trailing characters", 1 + body);

    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) throw parse_error("graph6: out-of-range character", byte);
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    // Padding must be zero bits.
    for (; bit < body * 6; ++bit) {
        const std::size_t byte = 1 + bit / 6;
        const unsigned char c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126) throw parse_error("graph6: out-of-range character", byte);
        if ((c - 63) >> (5 - bit % 6) & 1) throw parse_error("graph6: nonzero padding bits", byte);
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::domain_error("graph6: more than 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    out.resize(1 + (bits + 5) / 6, static_cast<char>(63));
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    return out;
}

namespace detail {

struct Token {
    long value;
    std::size_t offset;
};

inline std::vector<Token> tokenize_ints(const std::string& text) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        bool neg = false;
        if (text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("edge list: expected integer", start);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        toks.push_back({neg ? -v : v, start});
    }
    return toks;
}

}  // namespace detail

// Plain text edge list: first line "n m", then m lines "u v". Strict:
// exactly 2 + 2m integers, valid vertex range, no self-loops or repeats.
inline Graph parse_edge_list(const std::string& text) {
    const auto toks = detail::tokenize_ints(text);
    if (toks.size() < 2) throw parse_error("edge list: missing 'n m' header", 0);
    const long n = toks[0].value;
    const long m = toks[1].value;
    if (n < 0) throw parse_error("edge list: negative vertex count", toks[0].offset);
    if (m < 0) throw parse_error("edge list: negative edge count", toks[1].offset);
    if (toks.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw parse_error("edge list: expected " + std::to_string(2 * m) + " endpoint integers",
                          toks.size() > 2 ? toks.back().offset : toks[1].offset);
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        const auto& tu = toks[2 + 2 * static_cast<std::size_t>(i)];
        const auto& tv = toks[3 + 2 * static_cast<std::size_t>(i)];
        if (tu.value < 0 || tu.value >= n) throw parse_error("edge list: vertex out of range", tu.offset);
        if (tv.value < 0 || tv.value >= n) throw parse_error("edge list: vertex out of range", tv.offset);
        if (tu.value == tv.value) throw parse_error("edge list: self-loop", tu.offset);
        if (g.has_edge(static_cast<int>(tu.value), static_cast<int>(tv.value)))
            throw parse_error("edge list: duplicate edge", tu.offset);
        g.add_edge(static_cast<int>(tu.value), static_cast<int>(tv.value));
    }
    return g;
}

inline std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// Undirected DOT output; labels optional (vertex index used when absent).
inline std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {}) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (static_cast<std::size_t>(v) < labels.size())
            out += " [label=\"" + labels[static_cast<std::size_t>(v)] + "\"]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace hpoly
