#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfeg/graph.hpp"

namespace cfeg {

// graph6, short header form only (n <= 62): first byte is 63 + n, then the
// upper adjacency triangle in colex order (0,1),(0,2),(1,2),(0,3),... as a
// bit string padded with zeros to a multiple of 6; every 6-bit group
// b5..b0 (most significant first) is stored as byte 63 + value.

inline constexpr int kGraph6MaxVertices = 62;

inline std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("write_graph6: n > 62 needs the long header form, which is unsupported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_graph6: empty input");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw std::invalid_argument("parse_graph6: long header form (n > 62) unsupported");
    if (header < 63 || header > 63 + kGraph6MaxVertices)
        throw std::invalid_argument("parse_graph6: malformed length header");
    const int n = header - 63;
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const long payload = (pairs + 5) / 6;
    if (static_cast<long>(text.size()) != 1 + payload)
        throw std::invalid_argument("parse_graph6: wrong payload length (expected " +
                                    std::to_string(1 + payload) + " bytes, got " +
                                    std::to_string(text.size()) + ")");
    Graph g(n);
    long bit = 0;
    // Padding bits beyond the last pair are ignored; canonical encodings
    // pad with zeros.
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char byte = static_cast<unsigned char>(text[1 + bit / 6]);
            if (byte < 63 || byte > 126)
                throw std::invalid_argument("parse_graph6: byte out of range at position " +
                                            std::to_string(1 + bit / 6));
            if ((byte - 63) >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

// Edge-list format: header line "n m", then m lines "u v".
inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("parse_edge_list: malformed header, expected \"n m\"");
    if (n > 1'000'000) throw std::invalid_argument("parse_edge_list: vertex count too large");
    if (m > n * (n - 1) / 2) throw std::invalid_argument("parse_edge_list: edge count exceeds n(n-1)/2");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("parse_edge_list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("parse_edge_list: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("parse_edge_list: self-loop");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw std::invalid_argument("parse_edge_list: duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string trailing;
    if (in >> trailing) throw std::invalid_argument("parse_edge_list: trailing data after edge list");
    return g;
}

}  // namespace cfeg
