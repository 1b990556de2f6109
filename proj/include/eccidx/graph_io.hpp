/*
Copyright 2026 The eccidx Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "eccidx/graph.hpp"

namespace eccidx {

namespace detail {

constexpr int kGraph6Bias = 63;

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Decodes one graph6 line (optional ">>graph6<<" header) without checking
/// connectivity.
inline EdgeList parse_graph6_raw(std::string_view line) {
    line = detail::trim(line);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw Error(ErrorKind::MalformedEncoding, "empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126) throw Error(ErrorKind::MalformedEncoding, "character outside graph6 range");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != '~') {
        n = static_cast<std::size_t>(line[0] - detail::kGraph6Bias);
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == '~')
            throw Error(ErrorKind::MalformedEncoding, "unsupported graph6 order prefix");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(line[i] - detail::kGraph6Bias);
        pos = 4;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (line.size() - pos != expected)
        throw Error(ErrorKind::MalformedEncoding, "graph6 body has " + std::to_string(line.size() - pos) +
                                                      " bytes, expected " + std::to_string(expected));
    EdgeList out;
    out.n = n;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int chunk = line[pos + k / 6] - detail::kGraph6Bias;
            if ((chunk >> (5 - k % 6)) & 1) out.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (k % 6 != 0) {
        const int chunk = line[pos + k / 6] - detail::kGraph6Bias;
        if (chunk & ((1 << (6 - k % 6)) - 1)) throw Error(ErrorKind::MalformedEncoding, "nonzero graph6 padding");
    }
    return out;
}

inline Graph parse_graph6(std::string_view line) { return build_graph(parse_graph6_raw(line)); }

inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 62) throw Error(ErrorKind::OutOfCap, "graph6 output is limited to n <= 62");
    std::string out(1, static_cast<char>(n + detail::kGraph6Bias));
    int chunk = 0, filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + detail::kGraph6Bias));
                chunk = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + detail::kGraph6Bias));
    return out;
}

// Edge-list text: a header line "n m" followed by m lines "u v".

inline Graph parse_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::MalformedEncoding, "edge list needs header 'n m'");
    EdgeList raw;
    raw.n = static_cast<std::size_t>(n);
    raw.edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v)) throw Error(ErrorKind::MalformedEncoding, "edge list ended after " + std::to_string(e) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidEdge, "edge endpoint out of range");
        raw.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(raw);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace eccidx
