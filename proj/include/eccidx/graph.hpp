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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "eccidx/error.hpp"

namespace eccidx {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A simple graph that may be disconnected. Used as raw input to
/// build_graph() and as operand of join(), which is the one construction
/// allowed to start from disconnected pieces.
struct EdgeList {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

/// Immutable simple connected graph with sorted adjacency lists on the dense
/// vertex set 0..n-1. Only build_graph() creates one.
class Graph {
public:
    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int max_degree() const {
        int best = 0;
        for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
        return best;
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        return out;
    }

    EdgeList edge_list() const { return EdgeList{order(), edges()}; }
    operator EdgeList() const { return edge_list(); }

    bool is_tree() const { return m_ + 1 == order(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

namespace detail {

inline std::vector<std::vector<Vertex>> adjacency_of(const EdgeList& raw) {
    std::vector<std::vector<Vertex>> adj(raw.n);
    for (auto [u, v] : raw.edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= raw.n || static_cast<std::size_t>(v) >= raw.n)
            throw Error(ErrorKind::InvalidEdge, "edge endpoint out of range");
        if (u == v) throw Error(ErrorKind::InvalidEdge, "self-loop on vertex " + std::to_string(u));
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

template <typename Adjacency>
bool connected(const Adjacency& adj) {
    if (adj.empty()) return false;
    std::vector<char> seen(adj.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == adj.size();
}

}  // namespace detail

/// Validates and builds a connected simple graph. Duplicate edges (in either
/// orientation) are merged.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph must have at least one vertex");
    if (n > static_cast<std::size_t>(std::numeric_limits<std::uint16_t>::max()))
        throw Error(ErrorKind::OutOfCap, "graph too large for a 16-bit distance matrix");
    Graph g;
    g.adj_ = detail::adjacency_of(EdgeList{n, {edges.begin(), edges.end()}});
    if (!detail::connected(g.adj_)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    std::size_t deg_sum = 0;
    for (const auto& a : g.adj_) deg_sum += a.size();
    g.m_ = deg_sum / 2;
    return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(const EdgeList& raw) { return build_graph(raw.n, raw.edges); }

/// All-pairs hop distances plus the per-vertex quantities every index is
/// built from. dist is a flat row-major n*n matrix.
struct DistanceProfile {
    std::size_t n = 0;
    std::vector<std::uint16_t> dist;
    std::vector<int> ecc;
    std::vector<std::int64_t> totdist;
    std::vector<int> deg;

    int d(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)]; }

    int diameter() const { return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end()); }
    int radius() const { return ecc.empty() ? 0 : *std::min_element(ecc.begin(), ecc.end()); }
};

/// BFS from every vertex.
inline DistanceProfile distance_profile(const Graph& g) {
    const std::size_t n = g.order();
    DistanceProfile p;
    p.n = n;
    p.dist.assign(n * n, 0);
    p.ecc.assign(n, 0);
    p.totdist.assign(n, 0);
    p.deg.resize(n);
    constexpr std::uint16_t unseen = std::numeric_limits<std::uint16_t>::max();
    std::vector<Vertex> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
        p.deg[s] = g.degree(static_cast<Vertex>(s));
        std::uint16_t* row = p.dist.data() + s * n;
        std::fill(row, row + n, unseen);
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<Vertex>(s);
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex v : g.neighbors(u)) {
                if (row[v] == unseen) {
                    row[v] = static_cast<std::uint16_t>(row[u] + 1);
                    queue[tail++] = v;
                }
            }
        }
        std::int64_t sum = 0;
        int far = 0;
        for (std::size_t t = 0; t < n; ++t) {
            sum += row[t];
            far = std::max(far, static_cast<int>(row[t]));
        }
        p.ecc[s] = far;
        p.totdist[s] = sum;
    }
    return p;
}

inline bool is_self_centered(const DistanceProfile& p) { return p.diameter() == p.radius(); }
inline bool is_self_centered(const Graph& g) { return is_self_centered(distance_profile(g)); }

inline bool is_regular(const Graph& g) {
    for (std::size_t v = 1; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) != g.degree(0)) return false;
    return true;
}

/// A tree is a caterpillar when deleting its leaves leaves a path (or at most
/// one vertex).
inline bool is_caterpillar(const Graph& g) {
    if (!g.is_tree()) throw Error(ErrorKind::NotATree, "caterpillar test needs a tree");
    std::size_t inner = 0, inner_edges = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) <= 1) continue;
        ++inner;
        int inner_deg = 0;
        for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
            if (g.degree(u) > 1) ++inner_deg;
        if (inner_deg > 2) return false;
        inner_edges += static_cast<std::size_t>(inner_deg);
    }
    // The inner vertices of a tree induce a subtree, so max inner degree <= 2
    // already makes it a path.
    return inner <= 1 || inner_edges / 2 + 1 == inner;
}

}  // namespace eccidx
