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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "eccidx/canonical.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/invariants.hpp"

namespace eccidx {

inline constexpr std::size_t kMaxTreeOrder = 16;
inline constexpr std::size_t kMaxGraphOrder = 8;

enum class Universe { AllTrees, AllConnectedGraphs };

/// A restartable, chunkable sequence of pairwise non-isomorphic graphs. The
/// underlying list is shared; chunk() yields a sub-stream over an index range.
class GraphStream {
public:
    GraphStream(Universe kind, std::size_t n, std::shared_ptr<const std::vector<Graph>> items)
        : kind_(kind), n_(n), items_(std::move(items)), begin_(0), end_(items_->size()) {}

    Universe kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return end_ - begin_; }
    bool empty() const noexcept { return size() == 0; }
    std::size_t count_emitted() const noexcept { return size(); }

    std::span<const Graph> view() const { return std::span<const Graph>(*items_).subspan(begin_, size()); }
    auto begin() const { return view().begin(); }
    auto end() const { return view().end(); }
    const Graph& operator[](std::size_t i) const { return view()[i]; }

    GraphStream chunk(std::size_t first, std::size_t last) const {
        if (first > last || last > size()) throw Error(ErrorKind::InvalidArgument, "chunk range out of bounds");
        GraphStream out = *this;
        out.begin_ = begin_ + first;
        out.end_ = begin_ + last;
        return out;
    }

private:
    Universe kind_;
    std::size_t n_;
    std::shared_ptr<const std::vector<Graph>> items_;
    std::size_t begin_;
    std::size_t end_;
};

namespace detail {

// Rooted canonical level sequence of tree `adj` rooted at `root`: the root
// level followed by the children's sequences in nonincreasing order.
inline std::vector<int> rooted_level_sequence(const std::vector<std::vector<Vertex>>& adj, Vertex root, Vertex parent,
                                              int level) {
    std::vector<std::vector<int>> kids;
    for (Vertex c : adj[static_cast<std::size_t>(root)])
        if (c != parent) kids.push_back(rooted_level_sequence(adj, c, root, level + 1));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> out{level};
    for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
    return out;
}

inline std::vector<Vertex> tree_centers(const std::vector<std::vector<Vertex>>& adj) {
    const std::size_t n = adj.size();
    if (n <= 2) {
        std::vector<Vertex> all;
        for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<Vertex>(v));
        return all;
    }
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) layer.push_back(static_cast<Vertex>(v));
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex u : adj[static_cast<std::size_t>(leaf)])
                if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// Free trees from rooted level sequences (constant-amortized successor on
// canonical sequences), keeping a sequence only when its root is a center
// and, for two centers, it is the larger of the two center rootings.
inline std::vector<Graph> generate_trees(std::size_t n) {
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(build_graph(1, std::span<const Edge>{}));
        return out;
    }
    std::vector<int> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Vertex> last_at_level(n);
    std::vector<Edge> edges;
    while (true) {
        for (auto& a : adj) a.clear();
        edges.clear();
        last_at_level[0] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const Vertex parent = last_at_level[static_cast<std::size_t>(level[i] - 1)];
            last_at_level[static_cast<std::size_t>(level[i])] = static_cast<Vertex>(i);
            adj[static_cast<std::size_t>(parent)].push_back(static_cast<Vertex>(i));
            adj[i].push_back(parent);
            edges.emplace_back(parent, static_cast<Vertex>(i));
        }
        const auto centers = tree_centers(adj);
        bool keep = std::find(centers.begin(), centers.end(), 0) != centers.end();
        if (keep && centers.size() == 2) {
            const Vertex other = centers[0] == 0 ? centers[1] : centers[0];
            keep = level >= rooted_level_sequence(adj, other, -1, 0);
        }
        if (keep) out.push_back(build_graph(n, edges));

        std::size_t p = n;
        for (std::size_t i = n; i-- > 1;)
            if (level[i] > 1) {
                p = i;
                break;
            }
        if (p == n) break;
        std::size_t q = p;
        while (level[--q] != level[p] - 1) {
        }
        for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
    return out;
}

// Connected graphs of order n from those of order n - 1: every connected
// graph has a non-cut vertex, so adding one vertex with a nonempty
// neighbourhood reaches every class. Duplicates are removed by canonical form.
inline std::vector<Graph> generate_connected_graphs(std::size_t n, const std::vector<Graph>& smaller) {
    if (n == 1) return {build_graph(1, std::span<const Edge>{})};
    std::set<std::string> seen;
    const auto fresh = static_cast<Vertex>(n - 1);
    for (const Graph& g : smaller) {
        const std::vector<Edge> base = g.edges();
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<Edge> edges = base;
            for (std::size_t v = 0; v + 1 < n; ++v)
                if (mask & (1u << v)) edges.emplace_back(static_cast<Vertex>(v), fresh);
            seen.insert(canonical_form(build_graph(n, edges)));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& code : seen) out.push_back(parse_graph6(code));
    return out;
}

struct EnumerationCache {
    std::mutex lock;
    std::map<std::size_t, std::shared_ptr<const std::vector<Graph>>> trees;
    std::map<std::size_t, std::shared_ptr<const std::vector<Graph>>> graphs;
};

inline EnumerationCache& enumeration_cache() {
    static EnumerationCache cache;
    return cache;
}

inline std::shared_ptr<const std::vector<Graph>> connected_graphs_of_order(std::size_t n) {
    auto& cache = enumeration_cache();
    {
        std::lock_guard guard(cache.lock);
        if (auto it = cache.graphs.find(n); it != cache.graphs.end()) return it->second;
    }
    std::vector<Graph> smaller;
    if (n > 1) smaller = *connected_graphs_of_order(n - 1);
    auto list = std::make_shared<const std::vector<Graph>>(generate_connected_graphs(n, smaller));
    std::lock_guard guard(cache.lock);
    return cache.graphs.emplace(n, std::move(list)).first->second;
}

}  // namespace detail

/// Every unlabeled tree of order n exactly once, in a fixed order.
inline GraphStream all_trees(std::size_t n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw Error(ErrorKind::OutOfCap, "tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
    auto& cache = detail::enumeration_cache();
    {
        std::lock_guard guard(cache.lock);
        if (auto it = cache.trees.find(n); it != cache.trees.end()) return GraphStream(Universe::AllTrees, n, it->second);
    }
    auto list = std::make_shared<const std::vector<Graph>>(detail::generate_trees(n));
    std::lock_guard guard(cache.lock);
    return GraphStream(Universe::AllTrees, n, cache.trees.emplace(n, std::move(list)).first->second);
}

/// Every unlabeled connected graph of order n exactly once, canonically
/// labeled and sorted by canonical form.
inline GraphStream all_connected_graphs(std::size_t n) {
    if (n < 1 || n > kMaxGraphOrder)
        throw Error(ErrorKind::OutOfCap, "graph enumeration supports 1 <= n <= " + std::to_string(kMaxGraphOrder));
    return GraphStream(Universe::AllConnectedGraphs, n, detail::connected_graphs_of_order(n));
}

inline GraphStream enumerate(Universe kind, std::size_t n) {
    return kind == Universe::AllTrees ? all_trees(n) : all_connected_graphs(n);
}

/// Conjunction of optional constraints on an IndexReport.
struct GraphFilter {
    std::optional<std::int64_t> diameter = std::nullopt;
    std::optional<std::int64_t> radius = std::nullopt;
    std::optional<std::int64_t> max_degree_at_most = std::nullopt;

    bool operator()(const IndexReport& r) const {
        return (!diameter || r.diam == *diameter) && (!radius || r.rad == *radius) &&
               (!max_degree_at_most || r.max_deg <= *max_degree_at_most);
    }
};

/// Lazy view of the graphs of `stream` whose IndexReport satisfies `pred`.
template <typename Pred>
auto filtered(const GraphStream& stream, Pred pred) {
    return stream.view() | std::views::filter([pred](const Graph& g) { return pred(index_report(g)); });
}

/// Materialized filter, for when the result must itself be chunked.
template <typename Pred>
GraphStream filtered_stream(const GraphStream& stream, Pred pred) {
    auto list = std::make_shared<std::vector<Graph>>();
    for (const Graph& g : filtered(stream, pred)) list->push_back(g);
    return GraphStream(stream.kind(), stream.n(), std::move(list));
}

}  // namespace eccidx
