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
#include <cstdint>
#include <string>
#include <vector>

#include "eccidx/graph.hpp"
#include "eccidx/graph_io.hpp"

namespace eccidx {

// Canonical form: among all vertex orderings that list vertices by their
// stable refinement color, the one whose upper-triangle adjacency bitstring
// (graph6 column order: x(0,1), x(0,2), x(1,2), x(0,3), ...) is
// lexicographically smallest. The form is reported as the graph6 string of
// that relabeling, so equal strings mean isomorphic graphs.

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(n_ * n_, 0) {
        for (std::size_t u = 0; u < n_; ++u)
            for (Vertex v : g.neighbors(static_cast<Vertex>(u))) adj_[u * n_ + static_cast<std::size_t>(v)] = 1;
        refine_colors(g);
        find_twins();
    }

    std::vector<Vertex> run() {
        order_.assign(n_, -1);
        placed_.assign(n_, 0);
        cur_.assign(n_ * (n_ ? n_ - 1 : 0) / 2, 0);
        search(0, 0);
        return best_order_;
    }

private:
    // Color refinement until the number of classes stops growing. Colors
    // are ranks of sorted signatures, hence invariant under isomorphism.
    void refine_colors(const Graph& g) {
        color_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) color_[v] = g.degree(static_cast<Vertex>(v));
        std::size_t classes = 0;
        while (true) {
            std::vector<std::vector<int>> sig(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                sig[v].push_back(color_[v]);
                std::vector<int> nb;
                for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nb.push_back(color_[static_cast<std::size_t>(u)]);
                std::sort(nb.begin(), nb.end());
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            std::vector<std::vector<int>> distinct(sig);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t v = 0; v < n_; ++v)
                color_[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
            if (distinct.size() == classes) break;
            classes = distinct.size();
        }
        slot_color_ = color_;
        std::sort(slot_color_.begin(), slot_color_.end());
    }

    // u, v are twins when swapping them is an automorphism; such swaps fix
    // every other vertex, so only one of a twin pair needs to be tried at a
    // branching point.
    void find_twins() {
        twin_.assign(n_ * n_, 0);
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = u + 1; v < n_; ++v) {
                bool same = true;
                for (std::size_t w = 0; w < n_ && same; ++w)
                    if (w != u && w != v && adj_[u * n_ + w] != adj_[v * n_ + w]) same = false;
                twin_[u * n_ + v] = twin_[v * n_ + u] = same;
            }
        }
    }

    void search(std::size_t pos, int state) {
        if (pos == n_) {
            if (!have_best_ || state < 0) {
                best_ = cur_;
                best_order_ = order_;
                have_best_ = true;
                ++version_;
            }
            return;
        }
        const std::size_t col = pos * (pos - (pos ? 1 : 0)) / 2;
        std::vector<std::size_t> tried;
        for (std::size_t v = 0; v < n_; ++v) {
            if (placed_[v] || color_[v] != slot_color_[pos]) continue;
            bool redundant = false;
            for (std::size_t t : tried)
                if (twin_[t * n_ + v]) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);

            for (std::size_t i = 0; i < pos; ++i) cur_[col + i] = adj_[static_cast<std::size_t>(order_[i]) * n_ + v];
            int s = state;
            if (!have_best_) {
                s = -1;
            } else if (s == 0) {
                for (std::size_t i = 0; i < pos && s == 0; ++i)
                    if (cur_[col + i] != best_[col + i]) s = cur_[col + i] < best_[col + i] ? -1 : 1;
            }
            if (s > 0) continue;

            placed_[v] = 1;
            order_[pos] = static_cast<Vertex>(v);
            const std::uint64_t before = version_;
            search(pos + 1, s);
            // A new best was found below: our prefix is now the best prefix.
            if (version_ != before) state = 0;
            placed_[v] = 0;
        }
    }

    std::size_t n_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<std::uint8_t> twin_;

    std::vector<Vertex> order_;
    std::vector<std::uint8_t> placed_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
    std::uint64_t version_ = 0;
};

}  // namespace detail

/// order[i] is the vertex of g that gets canonical label i.
inline std::vector<Vertex> canonical_labeling(const Graph& g) { return detail::Canonizer(g).run(); }

/// Graph with vertex order[i] renamed to i.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> label(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    return build_graph(g.order(), edges);
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

/// graph6 string of the canonical relabeling (n <= 62).
inline std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace eccidx
