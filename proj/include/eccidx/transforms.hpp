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
#include <set>
#include <utility>
#include <vector>

#include "eccidx/families.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/invariants.hpp"

namespace eccidx {

/// Index changes across one rewrite T -> T'. Deltas are before - after.
struct TransformTrace {
    IndexReport before;
    IndexReport after;
    std::int64_t delta_xi_d = 0;
    std::int64_t delta_xi_c = 0;
    std::int64_t moved_set_size = 0;

    /// X_d - X_c, i.e. the drop in xi_d - xi_c.
    std::int64_t gap() const { return checked_sub(delta_xi_d, delta_xi_c); }
};

struct TransformResult {
    Graph graph;
    TransformTrace trace;
};

namespace detail {

inline TransformTrace make_trace(const Graph& before, const Graph& after, std::int64_t moved) {
    TransformTrace t;
    t.before = index_report(before);
    t.after = index_report(after);
    t.delta_xi_d = checked_sub(t.before.xi_d, t.after.xi_d);
    t.delta_xi_c = checked_sub(t.before.xi_c, t.after.xi_c);
    t.moved_set_size = moved;
    return t;
}

inline void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
        throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

// Reattaches every neighbour of `from` except `keep` to `to`.
inline std::pair<Graph, std::int64_t> move_neighbors(const Graph& t, Vertex from, Vertex keep, Vertex to) {
    std::vector<Edge> edges;
    std::int64_t moved = 0;
    for (auto [a, b] : t.edges()) {
        const bool touches = a == from || b == from;
        const Vertex other = a == from ? b : a;
        if (touches && other != keep) {
            edges.emplace_back(to, other);
            ++moved;
        } else {
            edges.emplace_back(a, b);
        }
    }
    return {build_graph(t.order(), edges), moved};
}

}  // namespace detail

/// Moves S = N(u) \ {v} (all leaves) from u to its neighbour v.
inline TransformResult shift_leaves_toward_spine(const Graph& t, Vertex u, Vertex v) {
    if (!t.is_tree()) throw Error(ErrorKind::NotATree, "shift_leaves_toward_spine needs a tree");
    detail::check_vertex(t, u);
    detail::check_vertex(t, v);
    if (!t.has_edge(u, v)) throw Error(ErrorKind::NotAdjacent, "u and v must be adjacent");
    if (t.degree(u) < 2) throw Error(ErrorKind::EmptyMovedSet, "N(u) \\ {v} is empty");
    for (Vertex x : t.neighbors(u))
        if (x != v && t.degree(x) != 1)
            throw Error(ErrorKind::PreconditionFailed, "vertex " + std::to_string(x) + " of N(u) \\ {v} is not a leaf");
    auto [next, moved] = detail::move_neighbors(t, u, v, v);
    return {next, detail::make_trace(t, next, moved)};
}

/// Every (u, v) in the configuration of the caterpillar argument: for some
/// diametral path P and inner vertex z of P whose hanging branch T_z has
/// depth k >= 2, u lies in T_z at depth k - 1 with children, and v is u's
/// parent towards z. Sorted and deduplicated over all diametral paths.
inline std::vector<std::pair<Vertex, Vertex>> leaf_shift_candidates(const Graph& t) {
    if (!t.is_tree()) throw Error(ErrorKind::NotATree, "leaf_shift_candidates needs a tree");
    const DistanceProfile p = distance_profile(t);
    const int diam = p.diameter();
    const std::size_t n = t.order();
    std::set<std::pair<Vertex, Vertex>> found;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (p.d(static_cast<Vertex>(x), static_cast<Vertex>(y)) != diam) continue;
            std::vector<char> on_path(n, 0);
            on_path[x] = 1;
            for (Vertex cur = static_cast<Vertex>(y); cur != static_cast<Vertex>(x);) {
                on_path[static_cast<std::size_t>(cur)] = 1;
                for (Vertex nb : t.neighbors(cur))
                    if (p.d(static_cast<Vertex>(x), nb) + 1 == p.d(static_cast<Vertex>(x), cur)) {
                        cur = nb;
                        break;
                    }
            }
            for (std::size_t z = 0; z < n; ++z) {
                if (!on_path[z] || z == x || z == y) continue;
                // Branch at z: vertices whose tree path to z avoids the rest of P.
                std::vector<Vertex> branch;
                std::vector<Vertex> stack;
                std::vector<char> seen(n, 0);
                seen[z] = 1;
                for (Vertex c : t.neighbors(static_cast<Vertex>(z)))
                    if (!on_path[static_cast<std::size_t>(c)]) stack.push_back(c), seen[static_cast<std::size_t>(c)] = 1;
                int depth = 0;
                while (!stack.empty()) {
                    Vertex a = stack.back();
                    stack.pop_back();
                    branch.push_back(a);
                    depth = std::max(depth, p.d(static_cast<Vertex>(z), a));
                    for (Vertex b : t.neighbors(a))
                        if (!seen[static_cast<std::size_t>(b)]) seen[static_cast<std::size_t>(b)] = 1, stack.push_back(b);
                }
                if (depth < 2) continue;
                for (Vertex a : branch) {
                    if (p.d(static_cast<Vertex>(z), a) != depth - 1 || t.degree(a) < 2) continue;
                    for (Vertex b : t.neighbors(a))
                        if (p.d(static_cast<Vertex>(z), b) == depth - 2) found.emplace(a, b);
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

namespace detail {

// Eccentricity required of z. On a diameter-3 tree no vertex has
// eccentricity 1, so there z is the other central vertex (eccentricity 2).
inline int star_ward_target_ecc(int diameter) { return std::max(diameter - 2, (diameter + 1) / 2); }

}  // namespace detail

/// Moves S = N(w) \ {z} from w to z, where w and z are adjacent with
/// eccentricities d - 1 and d - 2 in a tree of diameter d >= 3 (for d = 3,
/// w and z are the two central vertices).
inline TransformResult star_ward_shift(const Graph& t, Vertex w, Vertex z) {
    if (!t.is_tree()) throw Error(ErrorKind::NotATree, "star_ward_shift needs a tree");
    detail::check_vertex(t, w);
    detail::check_vertex(t, z);
    const DistanceProfile p = distance_profile(t);
    const int d = p.diameter();
    if (d < 3) throw Error(ErrorKind::PreconditionFailed, "star_ward_shift needs diameter >= 3");
    if (!t.has_edge(w, z)) throw Error(ErrorKind::NotAdjacent, "w and z must be adjacent");
    if (p.ecc[static_cast<std::size_t>(w)] != d - 1 ||
        p.ecc[static_cast<std::size_t>(z)] != detail::star_ward_target_ecc(d))
        throw Error(ErrorKind::PreconditionFailed, "need ecc(w) = d - 1 and ecc(z) = d - 2");
    if (t.degree(w) < 2) throw Error(ErrorKind::EmptyMovedSet, "N(w) \\ {z} is empty");
    auto [next, moved] = detail::move_neighbors(t, w, z, z);
    return {next, detail::make_trace(t, next, moved)};
}

/// Lower bound on X_d - X_c for one star-ward step: 5s(n-s-3) + 2s(n-1) - (2n-3).
inline std::int64_t star_ward_gap_bound(std::int64_t n, std::int64_t s) {
    return checked_sub(checked_add(checked_mul(5 * s, n - s - 3), checked_mul(2 * s, n - 1)), 2 * n - 3);
}

/// All valid (w, z) pairs for star_ward_shift, sorted.
inline std::vector<std::pair<Vertex, Vertex>> star_ward_candidates(const Graph& t) {
    if (!t.is_tree()) throw Error(ErrorKind::NotATree, "star_ward_candidates needs a tree");
    const DistanceProfile p = distance_profile(t);
    const int d = p.diameter();
    std::vector<std::pair<Vertex, Vertex>> out;
    if (d < 3) return out;
    for (std::size_t w = 0; w < t.order(); ++w) {
        if (p.ecc[w] != d - 1 || t.degree(static_cast<Vertex>(w)) < 2) continue;
        for (Vertex z : t.neighbors(static_cast<Vertex>(w)))
            if (p.ecc[static_cast<std::size_t>(z)] == detail::star_ward_target_ecc(d)) out.emplace_back(static_cast<Vertex>(w), z);
    }
    return out;
}

/// Repeated rewriting with the first candidate until none is left. Returns
/// the final tree and one trace per step.
struct IterationResult {
    Graph final_graph;
    std::vector<TransformTrace> steps;
};

inline IterationResult iterate_star_ward(const Graph& t) {
    IterationResult r{t, {}};
    for (auto c = star_ward_candidates(r.final_graph); !c.empty(); c = star_ward_candidates(r.final_graph)) {
        auto step = star_ward_shift(r.final_graph, c.front().first, c.front().second);
        r.final_graph = std::move(step.graph);
        r.steps.push_back(step.trace);
    }
    return r;
}

inline IterationResult iterate_leaf_shift(const Graph& t) {
    IterationResult r{t, {}};
    for (auto c = leaf_shift_candidates(r.final_graph); !c.empty(); c = leaf_shift_candidates(r.final_graph)) {
        auto step = shift_leaves_toward_spine(r.final_graph, c.front().first, c.front().second);
        r.final_graph = std::move(step.graph);
        r.steps.push_back(step.trace);
    }
    return r;
}

/// Exact index changes from G(p, q) to G(p+q, 0), with the two bounds they
/// are compared against. Here `trace.before` is G(p, q) and `trace.after` is
/// G(p+q, 0); the increases are after - before.
struct MergeTrace {
    TransformTrace trace;
    std::int64_t p = 0, q = 0, r = 0;
    std::int64_t xi_d_increase = 0;
    std::int64_t xi_c_increase = 0;
    /// 6 * (lower bound on xi_d_increase); compared against 6 * xi_d_increase.
    std::int64_t xi_d_bound_times6 = 0;
    /// Upper bound q(3p + 2m(G) - 1) on xi_c_increase.
    std::int64_t xi_c_bound = 0;

    bool xi_d_bound_holds() const { return checked_mul(6, xi_d_increase) >= xi_d_bound_times6; }
    bool xi_c_bound_holds() const { return xi_c_increase <= xi_c_bound; }
};

/// pq [6 D_G(w) + p(2p-3) + q(2q-3) + 3pq - 12r + 6 n(G)(p+q+r+1) + 6 eps(G)],
/// all quantities taken in the base graph G.
inline std::int64_t merge_xi_d_bound_times6(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    const DistanceProfile prof = distance_profile(g);
    const std::int64_t r = prof.ecc[static_cast<std::size_t>(w)];
    const std::int64_t n = static_cast<std::int64_t>(g.order());
    std::int64_t inner = checked_mul(6, prof.totdist[static_cast<std::size_t>(w)]);
    inner = checked_add(inner, p * (2 * p - 3));
    inner = checked_add(inner, q * (2 * q - 3));
    inner = checked_add(inner, 3 * p * q);
    inner = checked_sub(inner, 12 * r);
    inner = checked_add(inner, checked_mul(6 * n, p + q + r + 1));
    inner = checked_add(inner, checked_mul(6, eccentricity_total(prof)));
    return checked_mul(p * q, inner);
}

inline MergeTrace merge_paths_delta(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    detail::check_vertex(g, w);
    const std::int64_t r = distance_profile(g).ecc[static_cast<std::size_t>(w)];
    if (!(r >= p && p >= q && q >= 1))
        throw Error(ErrorKind::PreconditionFailed, "merge_paths_delta needs ecc(w) >= p >= q >= 1");
    const PendantPathGraph gpq = pendant_paths(g, w, static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    const Graph merged = merge_pendant_paths(gpq);
    MergeTrace out;
    out.trace = detail::make_trace(gpq.graph, merged, q);
    out.p = p;
    out.q = q;
    out.r = r;
    out.xi_d_increase = -out.trace.delta_xi_d;
    out.xi_c_increase = -out.trace.delta_xi_c;
    out.xi_d_bound_times6 = merge_xi_d_bound_times6(g, w, p, q);
    out.xi_c_bound = checked_mul(q, 3 * p + 2 * static_cast<std::int64_t>(g.size()) - 1);
    return out;
}

}  // namespace eccidx
