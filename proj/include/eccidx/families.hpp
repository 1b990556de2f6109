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

#include <string>
#include <string_view>
#include <vector>

#include "eccidx/graph.hpp"

namespace eccidx {

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

inline EdgeList complete_edges(std::size_t n) {
    EdgeList out{n, {}};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
}

inline EdgeList cocktail_party_edges(std::size_t k) {
    EdgeList out{2 * k, {}};
    for (std::size_t u = 0; u < 2 * k; ++u)
        for (std::size_t v = u + 1; v < 2 * k; ++v)
            if (!(u % 2 == 0 && v == u + 1)) out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
}

}  // namespace detail

/// Vertices 0..n-1 in path order.
inline Graph path(std::size_t n) {
    detail::require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
    return build_graph(n, edges);
}

/// Center is vertex 0.
inline Graph star(std::size_t n) {
    detail::require(n >= 2, "star needs n >= 2");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
    return build_graph(n, edges);
}

inline Graph complete(std::size_t n) {
    detail::require(n >= 1, "complete graph needs n >= 1");
    return build_graph(detail::complete_edges(n));
}

inline Graph cycle(std::size_t n) {
    detail::require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return build_graph(n, edges);
}

/// K_{2k} minus the perfect matching {2i, 2i+1}.
inline Graph cocktail_party(std::size_t k) {
    detail::require(k >= 2, "cocktail party graph needs k >= 2");
    return build_graph(detail::cocktail_party_edges(k));
}

/// k isolated vertices; only useful as a join operand.
inline EdgeList empty_graph(std::size_t k) { return EdgeList{k, {}}; }

/// Disjoint union of g and h (g first) plus every edge between them. The
/// operands may be disconnected; the result must not be.
inline Graph join(const EdgeList& g, const EdgeList& h) {
    detail::require(g.n + h.n > 0, "join of two empty graphs");
    EdgeList out{g.n + h.n, g.edges};
    const auto shift = static_cast<Vertex>(g.n);
    for (auto [u, v] : h.edges) out.edges.emplace_back(u + shift, v + shift);
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = 0; v < h.n; ++v) out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v) + shift);
    return build_graph(out);
}

inline Graph join(const Graph& g, const Graph& h) { return join(g.edge_list(), h.edge_list()); }

/// CP_{2k} joined with K_{n-2k}, n >= 2. k = 0 gives K_n and 2k = n gives CP_{2k}.
/// k = 1 is rejected here; build it with join(empty_graph(2), ...) instead.
inline Graph cp_join_complete(std::size_t k, std::size_t n) {
    detail::require(n >= 2, "cp_join_complete needs n >= 2");
    detail::require(2 * k <= n, "cp_join_complete needs 2k <= n");
    detail::require(k != 1, "cp_join_complete rejects k = 1 (CP_2 is disconnected)");
    Graph g = k == 0 ? complete(n) : join(detail::cocktail_party_edges(k), detail::complete_edges(n - 2 * k));
    const DistanceProfile p = distance_profile(g);
    for (std::size_t v = 0; v < n; ++v)
        if (p.ecc[v] != static_cast<int>(n) - p.deg[v])
            throw Error(ErrorKind::InternalMismatch, "cp_join_complete postcondition ecc(v) = n - deg(v) failed");
    return g;
}

/// Spine 0..spine_len-1; the pendant vertices of spine vertex 0 come first,
/// then those of vertex 1, and so on.
inline Graph caterpillar(std::size_t spine_len, const std::vector<std::size_t>& leaf_counts) {
    detail::require(spine_len >= 1, "caterpillar needs a nonempty spine");
    detail::require(leaf_counts.size() == spine_len, "caterpillar leaf_counts length must equal spine_len");
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < spine_len; ++v) edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
    std::size_t next = spine_len;
    for (std::size_t s = 0; s < spine_len; ++s)
        for (std::size_t i = 0; i < leaf_counts[s]; ++i) edges.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(next++));
    return build_graph(next, edges);
}

/// G(p, q): pendant paths w v_1 .. v_p and w u_1 .. u_q attached at w. The
/// new vertices follow g's vertices, P first.
struct PendantPathGraph {
    Graph graph;
    Graph base;
    Vertex w = 0;
    std::vector<Vertex> p_path;  // v_1 .. v_p
    std::vector<Vertex> q_path;  // u_1 .. u_q
};

inline PendantPathGraph pendant_paths(const Graph& g, Vertex w, std::size_t p, std::size_t q) {
    if (w < 0 || static_cast<std::size_t>(w) >= g.order())
        throw Error(ErrorKind::InvalidArgument, "attachment vertex out of range");
    detail::require(p >= q, "pendant_paths needs p >= q");
    PendantPathGraph out{g, g, w, {}, {}};
    std::vector<Edge> edges = g.edges();
    auto next = static_cast<Vertex>(g.order());
    auto grow = [&](std::size_t len, std::vector<Vertex>& path) {
        Vertex prev = w;
        for (std::size_t i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            path.push_back(next);
            prev = next++;
        }
    };
    grow(p, out.p_path);
    grow(q, out.q_path);
    out.graph = build_graph(static_cast<std::size_t>(next), edges);
    return out;
}

/// G(p+q, 0) = G(p, q) - w u_1 + v_p u_1.
inline Graph merge_pendant_paths(const PendantPathGraph& gpq) {
    if (gpq.q_path.empty()) throw Error(ErrorKind::PreconditionFailed, "nothing to merge: q = 0");
    const Vertex u1 = gpq.q_path.front();
    const Vertex tail = gpq.p_path.empty() ? gpq.w : gpq.p_path.back();
    std::vector<Edge> edges;
    for (auto e : gpq.graph.edges())
        if (e != Edge{std::min(gpq.w, u1), std::max(gpq.w, u1)}) edges.push_back(e);
    edges.emplace_back(tail, u1);
    return build_graph(gpq.graph.order(), edges);
}

enum class FamilyKind { Path, Star, Complete, Cycle, CocktailParty, CPJoinComplete, Caterpillar, PendantPathGraph };

/// Parameterized family instance. params holds, per kind:
/// Path/Star/Complete/Cycle: {n}; CocktailParty: {k}; CPJoinComplete: {k, n};
/// Caterpillar: the leaf counts (spine length = params.size());
/// PendantPathGraph: {w, p, q} applied to `base`.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::vector<std::size_t> params;
    EdgeList base;
};

inline std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return "path";
        case FamilyKind::Star: return "star";
        case FamilyKind::Complete: return "complete";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::CocktailParty: return "cocktail-party";
        case FamilyKind::CPJoinComplete: return "cp-join-complete";
        case FamilyKind::Caterpillar: return "caterpillar";
        case FamilyKind::PendantPathGraph: return "pendant-paths";
    }
    return "unknown";
}

inline FamilyKind parse_family_kind(std::string_view name) {
    for (auto kind : {FamilyKind::Path, FamilyKind::Star, FamilyKind::Complete, FamilyKind::Cycle,
                      FamilyKind::CocktailParty, FamilyKind::CPJoinComplete, FamilyKind::Caterpillar,
                      FamilyKind::PendantPathGraph})
        if (to_string(kind) == name) return kind;
    throw Error(ErrorKind::InvalidArgument, "unknown family kind '" + std::string(name) + "'");
}

inline Graph build_family(const FamilySpec& spec) {
    auto arity = [&](std::size_t want) {
        detail::require(spec.params.size() == want,
                        std::string(to_string(spec.kind)) + " takes " + std::to_string(want) + " parameter(s)");
    };
    switch (spec.kind) {
        case FamilyKind::Path: arity(1); return path(spec.params[0]);
        case FamilyKind::Star: arity(1); return star(spec.params[0]);
        case FamilyKind::Complete: arity(1); return complete(spec.params[0]);
        case FamilyKind::Cycle: arity(1); return cycle(spec.params[0]);
        case FamilyKind::CocktailParty: arity(1); return cocktail_party(spec.params[0]);
        case FamilyKind::CPJoinComplete: arity(2); return cp_join_complete(spec.params[0], spec.params[1]);
        case FamilyKind::Caterpillar: return caterpillar(spec.params.size(), spec.params);
        case FamilyKind::PendantPathGraph:
            arity(3);
            return pendant_paths(build_graph(spec.base), static_cast<Vertex>(spec.params[0]), spec.params[1], spec.params[2])
                .graph;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family kind");
}

}  // namespace eccidx
