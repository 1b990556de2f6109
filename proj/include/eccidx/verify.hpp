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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eccidx/canonical.hpp"
#include "eccidx/enumerate.hpp"
#include "eccidx/families.hpp"
#include "eccidx/graph_io.hpp"
#include "eccidx/invariants.hpp"
#include "eccidx/parallel.hpp"
#include "eccidx/transforms.hpp"

namespace eccidx {

enum class TheoremId {
    T2i,          // xi_d - xi_c >= 2(n-1-Delta) eps(G)
    T2ii,         // xi_d - xi_c <= 2n(W-m) + M1 - DD
    T3cat,        // tree minimum at fixed (n, diam) attained by a caterpillar
    T3star,       // trees: xi_d - xi_c >= 4n^2 - 12n + 8
    T3path,       // trees: xi_d - xi_c <= path polynomial
    L_illic,      // xi_d growth when merging two pendant paths
    L_xic,        // xi_c growth when merging two pendant paths
    T4sum_upper,  // xi_d + xi_c, diameter form
    T4sum_lower,  // xi_d + xi_c, radius form
    T4twothirds,  // Delta <= 2(n-1)/3  =>  xi_d >= 2 xi_c
    T4radius,     // xi_d >= (n-1 + C(r,2)) eps(G)
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::T2i,     TheoremId::T2ii,        TheoremId::T3cat,       TheoremId::T3star,
    TheoremId::T3path,  TheoremId::L_illic,     TheoremId::L_xic,       TheoremId::T4sum_upper,
    TheoremId::T4sum_lower, TheoremId::T4twothirds, TheoremId::T4radius};

inline std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T2i: return "T2i";
        case TheoremId::T2ii: return "T2ii";
        case TheoremId::T3cat: return "T3cat";
        case TheoremId::T3star: return "T3star";
        case TheoremId::T3path: return "T3path";
        case TheoremId::L_illic: return "L_illic";
        case TheoremId::L_xic: return "L_xic";
        case TheoremId::T4sum_upper: return "T4sum_upper";
        case TheoremId::T4sum_lower: return "T4sum_lower";
        case TheoremId::T4twothirds: return "T4twothirds";
        case TheoremId::T4radius: return "T4radius";
    }
    return "unknown";
}

/// Accepts a theorem id, "T4sum" (both sum bounds) or "all".
inline std::vector<TheoremId> parse_theorems(std::string_view name) {
    if (name == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
    if (name == "T4sum") return {TheoremId::T4sum_upper, TheoremId::T4sum_lower};
    for (TheoremId id : kAllTheorems)
        if (to_string(id) == name) return {id};
    throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + std::string(name) + "'");
}

enum class BoundDirection { Lower, Upper };

/// Outcome of one theorem on one graph. lhs is the graph's actual quantity,
/// rhs the bound; slack is measured so that slack >= 0 means the bound holds.
struct TheoremVerdict {
    TheoremId theorem = TheoremId::T2i;
    std::string graph_id;
    bool applicable = true;
    BoundDirection direction = BoundDirection::Lower;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t slack = 0;
    bool equality = false;
    /// Whether the theorem characterizes its equality case at all.
    bool has_characterization = true;
    /// The proof's per-vertex equality condition evaluated on the graph.
    bool characterization_expected = false;
    /// Independent check against the named extremal family, when one exists.
    std::optional<bool> family_member;
    bool characterization_ok = true;

    bool bound_ok() const { return slack >= 0; }
    bool ok() const { return !applicable || (bound_ok() && characterization_ok); }
};

namespace detail {

inline TheoremVerdict not_applicable(TheoremId id, std::string graph_id) {
    TheoremVerdict v;
    v.theorem = id;
    v.graph_id = std::move(graph_id);
    v.applicable = false;
    return v;
}

inline TheoremVerdict make_verdict(TheoremId id, std::string graph_id, BoundDirection dir, std::int64_t lhs,
                                   std::int64_t rhs, std::optional<bool> expected,
                                   std::optional<bool> family = std::nullopt) {
    TheoremVerdict v;
    v.theorem = id;
    v.graph_id = std::move(graph_id);
    v.direction = dir;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = dir == BoundDirection::Lower ? checked_sub(lhs, rhs) : checked_sub(rhs, lhs);
    v.equality = lhs == rhs;
    v.has_characterization = expected.has_value();
    v.characterization_expected = expected.value_or(false);
    v.family_member = family;
    v.characterization_ok =
        !expected || (v.equality == *expected && (!family || *family == *expected));
    return v;
}

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// Canonical forms of the named graphs of one order, built once per order.
struct ReferenceForms {
    std::string complete;
    std::optional<std::string> star, path, cocktail_party;
    std::set<std::string> cp_join_complete;  // includes k = 1
};

inline std::shared_ptr<const ReferenceForms> reference_forms(std::size_t n) {
    static std::mutex lock;
    static std::map<std::size_t, std::shared_ptr<const ReferenceForms>> cache;
    std::lock_guard guard(lock);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    auto r = std::make_shared<ReferenceForms>();
    r->complete = canonical_form(complete(n));
    if (n >= 2) r->star = canonical_form(star(n));
    r->path = canonical_form(path(n));
    if (n >= 4 && n % 2 == 0) r->cocktail_party = canonical_form(cocktail_party(n / 2));
    for (std::size_t k = 0; n >= 2 && 2 * k <= n; ++k) {
        if (k == 1) {
            if (n >= 3) r->cp_join_complete.insert(canonical_form(join(empty_graph(2), complete(n - 2))));
        } else {
            r->cp_join_complete.insert(canonical_form(cp_join_complete(k, n)));
        }
    }
    return cache.emplace(n, std::move(r)).first->second;
}

// Precomputed per-graph data shared by all single-graph checks.
struct GraphFacts {
    const Graph& g;
    DistanceProfile profile;
    IndexReport report;
    std::string id;
    std::string canon;

    explicit GraphFacts(const Graph& graph)
        : g(graph), profile(distance_profile(graph)), report(index_report(graph, profile)), id(emit_graph6(graph)),
          canon(canonical_form(graph)) {}
};

}  // namespace detail

using detail::GraphFacts;

inline TheoremVerdict check_T2i(const GraphFacts& f) {
    const auto& r = f.report;
    if (r.n < 2) return detail::not_applicable(TheoremId::T2i, f.id);
    const std::int64_t target = 2 * (r.n - 1 - r.max_deg);
    bool per_vertex = true;
    for (std::size_t v = 0; v < f.profile.n; ++v)
        if (f.profile.totdist[v] - f.profile.deg[v] != target) per_vertex = false;
    return detail::make_verdict(TheoremId::T2i, f.id, BoundDirection::Lower, checked_sub(r.xi_d, r.xi_c),
                                checked_mul(target, r.ecc_total), per_vertex, is_regular(f.g) && r.diam <= 2);
}

inline TheoremVerdict check_T2ii(const GraphFacts& f) {
    const auto& r = f.report;
    if (r.n < 2) return detail::not_applicable(TheoremId::T2ii, f.id);
    const std::int64_t rhs =
        checked_add(checked_mul(2 * r.n, r.wiener - r.m), checked_sub(r.zagreb1, r.degree_distance));
    bool per_vertex = true;
    for (std::size_t v = 0; v < f.profile.n; ++v)
        if (f.profile.ecc[v] != r.n - f.profile.deg[v]) per_vertex = false;
    const auto refs = detail::reference_forms(f.g.order());
    const bool is_p4 = r.n == 4 && f.canon == refs->path;
    const bool family = is_p4 || refs->cp_join_complete.count(f.canon) > 0;
    return detail::make_verdict(TheoremId::T2ii, f.id, BoundDirection::Upper, checked_sub(r.xi_d, r.xi_c), rhs,
                                is_p4 || per_vertex, family);
}

/// Star value 4n^2 - 12n + 8 of xi_d - xi_c.
inline std::int64_t star_gap(std::int64_t n) { return checked_add(checked_sub(checked_mul(4 * n, n), 12 * n), 8); }

/// 96 times the path value of xi_d - xi_c:
/// odd n:  25n^4 - 16n^3 - 178n^2 + 304n - 135
/// even n: 25n^4 - 16n^3 - 172n^2 + 304n - 192
inline std::int64_t path_gap_times96(std::int64_t n) {
    const std::int64_t n2 = checked_mul(n, n);
    const std::int64_t n3 = checked_mul(n2, n);
    const std::int64_t n4 = checked_mul(n3, n);
    std::int64_t v = checked_sub(checked_mul(25, n4), checked_mul(16, n3));
    v = checked_sub(v, checked_mul(n % 2 ? 178 : 172, n2));
    v = checked_add(v, checked_mul(304, n));
    return checked_sub(v, n % 2 ? 135 : 192);
}

inline TheoremVerdict check_T3star(const GraphFacts& f) {
    const auto& r = f.report;
    if (!f.g.is_tree() || r.n < 3) return detail::not_applicable(TheoremId::T3star, f.id);
    const auto refs = detail::reference_forms(f.g.order());
    return detail::make_verdict(TheoremId::T3star, f.id, BoundDirection::Lower, checked_sub(r.xi_d, r.xi_c),
                                star_gap(r.n), f.canon == refs->star, r.max_deg == r.n - 1);
}

inline TheoremVerdict check_T3path(const GraphFacts& f) {
    const auto& r = f.report;
    if (!f.g.is_tree() || r.n < 2) return detail::not_applicable(TheoremId::T3path, f.id);
    const auto refs = detail::reference_forms(f.g.order());
    return detail::make_verdict(TheoremId::T3path, f.id, BoundDirection::Upper,
                                checked_mul(96, checked_sub(r.xi_d, r.xi_c)), path_gap_times96(r.n),
                                f.canon == refs->path, r.max_deg <= 2);
}

/// Upper then lower bound on xi_d + xi_c.
inline std::pair<TheoremVerdict, TheoremVerdict> check_T4sum(const GraphFacts& f) {
    const auto& r = f.report;
    if (r.n < 2)
        return {detail::not_applicable(TheoremId::T4sum_upper, f.id),
                detail::not_applicable(TheoremId::T4sum_lower, f.id)};
    const std::int64_t excess = r.wiener + r.m - 2 * detail::choose2(r.n);
    const std::int64_t base = checked_mul(2 * (r.n - 1), r.ecc_total);
    const std::int64_t sum = checked_add(r.xi_d, r.xi_c);
    const bool self_centered = r.diam == r.rad;
    return {detail::make_verdict(TheoremId::T4sum_upper, f.id, BoundDirection::Upper, sum,
                                 checked_add(base, checked_mul(2 * r.diam, excess)), self_centered),
            detail::make_verdict(TheoremId::T4sum_lower, f.id, BoundDirection::Lower, sum,
                                 checked_add(base, checked_mul(2 * r.rad, excess)), self_centered)};
}

inline TheoremVerdict check_T4twothirds(const GraphFacts& f) {
    const auto& r = f.report;
    if (r.n < 2 || 3 * r.max_deg > 2 * (r.n - 1)) return detail::not_applicable(TheoremId::T4twothirds, f.id);
    bool per_vertex = true;
    for (std::size_t v = 0; v < f.profile.n; ++v)
        if (f.profile.ecc[v] != 2 || 3 * f.profile.deg[v] != 2 * (r.n - 1)) per_vertex = false;
    const bool family = r.diam == 2 && r.rad == 2 && is_regular(f.g) && 3 * r.max_deg == 2 * (r.n - 1);
    return detail::make_verdict(TheoremId::T4twothirds, f.id, BoundDirection::Lower, r.xi_d, checked_mul(2, r.xi_c),
                                per_vertex, family);
}

inline TheoremVerdict check_T4radius(const GraphFacts& f) {
    const auto& r = f.report;
    if (r.n < 2) return detail::not_applicable(TheoremId::T4radius, f.id);
    const std::int64_t per_vertex_floor = r.n - 1 + detail::choose2(r.rad);
    bool per_vertex = true;
    for (std::size_t v = 0; v < f.profile.n; ++v)
        if (f.profile.ecc[v] != r.rad || f.profile.ecc[v] != r.n - f.profile.deg[v] ||
            f.profile.totdist[v] != per_vertex_floor)
            per_vertex = false;
    const auto refs = detail::reference_forms(f.g.order());
    const bool family = f.canon == refs->complete || (refs->cocktail_party && f.canon == *refs->cocktail_party);
    return detail::make_verdict(TheoremId::T4radius, f.id, BoundDirection::Lower, r.xi_d,
                                checked_mul(per_vertex_floor, r.ecc_total), per_vertex, family);
}

inline TheoremVerdict check_T2i(const Graph& g) { return check_T2i(GraphFacts(g)); }
inline TheoremVerdict check_T2ii(const Graph& g) { return check_T2ii(GraphFacts(g)); }
inline TheoremVerdict check_T3star(const Graph& g) { return check_T3star(GraphFacts(g)); }
inline TheoremVerdict check_T3path(const Graph& g) { return check_T3path(GraphFacts(g)); }
inline std::pair<TheoremVerdict, TheoremVerdict> check_T4sum(const Graph& g) { return check_T4sum(GraphFacts(g)); }
inline TheoremVerdict check_T4twothirds(const Graph& g) { return check_T4twothirds(GraphFacts(g)); }
inline TheoremVerdict check_T4radius(const Graph& g) { return check_T4radius(GraphFacts(g)); }

namespace detail {

inline std::string lemma_id(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    return emit_graph6(g) + "@w=" + std::to_string(w) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q);
}

inline bool lemma_applicable(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    if (w < 0 || static_cast<std::size_t>(w) >= g.order()) return false;
    const int r = distance_profile(g).ecc[static_cast<std::size_t>(w)];
    return r >= p && p >= q && q >= 1;
}

}  // namespace detail

/// Both pendant-path lemmas on one (g, w, p, q): xi_d growth bound first
/// (compared after scaling by 6), then the xi_c growth bound.
inline std::pair<TheoremVerdict, TheoremVerdict> check_lemmas(const Graph& g, Vertex w, std::int64_t p,
                                                              std::int64_t q) {
    const std::string id = detail::lemma_id(g, w, p, q);
    if (!detail::lemma_applicable(g, w, p, q))
        return {detail::not_applicable(TheoremId::L_illic, id), detail::not_applicable(TheoremId::L_xic, id)};
    const MergeTrace m = merge_paths_delta(g, w, p, q);
    return {detail::make_verdict(TheoremId::L_illic, id, BoundDirection::Lower, checked_mul(6, m.xi_d_increase),
                                 m.xi_d_bound_times6, std::nullopt),
            detail::make_verdict(TheoremId::L_xic, id, BoundDirection::Upper, m.xi_c_increase, m.xi_c_bound,
                                 std::nullopt)};
}

inline TheoremVerdict check_L_illic(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    return check_lemmas(g, w, p, q).first;
}

inline TheoremVerdict check_L_xic(const Graph& g, Vertex w, std::int64_t p, std::int64_t q) {
    return check_lemmas(g, w, p, q).second;
}

/// Minimum of xi_d - xi_c over one (order, diameter) class of trees.
struct CaterpillarMinimum {
    std::int64_t n = 0;
    std::int64_t diameter = 0;
    std::int64_t trees = 0;
    std::int64_t minimum = 0;
    std::int64_t caterpillar_minimum = 0;
    std::vector<std::string> argmin;  // graph6, in stream order
    std::int64_t argmin_caterpillars = 0;

    bool attained_by_caterpillar() const { return argmin_caterpillars > 0; }
};

/// Minimum over the trees of `trees` with the given diameter. Throws when the
/// class is empty.
template <typename Range>
CaterpillarMinimum caterpillar_minimum(const Range& trees, std::int64_t n, std::int64_t diameter) {
    CaterpillarMinimum out;
    out.n = n;
    out.diameter = diameter;
    std::optional<std::int64_t> best, best_cat;
    for (const Graph& t : trees) {
        if (!t.is_tree() || static_cast<std::int64_t>(t.order()) != n) continue;
        const IndexReport r = index_report(t);
        if (r.diam != diameter) continue;
        ++out.trees;
        const std::int64_t gap = checked_sub(r.xi_d, r.xi_c);
        const bool cat = is_caterpillar(t);
        if (cat && (!best_cat || gap < *best_cat)) best_cat = gap;
        if (!best || gap < *best) {
            best = gap;
            out.argmin.clear();
            out.argmin_caterpillars = 0;
        }
        if (gap == *best) {
            out.argmin.push_back(emit_graph6(t));
            out.argmin_caterpillars += cat ? 1 : 0;
        }
    }
    if (!best)
        throw Error(ErrorKind::InvalidArgument,
                    "no tree of order " + std::to_string(n) + " and diameter " + std::to_string(diameter));
    out.minimum = *best;
    out.caterpillar_minimum = best_cat.value_or(*best);
    return out;
}

inline CaterpillarMinimum check_T3cat(std::size_t n, std::int64_t diameter) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "T3cat needs n >= 3");
    return caterpillar_minimum(all_trees(n), static_cast<std::int64_t>(n), diameter);
}

/// The class minimum never exceeds the caterpillar minimum; the theorem says
/// the two coincide.
inline TheoremVerdict to_verdict(const CaterpillarMinimum& c) {
    return detail::make_verdict(TheoremId::T3cat, "n=" + std::to_string(c.n) + ",d=" + std::to_string(c.diameter),
                                BoundDirection::Upper, c.minimum, c.caterpillar_minimum, true,
                                c.attained_by_caterpillar());
}

// ---------------------------------------------------------------------------
// Suites

struct TheoremTally {
    std::int64_t checked = 0;
    std::int64_t equalities = 0;
    std::int64_t violations = 0;
    std::int64_t mismatches = 0;
    std::int64_t not_applicable = 0;

    void add(const TheoremVerdict& v) {
        if (!v.applicable) {
            ++not_applicable;
            return;
        }
        ++checked;
        if (v.equality) ++equalities;
        if (!v.bound_ok()) ++violations;
        if (!v.characterization_ok) ++mismatches;
    }

    TheoremTally& operator+=(const TheoremTally& o) {
        checked += o.checked;
        equalities += o.equalities;
        violations += o.violations;
        mismatches += o.mismatches;
        not_applicable += o.not_applicable;
        return *this;
    }
};

struct SuiteOptions {
    /// Largest p + q swept for the pendant-path lemmas.
    std::int64_t max_path_sum = 5;
    std::size_t workers = 1;
    /// Keep every verdict (for per-graph CSV), not just failing ones.
    bool keep_verdicts = false;
};

struct SuiteReport {
    std::int64_t graphs = 0;
    std::map<TheoremId, TheoremTally> tallies;
    std::vector<TheoremVerdict> failures;
    std::vector<TheoremVerdict> verdicts;
    std::vector<CaterpillarMinimum> caterpillar_minima;

    std::int64_t failure_count() const { return static_cast<std::int64_t>(failures.size()); }
    bool passed() const { return failures.empty(); }
};

namespace detail {

inline void record(SuiteReport& rep, const TheoremVerdict& v, bool keep) {
    rep.tallies[v.theorem].add(v);
    if (!v.ok()) rep.failures.push_back(v);
    if (keep && v.applicable) rep.verdicts.push_back(v);
}

inline bool selected(const std::vector<TheoremId>& ids, TheoremId id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline void check_one(const Graph& g, const std::vector<TheoremId>& ids, const SuiteOptions& opt, SuiteReport& rep) {
    ++rep.graphs;
    const GraphFacts f(g);
    auto want = [&](TheoremId id) { return selected(ids, id); };
    if (want(TheoremId::T2i)) record(rep, check_T2i(f), opt.keep_verdicts);
    if (want(TheoremId::T2ii)) record(rep, check_T2ii(f), opt.keep_verdicts);
    if (want(TheoremId::T3star)) record(rep, check_T3star(f), opt.keep_verdicts);
    if (want(TheoremId::T3path)) record(rep, check_T3path(f), opt.keep_verdicts);
    if (want(TheoremId::T4sum_upper) || want(TheoremId::T4sum_lower)) {
        auto [up, low] = check_T4sum(f);
        if (want(TheoremId::T4sum_upper)) record(rep, up, opt.keep_verdicts);
        if (want(TheoremId::T4sum_lower)) record(rep, low, opt.keep_verdicts);
    }
    if (want(TheoremId::T4twothirds)) record(rep, check_T4twothirds(f), opt.keep_verdicts);
    if (want(TheoremId::T4radius)) record(rep, check_T4radius(f), opt.keep_verdicts);
    if (want(TheoremId::L_illic) || want(TheoremId::L_xic)) {
        for (std::size_t w = 0; w < g.order(); ++w) {
            const std::int64_t r = f.profile.ecc[w];
            for (std::int64_t p = 1; p <= r; ++p)
                for (std::int64_t q = 1; q <= p && p + q <= opt.max_path_sum; ++q) {
                    auto [illic, xic] = check_lemmas(g, static_cast<Vertex>(w), p, q);
                    if (want(TheoremId::L_illic)) record(rep, illic, opt.keep_verdicts);
                    if (want(TheoremId::L_xic)) record(rep, xic, opt.keep_verdicts);
                }
        }
    }
}

inline bool verdict_order(const TheoremVerdict& a, const TheoremVerdict& b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return a.graph_id < b.graph_id;
}

}  // namespace detail

/// Runs the selected checks over every graph of `stream`. T3cat is evaluated
/// per diameter class over the trees of the stream. Chunks run in parallel
/// and merge in chunk order; failure and verdict lists are sorted, so the
/// report does not depend on the worker count.
inline SuiteReport run_suite(const std::vector<TheoremId>& ids, const GraphStream& stream,
                             const SuiteOptions& opt = {}) {
    auto parts = map_chunks<SuiteReport>(stream.size(), opt.workers, [&](std::size_t b, std::size_t e) {
        SuiteReport part;
        for (std::size_t i = b; i < e; ++i) detail::check_one(stream[i], ids, opt, part);
        return part;
    });
    SuiteReport rep;
    for (TheoremId id : ids) rep.tallies[id];
    for (auto& part : parts) {
        rep.graphs += part.graphs;
        for (auto& [id, t] : part.tallies) rep.tallies[id] += t;
        rep.failures.insert(rep.failures.end(), part.failures.begin(), part.failures.end());
        rep.verdicts.insert(rep.verdicts.end(), part.verdicts.begin(), part.verdicts.end());
    }
    if (detail::selected(ids, TheoremId::T3cat)) {
        std::map<std::pair<std::int64_t, std::int64_t>, bool> classes;
        for (const Graph& g : stream)
            if (g.is_tree() && g.order() >= 3) classes[{static_cast<std::int64_t>(g.order()), index_report(g).diam}] = true;
        for (const auto& [key, unused] : classes) {
            CaterpillarMinimum c = caterpillar_minimum(stream, key.first, key.second);
            detail::record(rep, to_verdict(c), opt.keep_verdicts);
            rep.caterpillar_minima.push_back(std::move(c));
        }
    }
    std::stable_sort(rep.failures.begin(), rep.failures.end(), detail::verdict_order);
    std::stable_sort(rep.verdicts.begin(), rep.verdicts.end(), detail::verdict_order);
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string verdict_csv_header() {
    return "theorem,graph,lhs,rhs,slack,equality,characterization_expected,family_member,characterization_ok";
}

inline std::string to_csv_row(const TheoremVerdict& v) {
    auto b = [](bool x) { return x ? "1" : "0"; };
    std::string row = std::string(to_string(v.theorem)) + ",\"" + v.graph_id + "\"," + std::to_string(v.lhs) + ',' +
                      std::to_string(v.rhs) + ',' + std::to_string(v.slack) + ',' + b(v.equality) + ',';
    row += v.has_characterization ? b(v.characterization_expected) : "";
    row += ',';
    row += v.family_member ? b(*v.family_member) : "";
    row += ',';
    row += b(v.characterization_ok);
    return row;
}

inline nlohmann::ordered_json to_json(const TheoremVerdict& v) {
    nlohmann::ordered_json j;
    j["theorem"] = to_string(v.theorem);
    j["graph"] = v.graph_id;
    j["applicable"] = v.applicable;
    if (!v.applicable) return j;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["slack"] = v.slack;
    j["equality"] = v.equality;
    if (v.has_characterization) j["characterization_expected"] = v.characterization_expected;
    if (v.family_member) j["family_member"] = *v.family_member;
    j["characterization_ok"] = v.characterization_ok;
    return j;
}

inline nlohmann::ordered_json to_json(const CaterpillarMinimum& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["diameter"] = c.diameter;
    j["trees"] = c.trees;
    j["minimum"] = c.minimum;
    j["caterpillar_minimum"] = c.caterpillar_minimum;
    j["argmin"] = c.argmin;
    j["argmin_caterpillars"] = c.argmin_caterpillars;
    return j;
}

/// Summary with at most `max_failures` failing verdicts listed.
inline nlohmann::ordered_json to_json(const SuiteReport& rep, std::size_t max_failures = 50) {
    nlohmann::ordered_json j;
    j["graphs"] = rep.graphs;
    nlohmann::ordered_json th = nlohmann::ordered_json::object();
    for (const auto& [id, t] : rep.tallies)
        th[std::string(to_string(id))] = {{"checked", t.checked},       {"equalities", t.equalities},
                                          {"violations", t.violations}, {"mismatches", t.mismatches},
                                          {"not_applicable", t.not_applicable}};
    j["theorems"] = th;
    if (!rep.caterpillar_minima.empty()) {
        j["caterpillar_minima"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.caterpillar_minima) j["caterpillar_minima"].push_back(to_json(c));
    }
    j["failure_count"] = rep.failure_count();
    j["failures"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.failures.size() && i < max_failures; ++i) j["failures"].push_back(to_json(rep.failures[i]));
    j["passed"] = rep.passed();
    return j;
}

}  // namespace eccidx
