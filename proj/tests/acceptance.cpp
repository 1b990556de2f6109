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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eccidx/eccidx.hpp"

using namespace eccidx;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

std::int64_t gap_of(const IndexReport& r) { return r.xi_d - r.xi_c; }

std::int64_t star_value(std::int64_t n) { return 4 * n * n - 12 * n + 8; }

std::int64_t path_value_times96(std::int64_t n) {
    const std::int64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    return n % 2 ? 25 * n4 - 16 * n3 - 178 * n2 + 304 * n - 135 : 25 * n4 - 16 * n3 - 172 * n2 + 304 * n - 192;
}

std::set<std::string> cp_family_forms(std::size_t n) {
    std::set<std::string> out;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        if (k == 1) {
            if (n >= 3) out.insert(canonical_form(join(empty_graph(2), complete(n - 2))));
        } else {
            out.insert(canonical_form(cp_join_complete(k, n)));
        }
    }
    return out;
}

template <typename Fn>
void for_each_graph_upto(std::size_t max_n, std::size_t min_n, Fn fn) {
    for (std::size_t n = min_n; n <= max_n; ++n)
        for (const Graph& g : all_connected_graphs(n)) fn(n, g);
}

Outcome star_closed_form() {
    for (std::int64_t n = 3; n <= 50; ++n) {
        const auto r = index_report(star(static_cast<std::size_t>(n)));
        if (gap_of(r) != star_value(n)) return {false, "n=" + std::to_string(n) + " gives " + std::to_string(gap_of(r))};
    }
    return {true, "n in [3,50]"};
}

Outcome path_polynomials() {
    for (std::int64_t n = 4; n <= 60; ++n) {
        const auto r = index_report(path(static_cast<std::size_t>(n)));
        if (96 * gap_of(r) != path_value_times96(n)) return {false, "n=" + std::to_string(n)};
    }
    return {true, "n in [4,60]"};
}

Outcome theorem_2i() {
    std::int64_t checked = 0, violations = 0, wrong_equality = 0;
    for_each_graph_upto(7, 2, [&](std::size_t, const Graph& g) {
        const auto v = check_T2i(g);
        const auto p = distance_profile(g);
        const bool expected = is_regular(g) && p.diameter() <= 2;
        ++checked;
        violations += !v.bound_ok();
        wrong_equality += v.equality != expected;
    });
    const std::size_t at7 = all_connected_graphs(7).size();
    std::ostringstream d;
    d << checked << " graphs (" << at7 << " at n=7), " << violations << " violations, " << wrong_equality
      << " equality mismatches";
    return {violations == 0 && wrong_equality == 0 && at7 == 853, d.str()};
}

Outcome theorem_2ii() {
    std::int64_t violations = 0, wrong_equality = 0, predicate_vs_family = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto family = cp_family_forms(n);
        const std::string p4 = canonical_form(path(4));
        std::set<std::string> predicate_set;
        for (const Graph& g : all_connected_graphs(n)) {
            const auto v = check_T2ii(g);
            const auto p = distance_profile(g);
            bool predicate = true;
            for (std::size_t x = 0; x < n; ++x) predicate &= p.ecc[x] == static_cast<int>(n) - p.deg[x];
            const std::string canon = canonical_form(g);
            const bool is_p4 = canon == p4;
            violations += !v.bound_ok();
            wrong_equality += v.equality != (is_p4 || predicate);
            if (predicate && !is_p4) predicate_set.insert(canon);
        }
        predicate_vs_family += predicate_set != family;
    }
    std::ostringstream d;
    d << violations << " violations, " << wrong_equality << " equality mismatches, " << predicate_vs_family
      << " orders where the predicate set (P4 aside) differs from the CP join family";
    return {violations == 0 && wrong_equality == 0 && predicate_vs_family == 0, d.str()};
}

Outcome tree_minimality() {
    std::int64_t bad = 0, classes = 0, classes_without_caterpillar = 0;
    for (std::size_t n = 3; n <= 10; ++n) {
        const std::string s = canonical_form(star(n));
        for (const Graph& t : all_trees(n)) {
            const auto gap = gap_of(index_report(t));
            const auto sv = star_value(static_cast<std::int64_t>(n));
            if (gap < sv || (gap == sv) != (canonical_form(t) == s)) ++bad;
        }
        for (std::int64_t d = 2; d < static_cast<std::int64_t>(n); ++d) {
            const auto c = caterpillar_minimum(all_trees(n), static_cast<std::int64_t>(n), d);
            ++classes;
            classes_without_caterpillar += !c.attained_by_caterpillar();
        }
    }
    std::ostringstream d;
    d << bad << " trees off the star bound, " << classes_without_caterpillar << " of " << classes
      << " (n,d) classes without a caterpillar argmin; " << all_trees(10).size() << " trees at n=10";
    return {bad == 0 && classes_without_caterpillar == 0 && all_trees(10).size() == 106, d.str()};
}

Outcome path_maximality() {
    std::int64_t bad = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        const std::string p = canonical_form(path(n));
        for (const Graph& t : all_trees(n)) {
            const auto lhs = 96 * gap_of(index_report(t));
            const auto rhs = path_value_times96(static_cast<std::int64_t>(n));
            if (lhs > rhs || (lhs == rhs) != (canonical_form(t) == p)) ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " trees off the path bound"};
}

Outcome lemmas() {
    std::int64_t instances = 0, illic_bad = 0, xic_bad = 0;
    std::string first_illic, first_xic;
    for_each_graph_upto(6, 1, [&](std::size_t n, const Graph& g) {
        const auto prof = distance_profile(g);
        for (std::size_t w = 0; w < n; ++w)
            for (std::int64_t p = 1; p <= prof.ecc[w]; ++p)
                for (std::int64_t q = 1; q <= p && p + q <= 5; ++q) {
                    const auto m = merge_paths_delta(g, static_cast<Vertex>(w), p, q);
                    ++instances;
                    const std::string where = emit_graph6(g) + " w=" + std::to_string(w) + " p=" +
                                              std::to_string(p) + " q=" + std::to_string(q);
                    if (!m.xi_d_bound_holds() && illic_bad++ == 0)
                        first_illic = where + " (6*delta " + std::to_string(6 * m.xi_d_increase) + " < " +
                                      std::to_string(m.xi_d_bound_times6) + ")";
                    if (!m.xi_c_bound_holds() && xic_bad++ == 0)
                        first_xic = where + " (delta " + std::to_string(m.xi_c_increase) + " > " +
                                    std::to_string(m.xi_c_bound) + ")";
                }
    });
    std::ostringstream d;
    d << instances << " instances; xi_d bound violated " << illic_bad << "x";
    if (illic_bad) d << ", first " << first_illic;
    d << "; xi_c bound violated " << xic_bad << "x";
    if (xic_bad) d << ", first " << first_xic;
    return {illic_bad == 0 && xic_bad == 0, d.str()};
}

Outcome sum_bounds() {
    std::int64_t violations = 0, mismatch_upper = 0, mismatch_lower = 0;
    for_each_graph_upto(7, 2, [&](std::size_t, const Graph& g) {
        auto [up, low] = check_T4sum(g);
        const auto p = distance_profile(g);
        const bool self_centered = p.diameter() == p.radius();
        violations += !up.bound_ok() + !low.bound_ok();
        mismatch_upper += up.equality != self_centered;
        mismatch_lower += low.equality != self_centered;
    });
    auto [c5u, c5l] = check_T4sum(cycle(5));
    auto [s4u, s4l] = check_T4sum(star(4));
    const bool spot = c5u.lhs == 80 && c5u.rhs == 80 && c5l.rhs == 80;
    std::ostringstream d;
    d << violations << " violations; equality differs from self-centered on " << mismatch_upper << " (upper) and "
      << mismatch_lower << " (lower) graphs, e.g. K_{1,3}: " << s4u.lhs << " = " << s4u.rhs << " = " << s4l.rhs
      << "; C5 spot " << (spot ? "80 = 80 = 80" : "wrong");
    return {violations == 0 && mismatch_upper == 0 && mismatch_lower == 0 && spot, d.str()};
}

Outcome two_thirds() {
    std::int64_t applicable = 0, violations = 0, wrong_equality = 0;
    for_each_graph_upto(7, 2, [&](std::size_t n, const Graph& g) {
        const auto r = index_report(g);
        if (3 * r.max_deg > 2 * static_cast<std::int64_t>(n - 1)) return;
        ++applicable;
        const bool expected =
            r.diam == 2 && r.rad == 2 && is_regular(g) && 3 * r.max_deg == 2 * static_cast<std::int64_t>(n - 1);
        violations += r.xi_d < 2 * r.xi_c;
        wrong_equality += (r.xi_d == 2 * r.xi_c) != expected;
    });
    const auto c4 = index_report(cycle(4));
    const bool spot = c4.xi_d == 32 && c4.xi_c == 16;
    std::ostringstream d;
    d << applicable << " applicable graphs, " << violations << " violations, " << wrong_equality
      << " equality mismatches; C4 " << c4.xi_d << " = 2*" << c4.xi_c;
    return {violations == 0 && wrong_equality == 0 && spot, d.str()};
}

Outcome radius_bound() {
    std::int64_t violations = 0, wrong_equality = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        std::set<std::string> family = {canonical_form(complete(n))};
        if (n % 2 == 0 && n >= 4) family.insert(canonical_form(cocktail_party(n / 2)));
        for (const Graph& g : all_connected_graphs(n)) {
            const auto v = check_T4radius(g);
            violations += !v.bound_ok();
            wrong_equality += v.equality != (family.count(canonical_form(g)) > 0);
        }
    }
    const auto oct = check_T4radius(cocktail_party(3));
    std::ostringstream d;
    d << violations << " violations, " << wrong_equality << " equality mismatches; octahedron " << oct.lhs << " = "
      << oct.rhs;
    return {violations == 0 && wrong_equality == 0 && oct.lhs == 72 && oct.rhs == 72, d.str()};
}

Outcome transformations() {
    std::int64_t star_steps = 0, leaf_steps = 0, bad = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        const std::string s = canonical_form(star(n));
        for (const Graph& t : all_trees(n)) {
            for (auto [w, z] : star_ward_candidates(t)) {
                ++star_steps;
                bad += star_ward_shift(t, w, z).trace.gap() <= 0;
            }
            for (auto [u, v] : leaf_shift_candidates(t)) {
                ++leaf_steps;
                bad += shift_leaves_toward_spine(t, u, v).trace.gap() <= 0;
            }
            bad += canonical_form(iterate_star_ward(t).final_graph) != s;
            bad += !is_caterpillar(iterate_leaf_shift(t).final_graph);
        }
    }
    std::ostringstream d;
    d << star_steps << " star-ward and " << leaf_steps << " leaf-shift instances, " << bad << " failures";
    return {bad == 0, d.str()};
}

Outcome infrastructure() {
    // Tree counts indexed from n = 0.
    const std::vector<std::size_t> trees = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    const std::vector<std::size_t> graphs = {1, 1, 2, 6, 21, 112, 853};
    std::int64_t bad = 0, round_trips = 0;
    auto round_trip = [&](const Graph& g) {
        ++round_trips;
        bad += parse_graph6(emit_graph6(g)) != g;
    };
    for (std::size_t n = 1; n <= 10; ++n) {
        bad += all_trees(n).size() != trees[n];
        for (const Graph& t : all_trees(n)) round_trip(t);
    }
    for (std::size_t n = 1; n <= 7; ++n) {
        bad += all_connected_graphs(n).size() != graphs[n - 1];
        for (const Graph& g : all_connected_graphs(n)) round_trip(g);
    }
    return {bad == 0, std::to_string(round_trips) + " graph6 round trips, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "star closed form", 1, star_closed_form},
        {2, "path polynomials", 1, path_polynomials},
        {3, "xi_d - xi_c lower bound and its equality set", 300, theorem_2i},
        {4, "xi_d - xi_c upper bound and the CP join family", 0, theorem_2ii},
        {5, "tree minimality and caterpillar argmins", 60, tree_minimality},
        {6, "path maximality", 0, path_maximality},
        {7, "pendant path merge lemmas", 120, lemmas},
        {8, "xi_d + xi_c sum bounds", 0, sum_bounds},
        {9, "two-thirds degree bound", 0, two_thirds},
        {10, "radius bound", 0, radius_bound},
        {11, "proof transformations", 0, transformations},
        {12, "counts and graph6 round trip", 0, infrastructure},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            out.pass = false;
            out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
        }
        failed += !out.pass;
        std::printf("%s %2d %-46s %8.3f s  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs, out.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
