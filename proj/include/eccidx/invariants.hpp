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

#include <array>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eccidx/graph.hpp"

namespace eccidx {

// Vertex forms of the indices. Each is the defining sum over vertices.

/// Sum of eccentricity times degree.
inline std::int64_t eccentric_connectivity(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, checked_mul(p.ecc[v], p.deg[v]));
    return sum;
}

/// Sum of eccentricity times total distance.
inline std::int64_t eccentric_distance_sum(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, checked_mul(p.ecc[v], p.totdist[v]));
    return sum;
}

inline std::int64_t wiener(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, p.totdist[v]);
    return sum / 2;
}

inline std::int64_t zagreb1(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, checked_mul(p.deg[v], p.deg[v]));
    return sum;
}

inline std::int64_t degree_distance(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, checked_mul(p.deg[v], p.totdist[v]));
    return sum;
}

inline std::int64_t eccentricity_total(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < p.n; ++v) sum = checked_add(sum, p.ecc[v]);
    return sum;
}

// Second routes, over edges and over unordered pairs. Edges are read back
// from the distance matrix (distance 1), so these never touch degrees.

inline std::int64_t eccentric_connectivity_edge_form(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t u = 0; u < p.n; ++u)
        for (std::size_t v = u + 1; v < p.n; ++v)
            if (p.dist[u * p.n + v] == 1) sum = checked_add(sum, p.ecc[u] + p.ecc[v]);
    return sum;
}

inline std::int64_t eccentric_distance_sum_pair_form(const DistanceProfile& p) {
    std::int64_t sum = 0;
    for (std::size_t u = 0; u < p.n; ++u)
        for (std::size_t v = u + 1; v < p.n; ++v)
            sum = checked_add(sum, checked_mul(p.ecc[u] + p.ecc[v], p.dist[u * p.n + v]));
    return sum;
}

struct IndexReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t xi_c = 0;
    std::int64_t xi_d = 0;
    std::int64_t wiener = 0;
    std::int64_t zagreb1 = 0;
    std::int64_t degree_distance = 0;
    std::int64_t ecc_total = 0;
    std::int64_t diam = 0;
    std::int64_t rad = 0;
    std::int64_t max_deg = 0;

    friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

enum class CrossCheck { Default, Always, Never };

/// Whether CrossCheck::Default evaluates the redundant formulas.
#ifdef NDEBUG
inline constexpr bool kCrossCheckByDefault = false;
#else
inline constexpr bool kCrossCheckByDefault = true;
#endif

inline IndexReport index_report(const Graph& g, const DistanceProfile& p, CrossCheck mode = CrossCheck::Default) {
    IndexReport r;
    r.n = static_cast<std::int64_t>(g.order());
    r.m = static_cast<std::int64_t>(g.size());
    r.xi_c = eccentric_connectivity(p);
    r.xi_d = eccentric_distance_sum(p);
    r.wiener = wiener(p);
    r.zagreb1 = zagreb1(p);
    r.degree_distance = degree_distance(p);
    r.ecc_total = eccentricity_total(p);
    r.diam = p.diameter();
    r.rad = p.radius();
    r.max_deg = g.max_degree();
    const bool check = mode == CrossCheck::Always || (mode == CrossCheck::Default && kCrossCheckByDefault);
    if (check) {
        if (eccentric_connectivity_edge_form(p) != r.xi_c)
            throw Error(ErrorKind::InternalMismatch, "edge form of the eccentric connectivity index disagrees");
        if (eccentric_distance_sum_pair_form(p) != r.xi_d)
            throw Error(ErrorKind::InternalMismatch, "pair form of the eccentric distance sum disagrees");
    }
    return r;
}

inline IndexReport index_report(const Graph& g, CrossCheck mode = CrossCheck::Default) {
    return index_report(g, distance_profile(g), mode);
}

// Serialization. Field names and order are fixed.

inline constexpr std::array<std::string_view, 11> kReportFields = {
    "n", "m", "xi_c", "xi_d", "wiener", "zagreb1", "degree_distance", "ecc_total", "diam", "rad", "max_deg"};

inline std::array<std::int64_t, 11> report_values(const IndexReport& r) {
    return {r.n, r.m, r.xi_c, r.xi_d, r.wiener, r.zagreb1, r.degree_distance, r.ecc_total, r.diam, r.rad, r.max_deg};
}

inline std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kReportFields.size(); ++i) {
        if (i) out += ',';
        out += kReportFields[i];
    }
    return out;
}

inline std::string to_csv_row(const IndexReport& r) {
    std::string out;
    const auto values = report_values(r);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const IndexReport& r) {
    nlohmann::ordered_json j;
    const auto values = report_values(r);
    for (std::size_t i = 0; i < values.size(); ++i) j[std::string(kReportFields[i])] = values[i];
    return j;
}

}  // namespace eccidx
