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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "eccidx/enumerate.hpp"
#include "eccidx/families.hpp"
#include "eccidx/invariants.hpp"
#include "oracles.hpp"

using namespace eccidx;

TEST(Indices, StarValues) {
    const auto p = distance_profile(star(5));
    EXPECT_EQ(eccentric_connectivity(p), 12);
    EXPECT_EQ(eccentric_distance_sum(p), 60);
    for (std::int64_t n = 3; n <= 20; ++n) {
        const auto q = distance_profile(star(static_cast<std::size_t>(n)));
        EXPECT_EQ(eccentric_connectivity(q), 3 * (n - 1));
        EXPECT_EQ(eccentric_distance_sum(q), (n - 1) * (4 * n - 5));
    }
}

TEST(Indices, CompleteValues) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto p = distance_profile(complete(static_cast<std::size_t>(n)));
        EXPECT_EQ(eccentric_connectivity(p), n * (n - 1));
        EXPECT_EQ(eccentric_distance_sum(p), n * (n - 1));
    }
}

TEST(Indices, Path4) {
    const auto p = distance_profile(path(4));
    EXPECT_EQ(eccentric_connectivity(p), 14);
    EXPECT_EQ(eccentric_distance_sum(p), 52);
    EXPECT_EQ(wiener(p), 10);
    EXPECT_EQ(zagreb1(p), 10);
    EXPECT_EQ(degree_distance(p), 28);
    EXPECT_EQ(eccentricity_total(p), 10);
}

TEST(Indices, Complete4) {
    const auto p = distance_profile(complete(4));
    EXPECT_EQ(wiener(p), 6);
    EXPECT_EQ(zagreb1(p), 36);
    EXPECT_EQ(degree_distance(p), 36);
    EXPECT_EQ(eccentricity_total(p), 4);
}

TEST(Indices, Cycle5) {
    const auto p = distance_profile(cycle(5));
    EXPECT_EQ(wiener(p), 15);
    EXPECT_EQ(zagreb1(p), 20);
    EXPECT_EQ(degree_distance(p), 60);
    EXPECT_EQ(eccentricity_total(p), 10);
}

TEST(IndexReport, Examples) {
    const IndexReport s5 = index_report(star(5), CrossCheck::Always);
    EXPECT_EQ(s5.xi_c, 12);
    EXPECT_EQ(s5.xi_d, 60);
    const IndexReport p4 = index_report(path(4), CrossCheck::Always);
    EXPECT_EQ(p4, (IndexReport{4, 3, 14, 52, 10, 10, 28, 10, 3, 2, 2}));
    const IndexReport k2 = index_report(complete(2), CrossCheck::Always);
    EXPECT_EQ(k2.xi_c, 2);
    EXPECT_EQ(k2.xi_d, 2);
    EXPECT_EQ(k2.wiener, 1);
    const IndexReport k1 = index_report(build_graph(1, {}));
    EXPECT_EQ(k1, (IndexReport{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

// Vertex, edge and pair forms agree with each other and with the
// Floyd-Warshall oracle on every connected graph up to order 8.
TEST(IndexReport, DualFormulasOnAllConnectedGraphs) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            const auto p = distance_profile(g);
            ASSERT_EQ(eccentric_connectivity(p), eccentric_connectivity_edge_form(p));
            ASSERT_EQ(eccentric_distance_sum(p), eccentric_distance_sum_pair_form(p));
            const auto o = oracle::indices(g);
            const IndexReport r = index_report(g, p, CrossCheck::Always);
            ASSERT_EQ(r.xi_c, o.xi_c);
            ASSERT_EQ(r.xi_d, o.xi_d);
            ASSERT_EQ(r.wiener, o.wiener);
            ASSERT_EQ(r.zagreb1, o.zagreb1);
            ASSERT_EQ(r.degree_distance, o.degree_distance);
            ASSERT_EQ(r.ecc_total, o.ecc_total);
        }
    }
}

TEST(IndexReport, CrossCheckDetectsCorruptedProfile) {
    auto p = distance_profile(path(5));
    p.deg[0] = 2;  // degrees no longer match the distance matrix
    EXPECT_THROW(index_report(path(5), p, CrossCheck::Always), Error);
    EXPECT_NO_THROW(index_report(path(5), p, CrossCheck::Never));
}

TEST(IndexReport, StarDifferenceClosedForm) {
    for (std::int64_t n = 3; n <= 50; ++n) {
        const IndexReport r = index_report(star(static_cast<std::size_t>(n)));
        EXPECT_EQ(r.xi_d - r.xi_c, 4 * n * n - 12 * n + 8) << "n=" << n;
    }
}

// 96 * (xi_d - xi_c) of P_n against the parity polynomials scaled by 96.
TEST(IndexReport, PathDifferencePolynomials) {
    for (std::int64_t n = 4; n <= 60; ++n) {
        const IndexReport r = index_report(path(static_cast<std::size_t>(n)));
        const std::int64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        const std::int64_t poly96 = n % 2 ? 25 * n4 - 16 * n3 - 178 * n2 + 304 * n - 135
                                          : 25 * n4 - 16 * n3 - 172 * n2 + 304 * n - 192;
        EXPECT_EQ(96 * (r.xi_d - r.xi_c), poly96) << "n=" << n;
    }
}

TEST(IndexReport, LargeGraphStaysExact) {
    // P_2000: xi_d grows like n^4 / 4 and still fits comfortably.
    const IndexReport r = index_report(path(2000), CrossCheck::Never);
    const std::int64_t n = 2000;
    EXPECT_EQ(96 * (r.xi_d - r.xi_c), 25 * n * n * n * n - 16 * n * n * n - 172 * n * n + 304 * n - 192);
}

TEST(Checked, Overflow) {
    EXPECT_THROW(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 30), Error);
    EXPECT_THROW(checked_add(INT64_MAX, 1), Error);
    EXPECT_THROW(checked_sub(INT64_MIN, 1), Error);
    EXPECT_EQ(checked_mul(-3, 7), -21);
}

TEST(Serialization, CsvAndJson) {
    const IndexReport p4 = index_report(path(4));
    EXPECT_EQ(csv_header(), "n,m,xi_c,xi_d,wiener,zagreb1,degree_distance,ecc_total,diam,rad,max_deg");
    EXPECT_EQ(to_csv_row(p4), "4,3,14,52,10,10,28,10,3,2,2");
    EXPECT_EQ(to_json(p4).dump(),
              R"({"n":4,"m":3,"xi_c":14,"xi_d":52,"wiener":10,"zagreb1":10,"degree_distance":28,)"
              R"("ecc_total":10,"diam":3,"rad":2,"max_deg":2})");
}
