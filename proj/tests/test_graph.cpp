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

#include "eccidx/enumerate.hpp"
#include "eccidx/families.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/invariants.hpp"
#include "oracles.hpp"

using namespace eccidx;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an eccidx::Error";
    return ErrorKind::InternalMismatch;
}

}  // namespace

TEST(BuildGraph, SmallestConnectedGraph) {
    Graph k2 = build_graph(2, {{0, 1}});
    EXPECT_EQ(k2.order(), 2u);
    EXPECT_EQ(k2.size(), 1u);
}

TEST(BuildGraph, PathAndDeduplication) {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}, {2, 1}});
    EXPECT_EQ(p4.size(), 3u);
    EXPECT_EQ(p4.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_TRUE(p4.has_edge(2, 1));
    EXPECT_FALSE(p4.has_edge(0, 3));
}

TEST(BuildGraph, Errors) {
    EXPECT_EQ(kind_of([] { build_graph(4, {{0, 1}, {2, 3}}); }), ErrorKind::Disconnected);
    EXPECT_EQ(kind_of([] { build_graph(3, {{0, 0}, {1, 2}}); }), ErrorKind::InvalidEdge);
    EXPECT_EQ(kind_of([] { build_graph(3, {{0, 3}, {1, 2}}); }), ErrorKind::InvalidEdge);
    EXPECT_EQ(kind_of([] { build_graph(2, {{-1, 1}}); }), ErrorKind::InvalidEdge);
    EXPECT_EQ(kind_of([] { build_graph(0, {}); }), ErrorKind::InvalidArgument);
}

TEST(BuildGraph, SingleVertex) {
    Graph k1 = build_graph(1, {});
    const auto p = distance_profile(k1);
    EXPECT_EQ(p.ecc, std::vector<int>{0});
    EXPECT_EQ(p.totdist, std::vector<std::int64_t>{0});
}

TEST(DistanceProfile, Path4) {
    const auto p = distance_profile(path(4));
    EXPECT_EQ(p.ecc, (std::vector<int>{3, 2, 2, 3}));
    EXPECT_EQ(p.totdist, (std::vector<std::int64_t>{6, 4, 4, 6}));
    EXPECT_EQ(p.deg, (std::vector<int>{1, 2, 2, 1}));
    EXPECT_EQ(p.diameter(), 3);
    EXPECT_EQ(p.radius(), 2);
}

TEST(DistanceProfile, Complete5) {
    const auto p = distance_profile(complete(5));
    EXPECT_EQ(p.ecc, std::vector<int>(5, 1));
    EXPECT_EQ(p.totdist, std::vector<std::int64_t>(5, 4));
}

TEST(DistanceProfile, Cycle5) {
    const auto p = distance_profile(cycle(5));
    EXPECT_EQ(p.ecc, std::vector<int>(5, 2));
    EXPECT_EQ(p.totdist, std::vector<std::int64_t>(5, 6));
}

TEST(Predicates, SelfCentered) {
    EXPECT_TRUE(is_self_centered(cycle(5)));
    EXPECT_FALSE(is_self_centered(path(4)));
    EXPECT_TRUE(is_self_centered(build_graph(1, {})));
}

TEST(Predicates, Regular) {
    EXPECT_TRUE(is_regular(cycle(5)));
    EXPECT_FALSE(is_regular(star(4)));
    EXPECT_TRUE(is_regular(complete(2)));
}

TEST(Predicates, Caterpillar) {
    EXPECT_TRUE(is_caterpillar(star(5)));
    EXPECT_TRUE(is_caterpillar(path(6)));
    const Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    EXPECT_FALSE(is_caterpillar(spider));
    EXPECT_FALSE(oracle::brute_caterpillar(spider));
    EXPECT_EQ(kind_of([] { is_caterpillar(cycle(4)); }), ErrorKind::NotATree);
}

TEST(Predicates, CaterpillarAgreesWithDefinitionOnAllTrees) {
    for (std::size_t n = 1; n <= 10; ++n)
        for (const Graph& t : all_trees(n)) EXPECT_EQ(is_caterpillar(t), oracle::brute_caterpillar(t));
}

// BFS agrees with Floyd-Warshall and the structural identities hold on every
// connected graph up to order 8.
TEST(DistanceProfile, PropertiesOnAllConnectedGraphs) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            const auto p = distance_profile(g);
            const auto fw = oracle::floyd_warshall(g);
            std::int64_t deg_sum = 0, tot_sum = 0;
            for (std::size_t u = 0; u < n; ++u) {
                deg_sum += p.deg[u];
                tot_sum += p.totdist[u];
                ASSERT_LE(p.ecc[u], static_cast<int>(n) - p.deg[u]);
                for (std::size_t v = 0; v < n; ++v) {
                    const Vertex a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
                    ASSERT_EQ(p.d(a, b), fw[u][v]);
                    ASSERT_EQ(p.d(a, b), p.d(b, a));
                    ASSERT_EQ(p.d(a, b) == 1, g.has_edge(a, b));
                    for (std::size_t w = 0; w < n; ++w)
                        ASSERT_LE(p.d(a, static_cast<Vertex>(w)), p.d(a, b) + p.d(b, static_cast<Vertex>(w)));
                }
            }
            ASSERT_EQ(deg_sum, 2 * static_cast<std::int64_t>(g.size()));
            ASSERT_EQ(tot_sum, 2 * wiener(p));
            ASSERT_LE(p.radius(), p.diameter());
            ASSERT_LE(p.diameter(), 2 * p.radius());
        }
    }
}
