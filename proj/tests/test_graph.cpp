#include <gtest/gtest.h>

#include "helpers.hpp"
#include "spfd/graph.hpp"
#include "spfd/isomorphism.hpp"
#include "spfd/oracle.hpp"
#include "spfd/product.hpp"

using namespace spfd;

TEST(Graph, RejectsSelfLoopsDuplicatesAndBadIds) {
    EXPECT_THROW(Graph(3, {{0, 0}}), Error);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(Graph(3, {{0, 3}}), Error);
    EXPECT_THROW(Graph(2, {{-1, 1}}), Error);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
    Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
    EXPECT_EQ(g.neighbors(0), (VertexSet{1, 2, 3}));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 2));
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ClosedNeighborhood, PathAndCycle) {
    Graph p3 = path_graph(3);
    EXPECT_EQ(closed_neighborhood(p3, 1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(p3, 0), (VertexSet{0, 1}));
    Graph c5 = cycle_graph(5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(closed_neighborhood(c5, v).size(), 3u);
    EXPECT_THROW(closed_neighborhood(p3, 3), Error);
}

TEST(NNeighborhood, RadiusZeroAndPath) {
    Graph p5 = path_graph(5);
    EXPECT_EQ(n_neighborhood(p5, 3, 0), (VertexSet{3}));
    EXPECT_EQ(n_neighborhood(p5, 0, 2), (VertexSet{0, 1, 2}));
    EXPECT_EQ(n_neighborhood(p5, 2, 1), closed_neighborhood(p5, 2));
    EXPECT_THROW(n_neighborhood(p5, 7, 1), Error);
}

TEST(NNeighborhood, CenterOfP3xP3CoversAllNine) {
    Graph g = testutil::brute_strong(path_graph(3), path_graph(3));
    auto d = testutil::floyd(g);
    VertexSet expect;
    for (Vertex v = 0; v < 9; ++v)
        if (d[4][v] <= 1) expect.push_back(v);
    EXPECT_EQ(expect.size(), 9u);
    EXPECT_EQ(n_neighborhood(g, 4, 1), expect);
}

TEST(InducedSubgraph, WholeSetIsIdentity) {
    Graph c5 = cycle_graph(5);
    VertexSet all{0, 1, 2, 3, 4};
    auto s = induced_subgraph(c5, all);
    EXPECT_EQ(s.graph, c5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(s.to_new[v], v);
    EXPECT_THROW(induced_subgraph(c5, {}), Error);
}

TEST(InducedSubgraph, ConsecutiveCycleVerticesGiveP3) {
    auto s = induced_subgraph(cycle_graph(5), {1, 2, 3});
    EXPECT_TRUE(is_isomorphic(s.graph, path_graph(3)));
    EXPECT_EQ(s.to_old, (VertexSet{1, 2, 3}));
    EXPECT_EQ(s.to_new[0], -1);
}

TEST(InducedSubgraph, CornerNeighborhoodOfP3xP3IsK4) {
    Graph g = testutil::brute_strong(path_graph(3), path_graph(3));
    auto s = induced_subgraph(g, closed_neighborhood(g, 0));
    EXPECT_EQ(s.graph.vertex_count(), 4);
    EXPECT_EQ(s.graph.edge_count(), 6u);
}

TEST(Distance, BasicCases) {
    Graph p4 = path_graph(4);
    EXPECT_EQ(distance(p4, 2, 2), 0);
    EXPECT_EQ(distance(p4, 0, 3), 3);
    EXPECT_EQ(distance(p4, 3, 0), 3);
    Graph two_edges(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(distance(two_edges, 0, 3), Error);
}

TEST(Connectivity, DegreesAndConnectivity) {
    Graph k1(1);
    EXPECT_TRUE(is_connected(k1));
    EXPECT_EQ(max_degree(k1), 0);
    EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    Graph c5 = cycle_graph(5);
    EXPECT_TRUE(is_connected(c5));
    EXPECT_EQ(max_degree(c5), 2);
    EXPECT_EQ(degree(c5, 3), 2);
}

TEST(Components, OrderedBySmallestMember) {
    Graph g(5, {{3, 4}, {0, 2}});
    auto cs = connected_components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0], (VertexSet{0, 2}));
    EXPECT_EQ(cs[1], (VertexSet{1}));
    EXPECT_EQ(cs[2], (VertexSet{3, 4}));
}
