#include <gtest/gtest.h>

#include "helpers.hpp"
#include "spfd/factorize.hpp"
#include "spfd/oracle.hpp"
#include "spfd/product.hpp"
#include "spfd/recognizer.hpp"
#include "spfd/s_structure.hpp"
#include "spfd/skeleton.hpp"

using namespace spfd;

namespace {

std::set<std::set<Edge>> partition_of(const std::map<Edge, int>& colored) {
    std::map<int, std::set<Edge>> groups;
    for (const auto& [e, c] : colored) groups[c].insert(e);
    std::set<std::set<Edge>> out;
    for (auto& [_, s] : groups) out.insert(s);
    return out;
}

std::map<Edge, int> truth_coloring(const Graph& g, const Coordinatization& c) {
    std::map<Edge, int> out;
    for (auto [u, v] : g.edges())
        if (auto i = differing_coordinate(c, u, v)) out[{u, v}] = *i;
    return out;
}

// Skeleton with one raw color per connected fiber of the given edge labelling.
ColoredSkeleton per_fiber_skeleton(const Graph& g, const std::map<Edge, int>& truth) {
    ColoredSkeleton s;
    DisjointSets fibers;
    std::map<Edge, int> id;
    for (const auto& [e, c] : truth) id[e] = fibers.add();
    for (const auto& [e, c] : truth)
        for (const auto& [f, d] : truth)
            if (c == d && (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second))
                fibers.unite(id[e], id[f]);
    std::map<int, int> raw_of_root;
    for (const auto& [e, c] : truth) {
        int r = fibers.find(id[e]);
        auto it = raw_of_root.find(r);
        if (it == raw_of_root.end()) {
            it = raw_of_root.emplace(r, static_cast<int>(s.raw.palette.size())).first;
            s.raw.palette.push_back({e.first, c, Stage::S1Local});
            s.merge_structure.add();
        }
        s.raw.colored_edges[e] = it->second;
        s.raw.stage_of[e] = Stage::S1Local;
    }
    (void)g;
    return s;
}

}  // namespace

TEST(BuildSkeleton, P3xP3IsTheGrid) {
    Product p = strong_product({path_graph(3), path_graph(3)});
    auto s = build_skeleton(p.graph);
    EXPECT_EQ(s.n_colors, 2);
    Product grid = cartesian_product({path_graph(3), path_graph(3)});
    EXPECT_EQ(s.cartesian_edges, grid.graph.edges());
    EXPECT_EQ(partition_of(s.color_of), partition_of(truth_coloring(p.graph, p.coords)));
    for (auto& part : partition_of(s.color_of)) EXPECT_EQ(part.size(), 6u);
    EXPECT_TRUE(s.diagnostics.empty());
}

TEST(BuildSkeleton, PrimeGraphGetsOneColorOverItsEdges) {
    Rng rng(71);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 30; ++t) {
        Graph g = gen_thin_graph(5 + rng.below(6), 0.4, rng);
        if (oracle_pfd(g).prime_count != 1) continue;
        auto r = recognize(g, {40, 40});
        if (!r.in_upsilon) continue;
        EXPECT_EQ(r.coloring.n_colors, 1);
        EXPECT_EQ(r.coloring.cartesian_edges, g.edges());
        ++checked;
    }
    EXPECT_GE(checked, 10);
}

TEST(BuildSkeleton, RejectsUnsuitableInput) {
    EXPECT_THROW(build_skeleton(complete_graph(3)), Error);
    EXPECT_THROW(build_skeleton(Graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST(BuildSkeleton, NonS1FibersAreRecoveredInTwoNeighborhoods) {
    auto st = gen_staging_instance();
    const Graph& g = st.instance.graph;
    ASSERT_FALSE(st.non_s1_cartesian.empty());
    for (auto [x, y] : st.non_s1_cartesian) {
        EXPECT_FALSE(s1_condition(g, x, y).has_value());
        EXPECT_TRUE(is_cartesian_edge(g, st.instance.ground_truth_coords, x, y).has_value());
    }
    auto s = build_skeleton(g, {40, 40});
    for (auto e : st.non_s1_cartesian) {
        ASSERT_TRUE(s.raw.stage_of.count(e));
        EXPECT_EQ(s.raw.stage_of.at(e), Stage::N2Sweep);
    }
    EXPECT_EQ(s.cartesian_edges.size(), truth_coloring(g, st.instance.ground_truth_coords).size());
    EXPECT_EQ(partition_of(s.color_of), partition_of(truth_coloring(g, st.instance.ground_truth_coords)));
}

TEST(BuildSkeleton, NonS1EdgeFailsEvenInUnionOfEndpointNeighborhoods) {
    auto st = gen_staging_instance();
    const Graph& g = st.instance.graph;
    int hidden = 0;
    for (auto [x, y] : st.non_s1_cartesian) {
        VertexSet w = closed_neighborhood(g, x);
        for (Vertex u : closed_neighborhood(g, y)) w.push_back(u);
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        auto sub = induced_subgraph(g, w);
        const Graph& h = sub.graph;
        Vertex hx = sub.to_new[x], hy = sub.to_new[y];
        bool s1 = false;
        for (Vertex z = 0; z < h.vertex_count(); ++z) {
            auto nz = testutil::closed_nb(h, z);
            if (!nz.count(hx) || !nz.count(hy)) continue;
            s1 |= testutil::brute_class_size(h, nz, hx) == 1 || testutil::brute_class_size(h, nz, hy) == 1;
        }
        if (!s1) ++hidden;
        // Inside N2[x] the edge is identified as Cartesian.
        auto nf = factor_induced(g, x, n_neighborhood(g, x, 2), 40);
        EXPECT_GE(nf.lifted_factor(x, y), 0);
    }
    EXPECT_GT(hidden, 0);
}

TEST(N2Sweep, SkipsColoredEdges) {
    auto st = gen_staging_instance();
    auto s = build_skeleton(st.instance.graph, {40, 40});
    auto before = s.raw.colored_edges;
    EXPECT_TRUE(n2_sweep(st.instance.graph, s, 40).empty());
    EXPECT_EQ(s.raw.colored_edges, before);

    Product p = strong_product({path_graph(3), path_graph(3)});
    auto full = build_skeleton(p.graph);
    EXPECT_TRUE(full.n2_prime_counts.empty());
    EXPECT_TRUE(n2_sweep(p.graph, full).empty());
}

TEST(N2Sweep, InfeasibleAtHighDegree) {
    auto st = gen_staging_instance();
    const Graph& g = st.instance.graph;
    ColoredSkeleton s;
    try {
        build_skeleton_into(g, {40, 4}, s);
        FAIL() << "expected the sweep to hit the size cap";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Pipeline);
        EXPECT_NE(std::string(e.what()).find("N2 sweep infeasible"), std::string::npos);
    }
    EXPECT_FALSE(s.local_prime_counts.empty());
}

TEST(N2Sweep, TwoNeighborhoodCountsMatchFactorCount) {
    int swept = 0;
    for (std::uint64_t seed = 1; seed <= 400 && swept < 5; ++seed) {
        auto inst = gen_product_instance({3 + static_cast<int>(seed % 4), 3 + static_cast<int>(seed / 4 % 4)}, seed);
        auto r = recognize(inst.graph, {40, 40});
        if (!r.in_upsilon || r.coloring.n2_prime_counts.empty()) continue;
        for (auto [x, n] : r.coloring.n2_prime_counts) EXPECT_EQ(n, 2) << "seed " << seed << " x " << x;
        ++swept;
    }
    EXPECT_GE(swept, 1);
}

TEST(FindSquare, C4K4AndGrid) {
    Graph c4 = cycle_graph(4);
    auto sq = find_square(c4, {0, 1}, {0, 3});
    ASSERT_TRUE(sq.has_value());
    EXPECT_EQ(*sq, (std::array<Vertex, 4>{0, 1, 2, 3}));

    Graph k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v)
        for (Vertex a = 0; a < 4; ++a)
            for (Vertex b = a + 1; b < 4; ++b)
                if (a != v && b != v) EXPECT_FALSE(find_square(k4, make_edge(v, a), make_edge(v, b)).has_value());

    // Grid vertex (1,1) = 4; edges to (0,1)=1 and (1,0)=3 close at (0,0)=0 only.
    Graph grid = cartesian_product({path_graph(3), path_graph(3)}).graph;
    auto unit = find_square(grid, {1, 4}, {3, 4});
    ASSERT_TRUE(unit.has_value());
    EXPECT_EQ(*unit, (std::array<Vertex, 4>{4, 1, 0, 3}));
    // Collinear edges span no square.
    EXPECT_FALSE(find_square(grid, {1, 4}, {4, 7}).has_value());
    EXPECT_THROW(find_square(grid, {0, 1}, {4, 5}), Error);
}

TEST(MergeParallelColors, SixFiberColorsOfP3xP3MergeToTwo) {
    Product p = strong_product({path_graph(3), path_graph(3)});
    auto truth = truth_coloring(p.graph, p.coords);
    ColoredSkeleton s = per_fiber_skeleton(p.graph, truth);
    ASSERT_EQ(s.raw.palette.size(), 6u);
    EXPECT_EQ(merge_parallel_colors(p.graph, s), 4);
    EXPECT_EQ(s.n_colors, 2);
    EXPECT_EQ(partition_of(s.color_of), partition_of(truth));
    // Already merged: nothing left to do.
    EXPECT_EQ(merge_parallel_colors(p.graph, s), 0);
    EXPECT_EQ(s.n_colors, 2);
}

TEST(MergeParallelColors, PerFiberColorsOnRandomProductsMergeToFactors) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto inst = gen_product_instance({3 + static_cast<int>(seed % 3), 3 + static_cast<int>(seed / 3 % 3)}, seed);
        auto truth = truth_coloring(inst.graph, inst.ground_truth_coords);
        ColoredSkeleton s = per_fiber_skeleton(inst.graph, truth);
        merge_parallel_colors(inst.graph, s);
        EXPECT_EQ(s.n_colors, 2) << "seed " << seed;
        EXPECT_EQ(partition_of(s.color_of), partition_of(truth)) << "seed " << seed;
    }
}

TEST(BuildSkeleton, ExactOnLocallyUnrefinedProducts) {
    int accepted = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto inst = gen_product_instance({3 + static_cast<int>(seed % 4), 3 + static_cast<int>(seed / 4 % 4)}, seed);
        auto r = recognize(inst.graph, {40, 40});
        if (!r.in_upsilon) continue;
        ++accepted;
        auto truth = truth_coloring(inst.graph, inst.ground_truth_coords);
        std::vector<Edge> truth_edges;
        for (auto& [e, c] : truth) truth_edges.push_back(e);
        EXPECT_EQ(r.coloring.cartesian_edges, truth_edges) << "seed " << seed;
        EXPECT_EQ(partition_of(r.coloring.color_of), partition_of(truth)) << "seed " << seed;
    }
    EXPECT_GT(accepted, 60);
}

TEST(BuildSkeleton, LaterStagesNeverRecolorS1Edges) {
    auto st = gen_staging_instance();
    const Graph& g = st.instance.graph;
    auto s = build_skeleton(g, {40, 40});
    auto counts = s.stage_counts();
    EXPECT_GT(counts[Stage::S1Local], 0);
    EXPECT_GT(counts[Stage::N2Sweep], 0);
    for (const auto& [e, stage] : s.raw.stage_of) {
        if (stage != Stage::N2Sweep) continue;
        EXPECT_EQ(s.raw.palette.at(s.raw.colored_edges.at(e)).stage, Stage::N2Sweep);
    }
    for (const auto& [e, stage] : s.raw.stage_of)
        if (stage != Stage::N2Sweep) EXPECT_NE(s.raw.palette.at(s.raw.colored_edges.at(e)).stage, Stage::N2Sweep);
}

TEST(BuildSkeleton, Deterministic) {
    auto inst = gen_product_instance({4, 5}, 3);
    auto a = build_skeleton(inst.graph, {40, 40});
    auto b = build_skeleton(inst.graph, {40, 40});
    EXPECT_EQ(a.color_of, b.color_of);
    EXPECT_EQ(a.raw.stage_of, b.raw.stage_of);
}
