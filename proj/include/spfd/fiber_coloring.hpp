#pragma once

#include <map>
#include <memory>
#include <vector>

#include "spfd/factorize.hpp"
#include "spfd/graph.hpp"

namespace spfd {

enum class Stage { S1Local, Completion, N2Sweep };
const char* stage_name(Stage s);

struct ColorOrigin {
    Vertex anchor = 0;     // vertex whose neighborhood introduced the color
    int local_factor = 0;  // factor index inside that neighborhood
    Stage stage = Stage::S1Local;
};

struct PartialProductColoring {
    std::map<Edge, int> colored_edges;  // edge -> index into palette
    std::map<Edge, Stage> stage_of;
    std::vector<ColorOrigin> palette;
    // Lifted edges seen in visited neighborhoods but lying off the anchor's
    // fibers; extend_to_s1_fibers turns them into colored edges.
    std::map<Edge, int> s1_candidates;

    int color(Vertex u, Vertex v) const;  // -1 when uncolored
};

struct CoveringSequence {
    Vertex anchor = 0;
    int color = 0;
    std::vector<Vertex> order;
    std::map<Vertex, Vertex> parent;  // absent for the anchor
};

// Memoised neighborhood factorizations of one graph, plus the prime counts of
// every neighborhood decomposed so far.
class NeighborhoodCache {
public:
    NeighborhoodCache(const Graph& g, int size_cap = kDefaultSizeCap) : g_(g), size_cap_(size_cap) {}
    const NeighborhoodFactorization& get(Vertex v);
    const std::map<Vertex, int>& prime_counts() const { return counts_; }
    int size_cap() const { return size_cap_; }

private:
    const Graph& g_;
    int size_cap_;
    std::map<Vertex, std::unique_ptr<NeighborhoodFactorization>> cache_;
    std::map<Vertex, int> counts_;
};

// BFS over backbone vertices joined by edges of `color`, factoring each visited
// neighborhood and carrying the color across the edge to its parent. Colors the
// matching lifted edges of every visited neighborhood into `coloring`.
// Throws Pipeline on continuation failure, color conflicts or local factor counts
// that differ from `expected_count`.
CoveringSequence backbone_bfs(const Graph& g, const VertexSet& backbone, Vertex x, int color,
                              int expected_count, NeighborhoodCache& cache,
                              PartialProductColoring& coloring);

// Colors every fiber through backbone vertex x, one palette entry per local factor of N[x].
// Other S1 edges met on the way are kept in s1_candidates.
PartialProductColoring color_fibers_from(const Graph& g, const VertexSet& backbone, Vertex x,
                                         NeighborhoodCache& cache,
                                         std::vector<CoveringSequence>* sequences = nullptr);
// Convenience form: validates thinness and x ∈ B(G).
PartialProductColoring color_fibers_from(const Graph& g, Vertex x, int size_cap = kDefaultSizeCap);

// Colors uncolored edges (v,w) having a common neighbor z with (z,v), (z,w) of one color.
// Returns the number of edges added; only edges of `only_color` count when it is >= 0.
int completion_sweep(const Graph& g, PartialProductColoring& coloring, int only_color = -1);

// Colors the pending s1_candidates, then repeats the completion sweep over all
// colors until nothing changes.
PartialProductColoring extend_to_s1_fibers(const Graph& g, PartialProductColoring coloring);

}  // namespace spfd
