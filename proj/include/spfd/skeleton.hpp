#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spfd/fiber_coloring.hpp"
#include "spfd/graph.hpp"

namespace spfd {

class DisjointSets {
public:
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Keeps the smaller id as representative so results do not depend on call order.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

struct SkeletonOptions {
    int size_cap = kDefaultSizeCap;     // for 1-neighborhood quotients
    int n2_size_cap = kDefaultSizeCap;  // for 2-neighborhood quotients
};

struct ColoredSkeleton {
    PartialProductColoring raw;        // raw colors, one palette entry per (anchor, local factor)
    DisjointSets merge_structure;      // over raw color ids
    std::vector<Edge> cartesian_edges; // sorted
    std::map<Edge, int> color_of;      // final ids 0..n_colors-1
    int n_colors = 0;
    std::map<Vertex, int> local_prime_counts;  // |PF(⟨N[v]⟩/S)| per decomposed neighborhood
    std::map<Vertex, int> n2_prime_counts;     // same for 2-neighborhoods
    std::set<Edge> known_non_cartesian;
    bool quotient_caveat = false;  // some decomposed neighborhood was not thin
    std::vector<std::string> diagnostics;

    int max_local_factors() const;
    std::map<Stage, int> stage_counts() const;
};

// Cartesian skeleton and product coloring of a thin connected graph. Throws
// Pipeline when a stage detects that g is not locally unrefined.
ColoredSkeleton build_skeleton(const Graph& g, const SkeletonOptions& opts = {});
// Same, filling `out` as it goes so partial results survive a thrown Pipeline error.
void build_skeleton_into(const Graph& g, const SkeletonOptions& opts, ColoredSkeleton& out);

// Factors ⟨N₂[x]⟩/S for every x still incident to an uncolored candidate edge and
// colors the Cartesian ones at x with fresh raw colors. Returns the new edges.
std::vector<Edge> n2_sweep(const Graph& g, ColoredSkeleton& s, int n2_size_cap = kDefaultSizeCap);

// Chordless 4-cycle (v, a, c, b) through incident edges e = (v,a), f = (v,b) of h.
std::optional<std::array<Vertex, 4>> find_square(const Graph& h, Edge e, Edge f);

// Unions raw colors of opposite edges of diagonal-free squares until nothing changes,
// then renumbers the classes. Returns the number of unions performed.
int merge_parallel_colors(const Graph& g, ColoredSkeleton& s);

// Renumber merged classes by first appearance along the sorted edge list.
void finalize_colors(const Graph& g, ColoredSkeleton& s);

// Spanning subgraph made of the identified Cartesian edges.
Graph skeleton_graph(int n, const std::vector<Edge>& edges);

}  // namespace spfd
