#pragma once

#include <optional>
#include <vector>

#include "spfd/graph.hpp"

namespace spfd {

struct Coordinatization {
    std::vector<int> factor_sizes;
    std::vector<std::vector<int>> coords;  // per vertex, one entry per factor

    int factor_count() const { return static_cast<int>(factor_sizes.size()); }
    // Row-major rank of a coordinate tuple (first factor most significant).
    long long rank(const std::vector<int>& tuple) const;
};

struct Fiber {
    int factor_index = 0;
    Vertex anchor = 0;
    VertexSet vertices;
};

struct Product {
    Graph graph;
    Coordinatization coords;
};

Product strong_product(const std::vector<Graph>& factors);
Product cartesian_product(const std::vector<Graph>& factors);

int projection(const Coordinatization& c, Vertex v, int i);
Fiber fiber_through(const Coordinatization& c, Vertex x, int i);

// Index of the single differing coordinate, or nullopt for a non-Cartesian edge.
// Throws InvalidInput when (u,v) is not an edge of g.
std::optional<int> is_cartesian_edge(const Graph& g, const Coordinatization& c, Vertex u, Vertex v);
// Same without the edge check.
std::optional<int> differing_coordinate(const Coordinatization& c, Vertex u, Vertex v);

// True when c is a bijection onto the coordinate grid.
bool is_bijective(const Coordinatization& c);

}  // namespace spfd
