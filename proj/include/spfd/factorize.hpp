#pragma once

#include <vector>

#include "spfd/graph.hpp"
#include "spfd/product.hpp"
#include "spfd/s_structure.hpp"

namespace spfd {

inline constexpr int kDefaultSizeCap = 24;

struct LocalFactorization {
    std::vector<Graph> factors;  // prime, each with at least two vertices
    Coordinatization coords;     // of the input graph, one column per factor
    int prime_count = 0;
};

// Complete prime factorization of a small connected graph under the strong product.
// Factors are ordered by (vertex count, canonical form).
LocalFactorization factor_exact(const Graph& g, int size_cap = kDefaultSizeCap);

// Rebuild the product of the factors through the coordinates and compare edge by edge.
bool reproduces(const Graph& g, const std::vector<Graph>& factors, const Coordinatization& c);

struct LiftedEdge {
    Vertex u = 0, v = 0;  // u < v, ids of the host graph
    int factor = 0;       // local factor index
};

// Factorization of an induced piece ⟨W⟩ through its thin quotient, with the
// Cartesian edges that can be lifted back to the host graph.
struct NeighborhoodFactorization {
    Vertex center = 0;
    VertexSet vertices;
    SPartition classes;             // S-classes of ⟨W⟩, i.e. relative classes S_W
    Graph quotient;                 // ⟨W⟩/S, vertex i = classes.classes[i]
    LocalFactorization local;       // of the quotient
    std::vector<LiftedEdge> lifted; // sorted by (u,v)
    std::vector<Edge> non_cartesian;// edges between classes joined by a non-Cartesian quotient edge
    // ⟨W⟩ was not thin, so prime_count describes the quotient only.
    bool quotient_caveat = false;

    int prime_count() const { return local.prime_count; }
    // Local factor of a lifted edge, or -1.
    int lifted_factor(Vertex u, Vertex v) const;
};

// ⟨N[v]⟩ of a thin graph. Throws NotThin for non-thin g.
NeighborhoodFactorization factor_neighborhood(const Graph& g, Vertex v, int size_cap = kDefaultSizeCap);
// Same on an arbitrary vertex set, without the thinness check on g.
NeighborhoodFactorization factor_induced(const Graph& g, Vertex center, const VertexSet& w,
                                         int size_cap = kDefaultSizeCap);

}  // namespace spfd
