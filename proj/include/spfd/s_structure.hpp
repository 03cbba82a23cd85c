#pragma once

#include <optional>
#include <vector>

#include "spfd/graph.hpp"

namespace spfd {

// Partition of a host subset H by the fingerprint N[x] ∩ H.
struct SPartition {
    VertexSet host;
    std::vector<VertexSet> classes;  // ordered by smallest member
    std::vector<int> class_of;       // indexed by vertex of G; -1 outside host

    const VertexSet& class_containing(Vertex v) const { return classes.at(class_of.at(v)); }
};

struct QuotientResult {
    Graph quotient;
    std::vector<int> class_map;           // vertex -> quotient vertex
    std::vector<VertexSet> class_members; // quotient vertex -> members
};

struct Backbone {
    VertexSet vertices;
};

SPartition relative_s_partition(const Graph& g, const VertexSet& h);
// Shorthand for the partition relative to N[v].
SPartition local_s_partition(const Graph& g, Vertex v);
// |S_{N[z]}(x)| for x in N[z].
int relative_class_size(const Graph& g, Vertex z, Vertex x);

bool is_thin(const Graph& g);
QuotientResult quotient(const Graph& g);

// Requires a thin graph; throws NotThin otherwise.
Backbone backbone(const Graph& g);
// Reference definition: v with |S_v(v)| == 1. Kept separate so tests can compare.
VertexSet backbone_by_relative_class(const Graph& g);

// Witness z for the S1-condition on edge (x,y), searched over backbone vertices
// first and then the rest, both ascending.
std::optional<Vertex> s1_condition(const Graph& g, Vertex x, Vertex y);
// Same, trusting the caller that g is thin and b is its backbone.
std::optional<Vertex> s1_witness(const Graph& g, const VertexSet& b, Vertex x, Vertex y);

}  // namespace spfd
