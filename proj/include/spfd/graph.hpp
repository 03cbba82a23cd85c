#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spfd {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always sorted ascending
using Edge = std::pair<Vertex, Vertex>; // normalized so first < second

enum class ErrorKind {
    InvalidInput,
    Disconnected,
    NotThin,
    SizeCap,
    Pipeline,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws InvalidInput on self-loops, duplicate edges or out-of-range ids.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }
    const VertexSet& neighbors(Vertex v) const { return adj_[check(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid(Vertex v) const { return v >= 0 && v < vertex_count(); }

    // All edges (u < v), in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    Vertex check(Vertex v) const;

    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_old;   // new id -> old id
    std::vector<Vertex> to_new;   // old id -> new id, -1 when absent
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet n_neighborhood(const Graph& g, Vertex v, int n);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

// BFS distances from s; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex s);
// Throws Disconnected when v is unreachable from u.
int distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);  // v -> perm[v]

VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

}  // namespace spfd
