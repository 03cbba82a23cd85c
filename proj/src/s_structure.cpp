#include "spfd/s_structure.hpp"

#include <algorithm>
#include <map>

namespace spfd {

SPartition relative_s_partition(const Graph& g, const VertexSet& h) {
    if (h.empty()) throw Error(ErrorKind::InvalidInput, "empty host set");
    SPartition p;
    p.host = h;
    std::sort(p.host.begin(), p.host.end());
    p.class_of.assign(g.vertex_count(), -1);
    std::vector<char> in_h(g.vertex_count(), 0);
    for (Vertex v : p.host) {
        if (!g.valid(v)) throw Error(ErrorKind::InvalidInput, "invalid vertex id " + std::to_string(v));
        in_h[v] = 1;
    }
    std::map<VertexSet, int> index;
    for (Vertex x : p.host) {
        VertexSet key;
        for (Vertex u : closed_neighborhood(g, x))
            if (in_h[u]) key.push_back(u);
        auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(p.classes.size()));
        if (fresh) p.classes.emplace_back();
        p.classes[it->second].push_back(x);
        p.class_of[x] = it->second;
    }
    return p;
}

SPartition local_s_partition(const Graph& g, Vertex v) {
    return relative_s_partition(g, closed_neighborhood(g, v));
}

int relative_class_size(const Graph& g, Vertex z, Vertex x) {
    const VertexSet nz = closed_neighborhood(g, z);
    const VertexSet fx = set_intersection(closed_neighborhood(g, x), nz);
    int count = 0;
    for (Vertex u : nz)
        if (set_intersection(closed_neighborhood(g, u), nz) == fx) ++count;
    return count;
}

bool is_thin(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    // N[u] = N[v] forces u ~ v, so only edges need checking.
    for (auto [u, v] : g.edges())
        if (g.degree(u) == g.degree(v) && closed_neighborhood(g, u) == closed_neighborhood(g, v))
            return false;
    return true;
}

QuotientResult quotient(const Graph& g) {
    QuotientResult r;
    if (g.vertex_count() == 0) return r;
    VertexSet all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    SPartition p = relative_s_partition(g, all);
    r.class_map = p.class_of;
    r.class_members = p.classes;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = p.class_of[u], b = p.class_of[v];
        if (a != b) edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    r.quotient = Graph(static_cast<int>(p.classes.size()), edges);
    return r;
}

Backbone backbone(const Graph& g) {
    if (!is_thin(g)) throw Error(ErrorKind::NotThin, "backbone requires a thin graph; quotient it first");
    Backbone b;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const VertexSet nv = closed_neighborhood(g, v);
        bool maximal = true;
        for (Vertex y : g.neighbors(v)) {
            if (g.degree(y) < g.degree(v)) continue;
            if (is_subset(nv, closed_neighborhood(g, y))) {
                maximal = false;
                break;
            }
        }
        if (maximal) b.vertices.push_back(v);
    }
    return b;
}

VertexSet backbone_by_relative_class(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (relative_class_size(g, v, v) == 1) out.push_back(v);
    return out;
}

std::optional<Vertex> s1_witness(const Graph& g, const VertexSet& b, Vertex x, Vertex y) {
    const VertexSet common = set_intersection(closed_neighborhood(g, x), closed_neighborhood(g, y));
    auto ok = [&](Vertex z) {
        return relative_class_size(g, z, x) == 1 || relative_class_size(g, z, y) == 1;
    };
    for (Vertex z : common)
        if (contains(b, z) && ok(z)) return z;
    for (Vertex z : common)
        if (!contains(b, z) && ok(z)) return z;
    return std::nullopt;
}

std::optional<Vertex> s1_condition(const Graph& g, Vertex x, Vertex y) {
    if (!g.has_edge(x, y))
        throw Error(ErrorKind::InvalidInput,
                    "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
    return s1_witness(g, backbone(g).vertices, x, y);
}

}  // namespace spfd
