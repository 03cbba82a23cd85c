#include "spfd/graph.hpp"

#include <algorithm>
#include <queue>

namespace spfd {

Graph::Graph(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!valid(u) || !valid(v))
            throw Error(ErrorKind::InvalidInput,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw Error(ErrorKind::InvalidInput, "parallel edge at vertex " + std::to_string(v));
        m_ += a.size();
    }
    m_ /= 2;
}

Vertex Graph::check(Vertex v) const {
    if (!valid(v)) throw Error(ErrorKind::InvalidInput, "invalid vertex id " + std::to_string(v));
    return v;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = neighbors(u);
    check(v);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    const auto& nb = g.neighbors(v);
    VertexSet out;
    out.reserve(nb.size() + 1);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    out.insert(out.end(), nb.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, nb.end());
    return out;
}

VertexSet n_neighborhood(const Graph& g, Vertex v, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative radius");
    g.neighbors(v);
    std::vector<int> dist(g.vertex_count(), -1);
    VertexSet out{v};
    std::queue<Vertex> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] == n) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            out.push_back(w);
            q.push(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorKind::InvalidInput, "induced subgraph of empty vertex set");
    InducedSubgraph r;
    r.to_new.assign(g.vertex_count(), -1);
    r.to_old = w;
    std::sort(r.to_old.begin(), r.to_old.end());
    for (std::size_t i = 0; i < r.to_old.size(); ++i) {
        Vertex v = r.to_old[i];
        if (!g.valid(v)) throw Error(ErrorKind::InvalidInput, "invalid vertex id " + std::to_string(v));
        if (r.to_new[v] >= 0) throw Error(ErrorKind::InvalidInput, "duplicate vertex in set");
        r.to_new[v] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex v : r.to_old)
        for (Vertex u : g.neighbors(v))
            if (v < u && r.to_new[u] >= 0) edges.emplace_back(r.to_new[v], r.to_new[u]);
    r.graph = Graph(static_cast<int>(r.to_old.size()), edges);
    return r;
}

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
    g.neighbors(s);
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
    g.neighbors(v);
    int d = bfs_distances(g, u)[v];
    if (d < 0) throw Error(ErrorKind::Disconnected, "vertices in different components");
    return d;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        VertexSet members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw Error(ErrorKind::InvalidInput, "permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
    return Graph(g.vertex_count(), edges);
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace spfd
