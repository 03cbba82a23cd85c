#include "spfd/fiber_coloring.hpp"

#include <deque>

#include "spfd/s_structure.hpp"

namespace spfd {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::S1Local: return "s1_local";
        case Stage::Completion: return "completion";
        case Stage::N2Sweep: return "n2_sweep";
    }
    return "?";
}

int PartialProductColoring::color(Vertex u, Vertex v) const {
    auto it = colored_edges.find(make_edge(u, v));
    return it == colored_edges.end() ? -1 : it->second;
}

const NeighborhoodFactorization& NeighborhoodCache::get(Vertex v) {
    auto& slot = cache_[v];
    if (!slot) {
        slot = std::make_unique<NeighborhoodFactorization>(
            factor_induced(g_, v, closed_neighborhood(g_, v), size_cap_));
        counts_[v] = slot->prime_count();
    }
    return *slot;
}

namespace {

std::string edge_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void paint(PartialProductColoring& c, Edge e, int color, Stage stage) {
    auto [it, fresh] = c.colored_edges.emplace(e, color);
    if (fresh) {
        c.stage_of[e] = stage;
    } else if (it->second != color) {
        throw Error(ErrorKind::Pipeline, "edge " + edge_str(e.first, e.second) + " receives colors " +
                                             std::to_string(it->second) + " and " + std::to_string(color));
    }
}

}  // namespace

CoveringSequence backbone_bfs(const Graph& g, const VertexSet& backbone, Vertex x, int color,
                              int expected_count, NeighborhoodCache& cache,
                              PartialProductColoring& coloring) {
    if (!contains(backbone, x))
        throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(x) + " is not in the backbone");
    CoveringSequence seq;
    seq.anchor = x;
    seq.color = color;
    std::vector<char> marked(g.vertex_count(), 0);
    std::deque<Vertex> queue{x};
    marked[x] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        seq.order.push_back(v);
        if (v != x) {
            const auto& nf = cache.get(v);
            if (nf.prime_count() != expected_count)
                throw Error(ErrorKind::Pipeline,
                            "N[" + std::to_string(v) + "] has " + std::to_string(nf.prime_count()) +
                                " local factors, N[" + std::to_string(x) + "] has " +
                                std::to_string(expected_count));
            Vertex par = seq.parent.at(v);
            int j = nf.lifted_factor(par, v);
            if (j < 0)
                throw Error(ErrorKind::Pipeline, "no color continuation across edge " + edge_str(par, v) +
                                                     ": not identified as Cartesian in N[" +
                                                     std::to_string(v) + "]");
            for (const auto& l : nf.lifted)
                if (l.factor == j) paint(coloring, {l.u, l.v}, color, Stage::S1Local);
        }
        for (Vertex w : g.neighbors(v)) {
            if (marked[w] || !contains(backbone, w) || coloring.color(v, w) != color) continue;
            marked[w] = 1;
            seq.parent[w] = v;
            queue.push_back(w);
        }
    }
    return seq;
}

PartialProductColoring color_fibers_from(const Graph& g, const VertexSet& backbone, Vertex x,
                                         NeighborhoodCache& cache, std::vector<CoveringSequence>* sequences) {
    if (!contains(backbone, x))
        throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(x) + " is not in the backbone");
    // Every visited neighborhood paints all of its lifted edges; the fibers
    // through x are then cut out as the components of x per color.
    PartialProductColoring all;
    const auto& nf = cache.get(x);
    const int n = nf.prime_count();
    for (int i = 0; i < n; ++i) all.palette.push_back({x, i, Stage::S1Local});
    for (const auto& l : nf.lifted) paint(all, {l.u, l.v}, l.factor, Stage::S1Local);
    for (int i = 0; i < n; ++i) {
        CoveringSequence seq = backbone_bfs(g, backbone, x, i, n, cache, all);
        if (sequences) sequences->push_back(std::move(seq));
    }

    PartialProductColoring c;
    c.palette = all.palette;
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<Vertex> stack{x};
        seen[x] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (all.color(v, w) != i) continue;
                Edge e = make_edge(v, w);
                c.colored_edges[e] = i;
                c.stage_of[e] = Stage::S1Local;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        completion_sweep(g, c, i);
    }
    for (const auto& [e, col] : all.colored_edges)
        if (!c.colored_edges.count(e)) c.s1_candidates.emplace(e, col);
    return c;
}

PartialProductColoring color_fibers_from(const Graph& g, Vertex x, int size_cap) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    Backbone b = backbone(g);
    NeighborhoodCache cache(g, size_cap);
    return color_fibers_from(g, b.vertices, x, cache);
}

int completion_sweep(const Graph& g, PartialProductColoring& coloring, int only_color) {
    std::map<Edge, int> found;
    std::vector<std::pair<Vertex, int>> around;
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
        around.clear();
        for (Vertex u : g.neighbors(z)) {
            int c = coloring.color(z, u);
            if (c >= 0 && (only_color < 0 || c == only_color)) around.emplace_back(u, c);
        }
        for (std::size_t a = 0; a < around.size(); ++a)
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                auto [v, cv] = around[a];
                auto [w, cw] = around[b];
                if (cv != cw || !g.has_edge(v, w) || coloring.color(v, w) >= 0) continue;
                auto [it, fresh] = found.emplace(make_edge(v, w), cv);
                if (!fresh && it->second != cv)
                    throw Error(ErrorKind::Pipeline, "completion assigns two colors to edge " + edge_str(v, w));
            }
    }
    for (auto [e, c] : found) paint(coloring, e, c, Stage::Completion);
    return static_cast<int>(found.size());
}

PartialProductColoring extend_to_s1_fibers(const Graph& g, PartialProductColoring coloring) {
    for (const auto& [e, col] : coloring.s1_candidates)
        if (!coloring.colored_edges.count(e)) paint(coloring, e, col, Stage::S1Local);
    coloring.s1_candidates.clear();
    while (completion_sweep(g, coloring) > 0) {
    }
    return coloring;
}

}  // namespace spfd
