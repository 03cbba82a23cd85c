#include "spfd/skeleton.hpp"

#include <algorithm>

#include "spfd/s_structure.hpp"

namespace spfd {

int ColoredSkeleton::max_local_factors() const {
    int m = 0;
    for (auto [v, c] : local_prime_counts) m = std::max(m, c);
    for (auto [v, c] : n2_prime_counts) m = std::max(m, c);
    return m;
}

std::map<Stage, int> ColoredSkeleton::stage_counts() const {
    std::map<Stage, int> out{{Stage::S1Local, 0}, {Stage::Completion, 0}, {Stage::N2Sweep, 0}};
    for (const auto& [e, st] : raw.stage_of) ++out[st];
    return out;
}

Graph skeleton_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

namespace {

// Fibers colored from two anchors tie their raw colors together. Candidate edges
// off the anchor fibers are collected separately and only tie colors among
// themselves, so parallel copies stay apart until square merging.
void absorb_run(ColoredSkeleton& s, const PartialProductColoring& run, std::map<Edge, int>& candidates) {
    const int offset = static_cast<int>(s.raw.palette.size());
    for (const auto& origin : run.palette) {
        s.raw.palette.push_back(origin);
        s.merge_structure.add();
    }
    for (const auto& [e, c] : run.colored_edges) {
        auto [it, fresh] = s.raw.colored_edges.emplace(e, offset + c);
        if (fresh)
            s.raw.stage_of[e] = run.stage_of.at(e);
        else
            s.merge_structure.unite(it->second, offset + c);
    }
    for (const auto& [e, c] : run.s1_candidates) {
        auto [it, fresh] = candidates.emplace(e, offset + c);
        if (!fresh) s.merge_structure.unite(it->second, offset + c);
    }
}

void add_candidates(ColoredSkeleton& s, const std::map<Edge, int>& candidates) {
    for (const auto& [e, c] : candidates)
        if (s.raw.colored_edges.emplace(e, c).second) s.raw.stage_of[e] = Stage::S1Local;
}

// Completion on merged classes; new edges take the representative raw color.
void complete_merged(const Graph& g, ColoredSkeleton& s) {
    PartialProductColoring view;
    view.palette = s.raw.palette;
    for (const auto& [e, c] : s.raw.colored_edges) view.colored_edges[e] = s.merge_structure.find(c);
    view = extend_to_s1_fibers(g, std::move(view));
    for (const auto& [e, c] : view.colored_edges)
        if (s.raw.colored_edges.emplace(e, c).second) s.raw.stage_of[e] = Stage::Completion;
}

void refresh_edges(ColoredSkeleton& s) {
    s.cartesian_edges.clear();
    for (const auto& [e, c] : s.raw.colored_edges) s.cartesian_edges.push_back(e);
}

}  // namespace

std::vector<Edge> n2_sweep(const Graph& g, ColoredSkeleton& s, int n2_size_cap) {
    std::vector<Edge> added;
    auto candidate = [&](Vertex x, Vertex y) {
        Edge e = make_edge(x, y);
        return !s.raw.colored_edges.count(e) && !s.known_non_cartesian.count(e);
    };
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const auto& nb = g.neighbors(x);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex y) { return candidate(x, y); })) continue;
        VertexSet ball = n_neighborhood(g, x, 2);
        NeighborhoodFactorization nf;
        try {
            nf = factor_induced(g, x, ball, n2_size_cap);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::SizeCap) throw;
            throw Error(ErrorKind::Pipeline, "N2 sweep infeasible at this degree: N2[" + std::to_string(x) +
                                                 "] has " + std::to_string(ball.size()) +
                                                 " vertices, size cap " + std::to_string(n2_size_cap));
        }
        s.n2_prime_counts[x] = nf.prime_count();
        s.quotient_caveat |= nf.quotient_caveat;
        if (nf.classes.class_containing(x).size() != 1) {
            s.diagnostics.push_back("vertex " + std::to_string(x) + " is not alone in its class inside N2");
            continue;
        }
        std::map<int, int> fresh;  // local factor -> raw color
        for (Vertex y : nb) {
            if (!candidate(x, y)) continue;
            Edge e = make_edge(x, y);
            int j = nf.lifted_factor(x, y);
            if (j < 0) {
                s.known_non_cartesian.insert(e);
                continue;
            }
            auto it = fresh.find(j);
            if (it == fresh.end()) {
                it = fresh.emplace(j, static_cast<int>(s.raw.palette.size())).first;
                s.raw.palette.push_back({x, j, Stage::N2Sweep});
                s.merge_structure.add();
            }
            s.raw.colored_edges[e] = it->second;
            s.raw.stage_of[e] = Stage::N2Sweep;
            added.push_back(e);
        }
    }
    std::sort(added.begin(), added.end());
    return added;
}

std::optional<std::array<Vertex, 4>> find_square(const Graph& h, Edge e, Edge f) {
    Vertex v;
    if (e.first == f.first || e.first == f.second)
        v = e.first;
    else if (e.second == f.first || e.second == f.second)
        v = e.second;
    else
        throw Error(ErrorKind::InvalidInput, "square search needs incident edges");
    Vertex a = e.first == v ? e.second : e.first;
    Vertex b = f.first == v ? f.second : f.first;
    if (a == b || !h.has_edge(v, a) || !h.has_edge(v, b) || h.has_edge(a, b)) return std::nullopt;
    for (Vertex c : set_intersection(h.neighbors(a), h.neighbors(b)))
        if (c != v && !h.has_edge(v, c)) return std::array<Vertex, 4>{v, a, c, b};
    return std::nullopt;
}

int merge_parallel_colors(const Graph& g, ColoredSkeleton& s) {
    refresh_edges(s);
    Graph h = skeleton_graph(g.vertex_count(), s.cartesian_edges);
    auto raw = [&](Vertex x, Vertex y) { return s.raw.colored_edges.at(make_edge(x, y)); };
    int unions = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            const auto& nb = h.neighbors(v);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    Vertex a = nb[i], b = nb[j];
                    if (s.merge_structure.find(raw(v, a)) == s.merge_structure.find(raw(v, b))) continue;
                    auto sq = find_square(h, make_edge(v, a), make_edge(v, b));
                    if (!sq) continue;
                    Vertex c = (*sq)[2];
                    bool u1 = s.merge_structure.unite(raw(v, a), raw(b, c));
                    bool u2 = s.merge_structure.unite(raw(v, b), raw(a, c));
                    if (u1 || u2) {
                        unions += u1 + u2;
                        changed = true;
                    }
                }
        }
    }
    finalize_colors(g, s);
    return unions;
}

void finalize_colors(const Graph& g, ColoredSkeleton& s) {
    refresh_edges(s);
    s.color_of.clear();
    std::map<int, int> renumber;
    for (const Edge& e : s.cartesian_edges) {
        int rep = s.merge_structure.find(s.raw.colored_edges.at(e));
        auto it = renumber.emplace(rep, static_cast<int>(renumber.size())).first;
        s.color_of[e] = it->second;
    }
    s.n_colors = static_cast<int>(renumber.size());

    std::vector<std::vector<char>> touched(s.n_colors, std::vector<char>(g.vertex_count(), 0));
    for (const auto& [e, c] : s.color_of) touched[c][e.first] = touched[c][e.second] = 1;
    for (int c = 0; c < s.n_colors; ++c)
        if (std::count(touched[c].begin(), touched[c].end(), 0) > 0)
            s.diagnostics.push_back("color " + std::to_string(c) + " does not span the vertex set");
}

void build_skeleton_into(const Graph& g, const SkeletonOptions& opts, ColoredSkeleton& s) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    if (!is_thin(g)) throw Error(ErrorKind::NotThin, "graph is not thin; quotient it first");
    const VertexSet b = backbone(g).vertices;
    NeighborhoodCache cache(g, opts.size_cap);

    std::map<Edge, int> candidates;
    for (Vertex x : b) {
        PartialProductColoring run;
        try {
            run = color_fibers_from(g, b, x, cache);
        } catch (...) {
            s.local_prime_counts = cache.prime_counts();
            throw;
        }
        absorb_run(s, run, candidates);
    }
    add_candidates(s, candidates);
    s.local_prime_counts = cache.prime_counts();
    for (Vertex x : b) {
        const auto& nf = cache.get(x);
        s.quotient_caveat |= nf.quotient_caveat;
        s.known_non_cartesian.insert(nf.non_cartesian.begin(), nf.non_cartesian.end());
    }
    complete_merged(g, s);

    n2_sweep(g, s, opts.n2_size_cap);
    merge_parallel_colors(g, s);

    const int expected = s.max_local_factors();
    if (s.n_colors < expected)
        s.diagnostics.push_back("merged into " + std::to_string(s.n_colors) + " colors but neighborhoods report " +
                                std::to_string(expected) + " factors");
}

ColoredSkeleton build_skeleton(const Graph& g, const SkeletonOptions& opts) {
    ColoredSkeleton s;
    build_skeleton_into(g, opts, s);
    return s;
}

}  // namespace spfd
