#include "spfd/recognizer.hpp"

#include <algorithm>
#include <numeric>

#include "spfd/factorize.hpp"
#include "spfd/s_structure.hpp"

namespace spfd {

namespace {

// Component id per vertex in the subgraph of edges whose color passes `keep`.
template <class Keep>
std::vector<int> components(int n, const std::map<Edge, int>& color_of, Keep keep) {
    DisjointSets ds;
    for (int v = 0; v < n; ++v) ds.add();
    for (const auto& [e, c] : color_of)
        if (keep(c)) ds.unite(e.first, e.second);
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = ds.find(v);
    return out;
}

Graph fiber_factor(const VertexSet& fiber, const std::map<Edge, int>& color_of, int color) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < fiber.size(); ++i)
        for (std::size_t j = i + 1; j < fiber.size(); ++j) {
            auto it = color_of.find(make_edge(fiber[i], fiber[j]));
            if (it != color_of.end() && it->second == color)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(fiber.size()), edges);
}

}  // namespace

Extraction extract_factors(const Graph& g, const std::map<Edge, int>& color_of, int n_colors) {
    Extraction ex;
    const int n = g.vertex_count();
    ex.coords.coords.assign(n, std::vector<int>(n_colors, -1));
    ex.bijective = true;
    for (int c = 0; c < n_colors; ++c) {
        auto own = components(n, color_of, [c](int x) { return x == c; });
        auto rest = components(n, color_of, [c](int x) { return x != c; });
        VertexSet fiber;
        for (Vertex v = 0; v < n; ++v)
            if (own[v] == own[0]) fiber.push_back(v);
        ex.fibers.push_back(fiber);
        ex.factors.push_back(fiber_factor(fiber, color_of, c));
        ex.coords.factor_sizes.push_back(static_cast<int>(fiber.size()));

        std::map<int, int> slot;  // component without color c -> position in fiber
        for (std::size_t i = 0; i < fiber.size(); ++i)
            if (!slot.emplace(rest[fiber[i]], static_cast<int>(i)).second) {
                ex.bijective = false;
                ex.diagnostic = "fiber of color " + std::to_string(c) + " meets a complementary component twice";
            }
        for (Vertex v = 0; v < n; ++v) {
            auto it = slot.find(rest[v]);
            if (it == slot.end()) {
                ex.bijective = false;
                if (ex.diagnostic.empty())
                    ex.diagnostic = "vertex " + std::to_string(v) + " has no position in the fiber of color " +
                                    std::to_string(c);
                continue;
            }
            ex.coords.coords[v][c] = it->second;
        }
    }
    if (ex.bijective && !is_bijective(ex.coords)) {
        ex.bijective = false;
        ex.diagnostic = "coordinates do not form a bijection onto the grid";
    }
    return ex;
}

bool verify_product(const std::vector<Graph>& factors, const std::map<Edge, int>& color_of, int n_colors,
                    const Graph& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Extraction ex = extract_factors(g, color_of, n_colors);
    if (!ex.bijective) return fail(ex.diagnostic);
    if (factors.size() != ex.factors.size()) return fail("factor count differs from color count");
    if (!reproduces(g, factors, ex.coords)) return fail("strong product of the factors differs from the graph");
    return true;
}

RecognitionReport recognize(const Graph& g, const SkeletonOptions& opts) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    if (!is_thin(g)) throw Error(ErrorKind::NotThin, "graph is not thin; run the quotient first");
    RecognitionReport r;
    bool built = true;
    try {
        build_skeleton_into(g, opts, r.coloring);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Pipeline && e.kind() != ErrorKind::SizeCap) throw;
        r.diagnostics.push_back(e.what());
        built = false;
    }
    r.max_local_factors = r.coloring.max_local_factors();
    r.diagnostics.insert(r.diagnostics.end(), r.coloring.diagnostics.begin(), r.coloring.diagnostics.end());
    if (r.coloring.quotient_caveat)
        r.diagnostics.push_back("a decomposed neighborhood was not thin; its count refers to the quotient");
    if (!built) return r;

    Extraction ex = extract_factors(g, r.coloring.color_of, r.coloring.n_colors);
    r.extracted_factors = ex.factors;
    r.fibers = ex.fibers;
    std::string why;
    r.reconstruction_ok = ex.bijective && verify_product(ex.factors, r.coloring.color_of, r.coloring.n_colors, g, &why);
    if (!r.reconstruction_ok) r.diagnostics.push_back(ex.bijective ? why : ex.diagnostic);
    const int m = r.coloring.n_colors;
    if (r.max_local_factors != m)
        r.diagnostics.push_back("largest local factor count " + std::to_string(r.max_local_factors) +
                                " differs from " + std::to_string(m) + " extracted factors");
    r.in_upsilon = r.reconstruction_ok && r.max_local_factors == m;
    return r;
}

FastFactorization pfd_fast(const Graph& g, int size_cap) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
    const VertexSet b = backbone(g).vertices;
    FastFactorization out;
    out.anchor = b.front();
    NeighborhoodCache cache(g, size_cap);
    PartialProductColoring c;
    try {
        c = color_fibers_from(g, b, out.anchor, cache);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Pipeline) throw;
        throw Error(ErrorKind::Pipeline, std::string("not locally unrefined: ") + e.what());
    }
    const int n = static_cast<int>(c.palette.size());
    for (int i = 0; i < n; ++i) {
        // Walk the color-i edges from the anchor.
        VertexSet fiber{out.anchor};
        std::vector<char> seen(g.vertex_count(), 0);
        seen[out.anchor] = 1;
        for (std::size_t k = 0; k < fiber.size(); ++k)
            for (Vertex w : g.neighbors(fiber[k]))
                if (!seen[w] && c.color(fiber[k], w) == i) {
                    seen[w] = 1;
                    fiber.push_back(w);
                }
        std::sort(fiber.begin(), fiber.end());
        out.factors.push_back(fiber_factor(fiber, c.colored_edges, i));
        out.fibers.push_back(std::move(fiber));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return out.fibers[x].size() < out.fibers[y].size(); });
    FastFactorization sorted{out.anchor, {}, {}, n};
    for (int i : perm) {
        sorted.factors.push_back(out.factors[i]);
        sorted.fibers.push_back(out.fibers[i]);
    }
    return sorted;
}

}  // namespace spfd
