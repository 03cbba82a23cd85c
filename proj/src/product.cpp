#include "spfd/product.hpp"

#include <algorithm>

namespace spfd {

long long Coordinatization::rank(const std::vector<int>& tuple) const {
    long long r = 0;
    for (std::size_t i = 0; i < factor_sizes.size(); ++i) r = r * factor_sizes[i] + tuple[i];
    return r;
}

namespace {

// Builds the vertex grid and joins pairs whose per-coordinate relation passes `accept`.
template <class Accept>
Product build_product(const std::vector<Graph>& factors, Accept accept) {
    if (factors.empty()) throw Error(ErrorKind::InvalidInput, "product of empty factor list");
    Product p;
    long long total = 1;
    for (const auto& f : factors) {
        if (f.vertex_count() == 0) throw Error(ErrorKind::InvalidInput, "empty factor");
        p.coords.factor_sizes.push_back(f.vertex_count());
        total *= f.vertex_count();
        if (total > (1 << 24)) throw Error(ErrorKind::SizeCap, "product too large");
    }
    const int n = static_cast<int>(total);
    const int k = static_cast<int>(factors.size());
    p.coords.coords.assign(n, std::vector<int>(k));
    for (int v = 0; v < n; ++v) {
        int r = v;
        for (int i = k - 1; i >= 0; --i) {
            p.coords.coords[v][i] = r % factors[i].vertex_count();
            r /= factors[i].vertex_count();
        }
    }

    // Enumerate neighbors of v by walking the product of closed neighborhoods.
    std::vector<Edge> edges;
    std::vector<VertexSet> choices(k);
    std::vector<int> idx(k);
    for (int v = 0; v < n; ++v) {
        const auto& cv = p.coords.coords[v];
        for (int i = 0; i < k; ++i) choices[i] = closed_neighborhood(factors[i], cv[i]);
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            int changed = 0;
            long long u = 0;
            for (int i = 0; i < k; ++i) {
                int c = choices[i][idx[i]];
                changed += (c != cv[i]);
                u = u * factors[i].vertex_count() + c;
            }
            if (u > v && accept(changed)) edges.emplace_back(v, static_cast<int>(u));
            int i = k - 1;
            while (i >= 0 && ++idx[i] == static_cast<int>(choices[i].size())) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    p.graph = Graph(n, edges);
    return p;
}

}  // namespace

Product strong_product(const std::vector<Graph>& factors) {
    return build_product(factors, [](int changed) { return changed >= 1; });
}

Product cartesian_product(const std::vector<Graph>& factors) {
    return build_product(factors, [](int changed) { return changed == 1; });
}

int projection(const Coordinatization& c, Vertex v, int i) {
    if (v < 0 || v >= static_cast<int>(c.coords.size()))
        throw Error(ErrorKind::InvalidInput, "invalid vertex id " + std::to_string(v));
    if (i < 0 || i >= c.factor_count()) throw Error(ErrorKind::InvalidInput, "factor index out of range");
    return c.coords[v][i];
}

Fiber fiber_through(const Coordinatization& c, Vertex x, int i) {
    projection(c, x, i);
    Fiber f{i, x, {}};
    const auto& cx = c.coords[x];
    for (Vertex v = 0; v < static_cast<int>(c.coords.size()); ++v) {
        bool same = true;
        for (int j = 0; j < c.factor_count() && same; ++j)
            if (j != i && c.coords[v][j] != cx[j]) same = false;
        if (same) f.vertices.push_back(v);
    }
    return f;
}

std::optional<int> differing_coordinate(const Coordinatization& c, Vertex u, Vertex v) {
    std::optional<int> idx;
    for (int i = 0; i < c.factor_count(); ++i) {
        if (c.coords[u][i] == c.coords[v][i]) continue;
        if (idx) return std::nullopt;
        idx = i;
    }
    return idx;
}

std::optional<int> is_cartesian_edge(const Graph& g, const Coordinatization& c, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw Error(ErrorKind::InvalidInput,
                    "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    return differing_coordinate(c, u, v);
}

bool is_bijective(const Coordinatization& c) {
    long long total = 1;
    for (int s : c.factor_sizes) total *= s;
    if (total != static_cast<long long>(c.coords.size())) return false;
    std::vector<char> seen(total, 0);
    for (const auto& t : c.coords) {
        if (static_cast<int>(t.size()) != c.factor_count()) return false;
        for (int i = 0; i < c.factor_count(); ++i)
            if (t[i] < 0 || t[i] >= c.factor_sizes[i]) return false;
        auto r = c.rank(t);
        if (seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

}  // namespace spfd
