#pragma once

// Test-side reference implementations. These deliberately avoid the library's
// algorithms so that expected values are computed independently.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spfd/graph.hpp"
#include "spfd/isomorphism.hpp"
#include "spfd/oracle.hpp"

namespace testutil {

using spfd::Edge;
using spfd::Graph;
using spfd::Vertex;

inline Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }

// Adjacency matrix view.
inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

// Strong product of two graphs by explicit pair enumeration; vertex (a,b) -> a*|B|+b.
inline Graph brute_strong(const Graph& a, const Graph& b, bool cartesian_only = false) {
    auto ma = matrix(a), mb = matrix(b);
    const int p = a.vertex_count(), q = b.vertex_count();
    std::vector<Edge> e;
    for (int x = 0; x < p * q; ++x)
        for (int y = x + 1; y < p * q; ++y) {
            int a1 = x / q, b1 = x % q, a2 = y / q, b2 = y % q;
            bool ra = a1 == a2 || ma[a1][a2];
            bool rb = b1 == b2 || mb[b1][b2];
            int diff = (a1 != a2) + (b1 != b2);
            if (ra && rb && (!cartesian_only || diff == 1)) e.emplace_back(x, y);
        }
    return Graph(p * q, e);
}

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.vertex_count(), inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x == inf) x = -1;
    return d;
}

inline std::set<Vertex> closed_nb(const Graph& g, Vertex v) {
    std::set<Vertex> s{v};
    for (Vertex u : g.neighbors(v)) s.insert(u);
    return s;
}

// Vertices whose closed neighborhood is not contained in any other one.
inline std::vector<Vertex> brute_backbone(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nv = closed_nb(g, v);
        bool maximal = true;
        for (Vertex w = 0; w < g.vertex_count() && maximal; ++w) {
            if (w == v) continue;
            auto nw = closed_nb(g, w);
            if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) maximal = false;
        }
        if (maximal) out.push_back(v);
    }
    return out;
}

// |S_H(x)| straight from the definition.
inline int brute_class_size(const Graph& g, const std::set<Vertex>& h, Vertex x) {
    auto key = [&](Vertex u) {
        std::set<Vertex> k;
        for (Vertex w : closed_nb(g, u))
            if (h.count(w)) k.insert(w);
        return k;
    };
    auto kx = key(x);
    int c = 0;
    for (Vertex u : h)
        if (key(u) == kx) ++c;
    return c;
}

inline std::vector<std::string> canon_multiset(const std::vector<Graph>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(spfd::canonical_form(g));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool dominating(const Graph& g, const std::vector<Vertex>& s) {
    std::set<Vertex> in(s.begin(), s.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in.count(v)) continue;
        bool hit = false;
        for (Vertex u : g.neighbors(v)) hit |= in.count(u) > 0;
        if (!hit) return false;
    }
    return true;
}

inline bool induces_connected(const Graph& g, const std::vector<Vertex>& s) {
    if (s.empty()) return false;
    std::set<Vertex> in(s.begin(), s.end()), seen{s[0]};
    std::vector<Vertex> stack{s[0]};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (in.count(u) && seen.insert(u).second) stack.push_back(u);
    }
    return seen.size() == in.size();
}

inline Graph random_permuted(const Graph& g, spfd::Rng& rng, std::vector<Vertex>* perm_out = nullptr) {
    std::vector<Vertex> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    for (int i = g.vertex_count() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    if (perm_out) *perm_out = perm;
    return spfd::relabel(g, perm);
}

// The neighborhood configuration with S_v(x) = S_v(y) = {x,y} inside a thin graph:
// v=0, x=1, y=2, z=3, plus vertex 4 separating x from y globally.
inline Graph twin_in_neighborhood_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}}); }

// Thin graph whose backbone is a single vertex: 0 joined to the path 1-2-3-4.
inline Graph single_backbone_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}

}  // namespace testutil
