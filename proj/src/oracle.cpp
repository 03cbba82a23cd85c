#include "spfd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "spfd/isomorphism.hpp"
#include "spfd/s_structure.hpp"

namespace spfd {

namespace {

struct OracleSplit {
    VertexSet fa, fb;                      // fibers through vertex 0, vertex 0 first
    std::vector<std::vector<Vertex>> cell; // cell[i][j] = vertex at (fa[i], fb[j])
};

bool connected_subset(const Graph& g, const VertexSet& s) {
    return is_connected(induced_subgraph(g, s).graph);
}

// Fill the grid so that cell adjacency matches the strong product of the two fibers.
bool fill_cells(const Graph& g, OracleSplit& sp, std::vector<char>& used, int idx) {
    const int p = static_cast<int>(sp.fa.size()), q = static_cast<int>(sp.fb.size());
    if (idx == p * q) return true;
    const int i = idx / q, j = idx % q;
    if (i == 0 || j == 0) return fill_cells(g, sp, used, idx + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int k = 0; k < idx && ok; ++k) {
            int i2 = k / q, j2 = k % q;
            bool ra = i == i2 || g.has_edge(sp.fa[i], sp.fa[i2]);
            bool rb = j == j2 || g.has_edge(sp.fb[j], sp.fb[j2]);
            ok = (ra && rb) == g.has_edge(v, sp.cell[i2][j2]);
        }
        // Cells after idx on row 0 / column 0 are already fixed; check them too.
        for (int k = idx + 1; k < p * q && ok; ++k) {
            int i2 = k / q, j2 = k % q;
            if (i2 != 0 && j2 != 0) continue;
            bool ra = i == i2 || g.has_edge(sp.fa[i], sp.fa[i2]);
            bool rb = j == j2 || g.has_edge(sp.fb[j], sp.fb[j2]);
            ok = (ra && rb) == g.has_edge(v, sp.cell[i2][j2]);
        }
        if (!ok) continue;
        used[v] = 1;
        sp.cell[i][j] = v;
        if (fill_cells(g, sp, used, idx + 1)) return true;
        used[v] = 0;
    }
    return false;
}

std::optional<OracleSplit> try_fibers(const Graph& g, const VertexSet& fa, const VertexSet& fb) {
    if (!connected_subset(g, fa) || !connected_subset(g, fb)) return std::nullopt;
    OracleSplit sp;
    sp.fa = fa;
    sp.fb = fb;
    // Keep vertex 0 at index 0 of both fibers.
    std::stable_partition(sp.fa.begin(), sp.fa.end(), [](Vertex v) { return v == 0; });
    std::stable_partition(sp.fb.begin(), sp.fb.end(), [](Vertex v) { return v == 0; });
    const int p = static_cast<int>(fa.size()), q = static_cast<int>(fb.size());
    sp.cell.assign(p, std::vector<Vertex>(q, -1));
    std::vector<char> used(g.vertex_count(), 0);
    for (int i = 0; i < p; ++i) {
        sp.cell[i][0] = sp.fa[i];
        used[sp.fa[i]] = 1;
    }
    for (int j = 0; j < q; ++j) {
        sp.cell[0][j] = sp.fb[j];
        used[sp.fb[j]] = 1;
    }
    // Row 0 against column 0 must already behave like a product.
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < q; ++j) {
            bool want = g.has_edge(0, sp.fa[i]) && g.has_edge(0, sp.fb[j]);
            if (want != g.has_edge(sp.fa[i], sp.fb[j])) return std::nullopt;
        }
    if (!fill_cells(g, sp, used, 1)) return std::nullopt;
    return sp;
}

// Calls f on every k-subset of items (in lexicographic order) until it returns true.
bool for_each_subset(const VertexSet& items, int k, const std::function<bool(const VertexSet&)>& f) {
    const int n = static_cast<int>(items.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    VertexSet pick(k);
    while (true) {
        for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
        if (f(pick)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<OracleSplit> oracle_split(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet rest;
    for (Vertex v = 1; v < n; ++v) rest.push_back(v);
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        const int q = n / p;
        std::optional<OracleSplit> found;
        for_each_subset(rest, p - 1, [&](const VertexSet& sa) {
            VertexSet others;
            std::set_difference(rest.begin(), rest.end(), sa.begin(), sa.end(), std::back_inserter(others));
            VertexSet fa = sa;
            fa.insert(fa.begin(), 0);
            return for_each_subset(others, q - 1, [&](const VertexSet& sb) {
                VertexSet fb = sb;
                fb.insert(fb.begin(), 0);
                found = try_fibers(g, fa, fb);
                return found.has_value();
            });
        });
        if (found) return found;
    }
    return std::nullopt;
}

LocalFactorization oracle_rec(const Graph& g) {
    LocalFactorization r;
    const int n = g.vertex_count();
    if (n == 1) {
        r.coords.coords.assign(1, {});
        return r;
    }
    auto sp = oracle_split(g);
    if (!sp) {
        r.factors.push_back(g);
        r.coords.factor_sizes = {n};
        for (Vertex v = 0; v < n; ++v) r.coords.coords.push_back({v});
        r.prime_count = 1;
        return r;
    }
    // Factor graphs are the fibers relabelled by their position in the fiber list.
    auto fiber_graph = [&](const VertexSet& f) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (g.has_edge(f[i], f[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return Graph(static_cast<int>(f.size()), e);
    };
    LocalFactorization la = oracle_rec(fiber_graph(sp->fa)), lb = oracle_rec(fiber_graph(sp->fb));
    r.factors = la.factors;
    r.factors.insert(r.factors.end(), lb.factors.begin(), lb.factors.end());
    r.coords.factor_sizes = la.coords.factor_sizes;
    r.coords.factor_sizes.insert(r.coords.factor_sizes.end(), lb.coords.factor_sizes.begin(),
                                 lb.coords.factor_sizes.end());
    r.coords.coords.resize(n);
    for (std::size_t i = 0; i < sp->fa.size(); ++i)
        for (std::size_t j = 0; j < sp->fb.size(); ++j) {
            auto t = la.coords.coords[i];
            t.insert(t.end(), lb.coords.coords[j].begin(), lb.coords.coords[j].end());
            r.coords.coords[sp->cell[i][j]] = std::move(t);
        }
    r.prime_count = la.prime_count + lb.prime_count;
    return r;
}

}  // namespace

LocalFactorization oracle_pfd(const Graph& g) {
    if (g.vertex_count() == 0) throw Error(ErrorKind::InvalidInput, "empty graph");
    if (g.vertex_count() > kOracleCap)
        throw Error(ErrorKind::SizeCap, "oracle is limited to " + std::to_string(kOracleCap) + " vertices");
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "oracle needs a connected graph");
    LocalFactorization r = oracle_rec(g);
    std::vector<int> perm(r.factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, std::string>> keys;
    for (const auto& f : r.factors) keys.emplace_back(f.vertex_count(), canonical_form(f));
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    LocalFactorization out;
    out.prime_count = r.prime_count;
    out.coords.coords.resize(r.coords.coords.size());
    for (int i : perm) {
        out.factors.push_back(r.factors[i]);
        out.coords.factor_sizes.push_back(r.coords.factor_sizes[i]);
        for (std::size_t v = 0; v < r.coords.coords.size(); ++v)
            out.coords.coords[v].push_back(r.coords.coords[v][i]);
    }
    return out;
}

Graph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(edge_prob)) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph random_connected_graph(int n, double edge_prob, Rng& rng, int budget) {
    for (int t = 0; t < budget; ++t) {
        Graph g = random_graph(n, edge_prob, rng);
        if (is_connected(g)) return g;
    }
    throw Error(ErrorKind::Pipeline, "no connected graph with n=" + std::to_string(n) +
                                         " p=" + std::to_string(edge_prob) + " within budget");
}

Graph gen_thin_graph(int n, double edge_prob, Rng& rng, int budget) {
    if (n < 2) throw Error(ErrorKind::InvalidInput, "thin graph generator needs n >= 2");
    for (int t = 0; t < budget; ++t) {
        Graph g = random_graph(n, edge_prob, rng);
        if (is_connected(g) && is_thin(g)) return g;
    }
    throw Error(ErrorKind::Pipeline, "no connected thin graph with n=" + std::to_string(n) +
                                         " p=" + std::to_string(edge_prob) + " within " +
                                         std::to_string(budget) + " draws");
}

Graph gen_thin_graph(int n, double edge_prob, std::uint64_t seed, int budget) {
    Rng rng(seed);
    return gen_thin_graph(n, edge_prob, rng, budget);
}

ProductInstance product_instance(const std::vector<Graph>& factors, std::uint64_t seed) {
    ProductInstance inst;
    Product p = strong_product(factors);
    inst.graph = std::move(p.graph);
    inst.ground_truth_coords = std::move(p.coords);
    inst.ground_truth_factors = factors;
    inst.seed = seed;
    inst.thin = is_thin(inst.graph);
    return inst;
}

ProductInstance gen_product_instance(const std::vector<int>& factor_sizes, std::uint64_t seed, double edge_prob) {
    if (factor_sizes.empty()) throw Error(ErrorKind::InvalidInput, "no factor sizes given");
    Rng rng(seed);
    std::vector<Graph> factors;
    for (int s : factor_sizes) {
        if (s < 2) throw Error(ErrorKind::InvalidInput, "factor sizes must be at least 2");
        factors.push_back(gen_thin_graph(s, edge_prob, rng));
    }
    return product_instance(factors, seed);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

namespace {

// P_k ⊠ P_m strip whose last column is joined back to the first through a
// permutation of the P_m coordinate.
Graph glued_strip(int k, int m, const std::vector<int>& twist) {
    Product strip = strong_product({path_graph(k), path_graph(m)});
    std::vector<Edge> e = strip.graph.edges();
    auto id = [m](int i, int j) { return i * m + j; };
    for (int j = 0; j < m; ++j)
        for (int j2 = 0; j2 < m; ++j2)
            if (std::abs(twist[j] - j2) <= 1) e.push_back(make_edge(id(k - 1, j), id(0, j2)));
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph(k * m, e);
}

bool backbone_neighborhoods_split_in_two(const Graph& g) {
    for (Vertex x : backbone(g).vertices)
        if (factor_neighborhood(g, x).prime_count() != 2) return false;
    return true;
}

}  // namespace

Graph gen_twisted_instance() {
    const int m = 3;
    std::vector<int> twist(m);
    for (int k = 4; k * m <= kOracleCap; ++k) {
        std::iota(twist.begin(), twist.end(), 0);
        do {
            // The gluing must map P_m onto itself, otherwise the strip is not locally a product.
            bool automorphism = true;
            for (int j = 0; j + 1 < m; ++j) automorphism &= std::abs(twist[j] - twist[j + 1]) == 1;
            if (!automorphism) continue;
            Graph g = glued_strip(k, m, twist);
            if (!is_connected(g) || !is_thin(g)) continue;
            if (oracle_pfd(g).prime_count != 1) continue;
            if (backbone_neighborhoods_split_in_two(g)) return g;
        } while (std::next_permutation(twist.begin(), twist.end()));
    }
    throw Error(ErrorKind::Pipeline, "twisted instance search failed");
}

StagingInstance gen_staging_instance() {
    for (std::uint64_t seed = 1; seed < 20000; ++seed) {
        Rng rng(seed);
        std::vector<Graph> factors;
        for (int f = 0; f < 2; ++f) factors.push_back(gen_thin_graph(3 + rng.below(4), 0.5, rng));
        ProductInstance inst = product_instance(factors, seed);
        const Graph& g = inst.graph;
        VertexSet b = backbone(g).vertices;
        StagingInstance out;
        for (auto [u, v] : g.edges())
            if (differing_coordinate(inst.ground_truth_coords, u, v) && !s1_witness(g, b, u, v))
                out.non_s1_cartesian.emplace_back(u, v);
        if (!out.non_s1_cartesian.empty()) {
            out.instance = std::move(inst);
            return out;
        }
    }
    throw Error(ErrorKind::Pipeline, "no product with a non-S1 Cartesian fiber found");
}

}  // namespace spfd
