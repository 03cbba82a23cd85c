#include "spfd/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "spfd/isomorphism.hpp"

namespace spfd {

namespace {

struct Split {
    Graph a, b;
    std::vector<int> a_of, b_of;  // per vertex coordinate in each part
};

// Backtracking search for g ≅ A ⊠ B with |A| = p, |B| = q. Vertices are placed in
// BFS order from a maximum-degree anchor; the factor adjacencies are unknowns that
// get fixed as soon as two placed vertices share a coordinate.
class SplitSearch {
public:
    SplitSearch(const Graph& g, int p, int q) : g_(g), p_(p), q_(q) {
        const int n = g.vertex_count();
        Vertex w = 0;
        for (Vertex v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(w)) w = v;
        order_ = bfs_order(w);
        a_of_.assign(n, -1);
        b_of_.assign(n, -1);
        A_.assign(p * p, -1);
        B_.assign(q * q, -1);
        occ_.assign(p * q, 0);
        count_a_.assign(p, 0);
        count_b_.assign(q, 0);
    }

    std::optional<Split> run() {
        if (!place(order_[0], 0, 0)) return std::nullopt;
        if (!step(1)) return std::nullopt;
        Split s;
        std::vector<Edge> ea, eb;
        for (int i = 0; i < p_; ++i)
            for (int j = i + 1; j < p_; ++j)
                if (A_[i * p_ + j] == 1) ea.emplace_back(i, j);
        for (int i = 0; i < q_; ++i)
            for (int j = i + 1; j < q_; ++j)
                if (B_[i * q_ + j] == 1) eb.emplace_back(i, j);
        s.a = Graph(p_, ea);
        s.b = Graph(q_, eb);
        s.a_of = a_of_;
        s.b_of = b_of_;
        return s;
    }

private:
    struct Change {
        int which;  // 0: A, 1: B
        int idx;
    };
    struct Clause {  // non-edge: not (A[a1][a2] and B[b1][b2])
        int a1, a2, b1, b2;
    };

    std::vector<Vertex> bfs_order(Vertex w) {
        std::vector<Vertex> order{w};
        parent_.assign(g_.vertex_count(), -1);
        std::vector<char> seen(g_.vertex_count(), 0);
        seen[w] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Vertex u : g_.neighbors(order[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    parent_[u] = order[i];
                    order.push_back(u);
                }
        return order;
    }

    int& a_entry(int i, int j) { return A_[std::min(i, j) * p_ + std::max(i, j)]; }
    int& b_entry(int i, int j) { return B_[std::min(i, j) * q_ + std::max(i, j)]; }

    bool set_a(int i, int j, int val) {
        int& e = a_entry(i, j);
        if (e == val) return true;
        if (e != -1) return false;
        e = val;
        trail_.push_back({0, std::min(i, j) * p_ + std::max(i, j)});
        return val == 0 || propagate();
    }
    bool set_b(int i, int j, int val) {
        int& e = b_entry(i, j);
        if (e == val) return true;
        if (e != -1) return false;
        e = val;
        trail_.push_back({1, std::min(i, j) * q_ + std::max(i, j)});
        return val == 0 || propagate();
    }

    // Re-check pending non-edge clauses after some entry became 1.
    bool propagate() {
        for (std::size_t k = 0; k < clauses_.size(); ++k) {
            const Clause c = clauses_[k];
            int ea = a_entry(c.a1, c.a2), eb = b_entry(c.b1, c.b2);
            if (ea == 1 && eb == 1) return false;
            if (ea == 1 && eb == -1 && !set_b(c.b1, c.b2, 0)) return false;
            if (eb == 1 && ea == -1 && !set_a(c.a1, c.a2, 0)) return false;
        }
        return true;
    }

    bool place(Vertex v, int a, int b) {
        a_of_[v] = a;
        b_of_[v] = b;
        occ_[a * q_ + b] = 1;
        ++count_a_[a];
        ++count_b_[b];
        placed_.push_back(v);
        for (std::size_t k = 0; k + 1 < placed_.size(); ++k) {
            Vertex u = placed_[k];
            int a2 = a_of_[u], b2 = b_of_[u];
            int e = g_.has_edge(u, v) ? 1 : 0;
            if (b2 == b) {
                if (!set_a(a, a2, e)) return false;
            } else if (a2 == a) {
                if (!set_b(b, b2, e)) return false;
            } else if (e) {
                if (!set_a(a, a2, 1) || !set_b(b, b2, 1)) return false;
            } else {
                int ea = a_entry(a, a2), eb = b_entry(b, b2);
                if (ea == 1 && eb == 1) return false;
                if (ea == 1) {
                    if (!set_b(b, b2, 0)) return false;
                } else if (eb == 1) {
                    if (!set_a(a, a2, 0)) return false;
                } else if (ea == -1 && eb == -1) {
                    clauses_.push_back({a, a2, b, b2});
                }
            }
        }
        return true;
    }

    // |N[(a,b)]| = |N_A[a]| * |N_B[b]|; bound both sides from the partial factor adjacencies.
    bool degrees_feasible() {
        auto bounds = [](const std::vector<int>& m, int k, std::vector<int>& lo, std::vector<int>& hi) {
            lo.assign(k, 1);
            hi.assign(k, 1);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (i == j) continue;
                    int e = m[std::min(i, j) * k + std::max(i, j)];
                    lo[i] += (e == 1);
                    hi[i] += (e != 0);
                }
        };
        bounds(A_, p_, lo_a_, hi_a_);
        bounds(B_, q_, lo_b_, hi_b_);
        for (Vertex v : placed_) {
            int d = g_.degree(v) + 1, a = a_of_[v], b = b_of_[v];
            bool ok = false;
            for (int x = lo_a_[a]; x <= hi_a_[a] && !ok; ++x)
                ok = d % x == 0 && d / x >= lo_b_[b] && d / x <= hi_b_[b];
            if (!ok) return false;
        }
        return true;
    }

    void unplace(std::size_t trail_mark, std::size_t clause_mark) {
        Vertex v = placed_.back();
        placed_.pop_back();
        occ_[a_of_[v] * q_ + b_of_[v]] = 0;
        --count_a_[a_of_[v]];
        --count_b_[b_of_[v]];
        a_of_[v] = b_of_[v] = -1;
        while (trail_.size() > trail_mark) {
            auto c = trail_.back();
            trail_.pop_back();
            (c.which == 0 ? A_ : B_)[c.idx] = -1;
        }
        clauses_.resize(clause_mark);
    }

    bool step(std::size_t k) {
        if (k == order_.size()) return true;
        Vertex v = order_[k];
        Vertex par = parent_[v];
        int pa = a_of_[par], pb = b_of_[par];
        int limit_a = std::min(next_a_ + 1, p_), limit_b = std::min(next_b_ + 1, q_);
        for (int a = 0; a < limit_a; ++a) {
            if (count_a_[a] == q_) continue;
            if (a != pa && a_entry(a, pa) == 0) continue;
            for (int b = 0; b < limit_b; ++b) {
                if (occ_[a * q_ + b] || count_b_[b] == p_) continue;
                if (b != pb && b_entry(b, pb) == 0) continue;
                std::size_t tm = trail_.size(), cm = clauses_.size();
                int na = next_a_, nb = next_b_;
                if (a == next_a_) ++next_a_;
                if (b == next_b_) ++next_b_;
                if (place(v, a, b) && degrees_feasible() && step(k + 1)) return true;
                unplace(tm, cm);
                next_a_ = na;
                next_b_ = nb;
            }
        }
        return false;
    }

    const Graph& g_;
    int p_, q_;
    std::vector<Vertex> order_, parent_, placed_;
    std::vector<int> a_of_, b_of_, A_, B_, count_a_, count_b_;
    std::vector<int> lo_a_, hi_a_, lo_b_, hi_b_;
    std::vector<char> occ_;
    std::vector<Change> trail_;
    std::vector<Clause> clauses_;
    int next_a_ = 1, next_b_ = 1;
};

std::optional<Split> find_split(const Graph& g) {
    const int n = g.vertex_count();
    const bool thin = is_thin(g);
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        // A factor of a thin graph is thin, and K2 is the only connected 2-vertex graph.
        if (thin && p == 2) continue;
        if (auto s = SplitSearch(g, p, n / p).run()) return s;
    }
    return std::nullopt;
}

LocalFactorization factor_rec(const Graph& g) {
    LocalFactorization r;
    const int n = g.vertex_count();
    if (n == 1) {
        r.coords.coords.assign(1, {});
        return r;
    }
    auto split = find_split(g);
    if (!split) {
        r.factors.push_back(g);
        r.coords.factor_sizes = {n};
        r.coords.coords.resize(n);
        for (Vertex v = 0; v < n; ++v) r.coords.coords[v] = {v};
        r.prime_count = 1;
        return r;
    }
    LocalFactorization fa = factor_rec(split->a), fb = factor_rec(split->b);
    r.factors = fa.factors;
    r.factors.insert(r.factors.end(), fb.factors.begin(), fb.factors.end());
    r.coords.factor_sizes = fa.coords.factor_sizes;
    r.coords.factor_sizes.insert(r.coords.factor_sizes.end(), fb.coords.factor_sizes.begin(),
                                 fb.coords.factor_sizes.end());
    r.coords.coords.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto t = fa.coords.coords[split->a_of[v]];
        const auto& tb = fb.coords.coords[split->b_of[v]];
        t.insert(t.end(), tb.begin(), tb.end());
        r.coords.coords[v] = std::move(t);
    }
    r.prime_count = fa.prime_count + fb.prime_count;
    return r;
}

}  // namespace

bool reproduces(const Graph& g, const std::vector<Graph>& factors, const Coordinatization& c) {
    if (static_cast<int>(c.coords.size()) != g.vertex_count()) return false;
    if (c.factor_count() != static_cast<int>(factors.size())) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].vertex_count() != c.factor_sizes[i]) return false;
    if (!is_bijective(c)) return false;
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool adj = true;
            for (std::size_t i = 0; i < factors.size() && adj; ++i) {
                int x = c.coords[u][i], y = c.coords[v][i];
                adj = (x == y) || factors[i].has_edge(x, y);
            }
            if (adj != g.has_edge(u, v)) return false;
        }
    return true;
}

LocalFactorization factor_exact(const Graph& g, int size_cap) {
    if (g.vertex_count() == 0) throw Error(ErrorKind::InvalidInput, "empty graph");
    if (g.vertex_count() > size_cap)
        throw Error(ErrorKind::SizeCap, "graph with " + std::to_string(g.vertex_count()) +
                                            " vertices exceeds factorizer size cap " +
                                            std::to_string(size_cap));
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "factorization needs a connected graph");
    LocalFactorization r = factor_rec(g);

    std::vector<std::pair<int, std::string>> keys;
    for (const auto& f : r.factors) keys.emplace_back(f.vertex_count(), canonical_form(f, size_cap));
    std::vector<int> perm(r.factors.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return keys[x] < keys[y]; });
    LocalFactorization out;
    out.prime_count = r.prime_count;
    out.coords.coords.resize(r.coords.coords.size());
    for (int i : perm) {
        out.factors.push_back(r.factors[i]);
        out.coords.factor_sizes.push_back(r.coords.factor_sizes[i]);
    }
    for (std::size_t v = 0; v < r.coords.coords.size(); ++v)
        for (int i : perm) out.coords.coords[v].push_back(r.coords.coords[v][i]);
    return out;
}

int NeighborhoodFactorization::lifted_factor(Vertex u, Vertex v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(lifted.begin(), lifted.end(), e, [](const LiftedEdge& l, const Edge& k) {
        return Edge{l.u, l.v} < k;
    });
    if (it != lifted.end() && it->u == e.first && it->v == e.second) return it->factor;
    return -1;
}

NeighborhoodFactorization factor_induced(const Graph& g, Vertex center, const VertexSet& w, int size_cap) {
    NeighborhoodFactorization nf;
    nf.center = center;
    nf.vertices = w;
    nf.classes = relative_s_partition(g, w);
    const auto& cls = nf.classes.classes;
    const int k = static_cast<int>(cls.size());
    nf.quotient_caveat = k < static_cast<int>(w.size());

    std::vector<Edge> qedges;
    for (Vertex u : nf.vertices)
        for (Vertex x : g.neighbors(u)) {
            if (x <= u || nf.classes.class_of[x] < 0) continue;
            int a = nf.classes.class_of[u], b = nf.classes.class_of[x];
            if (a != b) qedges.push_back(make_edge(a, b));
        }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    nf.quotient = Graph(k, qedges);
    nf.local = factor_exact(nf.quotient, size_cap);

    for (auto [a, b] : qedges) {
        auto idx = differing_coordinate(nf.local.coords, a, b);
        bool liftable = idx && (cls[a].size() == 1 || cls[b].size() == 1);
        for (Vertex u : cls[a])
            for (Vertex x : cls[b]) {
                if (!g.has_edge(u, x)) continue;
                if (liftable)
                    nf.lifted.push_back({std::min(u, x), std::max(u, x), *idx});
                else if (!idx)
                    nf.non_cartesian.push_back(make_edge(u, x));
            }
    }
    std::sort(nf.lifted.begin(), nf.lifted.end(),
              [](const LiftedEdge& l, const LiftedEdge& r) { return Edge{l.u, l.v} < Edge{r.u, r.v}; });
    std::sort(nf.non_cartesian.begin(), nf.non_cartesian.end());
    return nf;
}

NeighborhoodFactorization factor_neighborhood(const Graph& g, Vertex v, int size_cap) {
    if (!is_thin(g)) throw Error(ErrorKind::NotThin, "neighborhood factorization requires a thin graph");
    return factor_induced(g, v, closed_neighborhood(g, v), size_cap);
}

}  // namespace spfd
