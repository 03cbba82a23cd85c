#include "spfd/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace spfd {

namespace {

using Colors = std::vector<int>;

// Replace colours by dense ranks of the given keys; returns the number of cells.
template <class Key>
int rerank(const std::vector<Key>& keys, Colors& colors) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < keys.size(); ++v)
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

int refine(const Graph& g, Colors& colors) {
    const int n = g.vertex_count();
    int cells = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<int>> keys(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            auto& k = keys[v];
            k.clear();
            k.push_back(colors[v]);
            for (Vertex u : g.neighbors(v)) k.push_back(colors[u]);
            std::sort(k.begin() + 1, k.end());
        }
        int next = rerank(keys, colors);
        if (next == cells) return cells;
        cells = next;
    }
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g) {}

    void run(Colors colors) {
        const int n = g_.vertex_count();
        int cells = refine(g_, colors);
        if (cells == n) {
            leaf(colors);
            return;
        }
        // Target: first non-singleton cell.
        std::vector<int> size(cells, 0);
        for (int c : colors) ++size[c];
        int target = 0;
        while (size[target] < 2) ++target;
        VertexSet cell;
        for (Vertex v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        VertexSet tried;
        for (Vertex v : cell) {
            // Swapping twins is an automorphism fixing everything individualised so far.
            bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); });
            if (twin) continue;
            tried.push_back(v);
            std::vector<int> keys(n);
            for (Vertex u = 0; u < n; ++u) keys[u] = 2 * colors[u] + (colors[u] == target && u != v);
            Colors next(n);
            rerank(keys, next);
            run(std::move(next));
        }
    }

    CanonicalLabeling result() const { return best_; }

private:
    bool twins(Vertex a, Vertex b) const {
        VertexSet na, nb;
        for (Vertex x : g_.neighbors(a))
            if (x != b) na.push_back(x);
        for (Vertex x : g_.neighbors(b))
            if (x != a) nb.push_back(x);
        return na == nb;
    }

    void leaf(const Colors& pos) {
        const int n = g_.vertex_count();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v) at[pos[v]] = v;
        std::string form;
        form.reserve(4 + n * n / 16 + 1);
        for (int s = 0; s < 4; ++s) form.push_back(static_cast<char>((n >> (8 * (3 - s))) & 0xff));
        unsigned char byte = 0;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                byte = static_cast<unsigned char>((byte << 1) | (g_.has_edge(at[i], at[j]) ? 1 : 0));
                if (++bits == 8) {
                    form.push_back(static_cast<char>(byte));
                    byte = 0;
                    bits = 0;
                }
            }
        if (bits) form.push_back(static_cast<char>(byte << (8 - bits)));
        if (!have_ || form < best_.form) {
            best_.form = std::move(form);
            best_.position = pos;
            have_ = true;
        }
    }

    const Graph& g_;
    CanonicalLabeling best_;
    bool have_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, int size_cap) {
    if (g.vertex_count() > size_cap)
        throw Error(ErrorKind::SizeCap, "graph with " + std::to_string(g.vertex_count()) +
                                            " vertices exceeds isomorphism size cap " +
                                            std::to_string(size_cap));
    if (g.vertex_count() == 0) return {{}, std::string(4, '\0')};
    Search s(g);
    std::vector<int> degrees(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    Colors colors(g.vertex_count());
    rerank(degrees, colors);
    s.run(std::move(colors));
    return s.result();
}

std::string canonical_form(const Graph& g, int size_cap) { return canonical_labeling(g, size_cap).form; }

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h, int size_cap) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto cg = canonical_labeling(g, size_cap);
    auto ch = canonical_labeling(h, size_cap);
    if (cg.form != ch.form) return std::nullopt;
    const int n = g.vertex_count();
    std::vector<Vertex> at_h(n), map(n);
    for (Vertex u = 0; u < n; ++u) at_h[ch.position[u]] = u;
    for (Vertex v = 0; v < n; ++v) map[v] = at_h[cg.position[v]];
    return map;
}

bool is_isomorphic(const Graph& g, const Graph& h, int size_cap) {
    return find_isomorphism(g, h, size_cap).has_value();
}

}  // namespace spfd
