#include "spfd/io.hpp"

#include <istream>
#include <sstream>

namespace spfd {

Graph read_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw Error(ErrorKind::InvalidInput, "edge list must start with \"n m\"");
    if (n < 0 || m < 0 || n > (1 << 24)) throw Error(ErrorKind::InvalidInput, "bad header counts");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(i) + " has an out-of-range endpoint");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw Error(ErrorKind::InvalidInput, "trailing data after edge list");
    return Graph(static_cast<int>(n), edges);
}

Graph graph_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::InvalidInput, "edge must be [u, v]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, edges);
    } catch (const Json::exception& ex) {
        throw Error(ErrorKind::InvalidInput, std::string("bad graph JSON: ") + ex.what());
    }
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        auto pos = text.find_first_not_of(" \t\r\n");
        format = (pos != std::string::npos && text[pos] == '{') ? GraphFormat::Json : GraphFormat::EdgeList;
    }
    if (format == GraphFormat::Json) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& ex) {
            throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json structure_json(const Graph& g) {
    const bool thin = is_thin(g);
    Json out;
    out["thin"] = thin;
    out["backbone"] = thin ? Json(backbone(g).vertices) : Json::array();
    Json classes = Json::array();
    if (g.vertex_count() > 0)
        for (const auto& c : quotient(g).class_members) classes.push_back(c);
    out["s_classes"] = classes;
    return out;
}

Json skeleton_json(const ColoredSkeleton& s) {
    Json edges = Json::array();
    for (const auto& [e, c] : s.color_of) edges.push_back({e.first, e.second, c});
    Json stages;
    for (Stage st : {Stage::S1Local, Stage::Completion, Stage::N2Sweep}) {
        Json list = Json::array();
        for (const auto& [e, x] : s.raw.stage_of)
            if (x == st) list.push_back({e.first, e.second});
        stages[stage_name(st)] = list;
    }
    Json out;
    out["cartesian_edges"] = edges;
    out["n_colors"] = s.n_colors;
    out["stages"] = stages;
    out["max_local_factors"] = s.max_local_factors();
    out["quotient_caveat"] = s.quotient_caveat;
    out["diagnostics"] = s.diagnostics;
    return out;
}

namespace {

Json factor_list(const std::vector<Graph>& factors, const std::vector<VertexSet>& fibers) {
    Json out = Json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Json f = graph_to_json(factors[i]);
        if (i < fibers.size()) f["fiber"] = fibers[i];
        out.push_back(f);
    }
    return out;
}

}  // namespace

Json report_json(const RecognitionReport& r) {
    Json out;
    out["in_upsilon"] = r.in_upsilon;
    out["max_local_factors"] = r.max_local_factors;
    out["n_factors"] = r.extracted_factors.size();
    out["factors"] = factor_list(r.extracted_factors, r.fibers);
    out["reconstruction_ok"] = r.reconstruction_ok;
    out["quotient_caveat"] = r.coloring.quotient_caveat;
    out["diagnostics"] = r.diagnostics;
    return out;
}

Json fast_json(const FastFactorization& f) {
    Json out;
    out["anchor"] = f.anchor;
    out["prime_count"] = f.prime_count;
    out["factors"] = factor_list(f.factors, f.fibers);
    return out;
}

Json instance_json(const ProductInstance& inst) {
    Json out = graph_to_json(inst.graph);
    Json factors = Json::array();
    for (const auto& f : inst.ground_truth_factors) factors.push_back(graph_to_json(f));
    out["factors"] = factors;
    out["coords"] = inst.ground_truth_coords.coords;
    out["seed"] = inst.seed;
    out["thin"] = inst.thin;
    return out;
}

std::string skeleton_dot(const Graph& g, const ColoredSkeleton& s) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
    std::ostringstream out;
    out << "graph skeleton {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) {
        auto it = s.color_of.find({u, v});
        if (it == s.color_of.end()) {
            out << "  " << u << " -- " << v << " [style=dotted, color=gray];\n";
        } else {
            out << "  " << u << " -- " << v << " [color=" << palette[it->second % 8] << ", penwidth=2, label=\"c"
                << it->second << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace spfd
