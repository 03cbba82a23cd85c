// spfd: command-line front end for the strong product factorization pipeline.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spfd/fiber_coloring.hpp"
#include "spfd/io.hpp"
#include "spfd/oracle.hpp"
#include "spfd/recognizer.hpp"
#include "spfd/s_structure.hpp"
#include "spfd/skeleton.hpp"

using namespace spfd;

namespace {

struct RunConfig {
    std::string input, output, dot, format = "auto", factors = "3,3", fixture, ks = "50,100,200,400,800";
    int size_cap = kDefaultSizeCap;
    int n2_size_cap = kDefaultSizeCap;
    long long anchor = -1;
    unsigned long long seed = 0;
    double edge_prob = 0.5;
    bool use_quotient = false;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidInput, "not an integer list: " + s);
        }
    }
    if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty integer list");
    return out;
}

Graph load(const RunConfig& cfg) {
    std::string text;
    if (cfg.input.empty() || cfg.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(cfg.input);
        if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + cfg.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    GraphFormat f = cfg.format == "json" ? GraphFormat::Json
                    : cfg.format == "edgelist" ? GraphFormat::EdgeList
                                               : GraphFormat::Auto;
    Graph g = parse_graph(text, f);
    if (cfg.use_quotient) g = quotient(g).quotient;
    return g;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.output);
    out << text;
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "input graph is not connected");
}

int cmd_factor(const RunConfig& cfg) {
    Graph g = load(cfg);
    require_connected(g);
    if (cfg.anchor < 0) {
        emit(cfg, fast_json(pfd_fast(g, cfg.size_cap)));
        return 0;
    }
    const VertexSet b = backbone(g).vertices;
    Vertex x = static_cast<Vertex>(cfg.anchor);
    if (!g.valid(x) || !contains(b, x))
        throw Error(ErrorKind::InvalidInput, "anchor " + std::to_string(cfg.anchor) + " is not a backbone vertex");
    NeighborhoodCache cache(g, cfg.size_cap);
    PartialProductColoring c = color_fibers_from(g, b, x, cache);
    Json edges = Json::array();
    for (const auto& [e, col] : c.colored_edges) edges.push_back({e.first, e.second, col});
    Json out;
    out["anchor"] = x;
    out["prime_count"] = c.palette.size();
    out["colored_edges"] = edges;
    emit(cfg, out);
    return 0;
}

int cmd_skeleton(const RunConfig& cfg) {
    Graph g = load(cfg);
    ColoredSkeleton s = build_skeleton(g, {cfg.size_cap, cfg.n2_size_cap});
    emit(cfg, skeleton_json(s));
    if (!cfg.dot.empty()) {
        std::ofstream dot(cfg.dot);
        if (!dot) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.dot);
        dot << skeleton_dot(g, s);
    }
    return 0;
}

int cmd_backbone(const RunConfig& cfg) {
    Graph g = load(cfg);
    require_connected(g);
    if (!is_thin(g)) throw Error(ErrorKind::NotThin, "graph is not thin; rerun with --quotient");
    emit(cfg, structure_json(g));
    return 0;
}

int cmd_check_thin(const RunConfig& cfg) {
    emit(cfg, structure_json(load(cfg)));
    return 0;
}

int cmd_recognize(const RunConfig& cfg) {
    Graph g = load(cfg);
    RecognitionReport r = recognize(g, {cfg.size_cap, cfg.n2_size_cap});
    emit(cfg, report_json(r));
    return r.in_upsilon ? 0 : 1;
}

int cmd_generate(const RunConfig& cfg) {
    if (cfg.fixture == "twisted") {
        emit(cfg, graph_to_json(gen_twisted_instance()));
        return 0;
    }
    if (cfg.fixture == "staging") {
        emit(cfg, instance_json(gen_staging_instance().instance));
        return 0;
    }
    if (!cfg.fixture.empty()) throw Error(ErrorKind::InvalidInput, "unknown fixture " + cfg.fixture);
    emit(cfg, instance_json(gen_product_instance(parse_int_list(cfg.factors), cfg.seed, cfg.edge_prob)));
    return 0;
}

int cmd_bench(const RunConfig& cfg) {
    std::ostringstream csv;
    csv << "k,vertices,millis\n";
    for (int k : parse_int_list(cfg.ks)) {
        if (k < 3) throw Error(ErrorKind::InvalidInput, "bench needs k >= 3");
        Graph g = strong_product({path_graph(k), path_graph(3)}).graph;
        auto t0 = std::chrono::steady_clock::now();
        FastFactorization f = pfd_fast(g, cfg.size_cap);
        auto t1 = std::chrono::steady_clock::now();
        if (f.prime_count != 2) throw Error(ErrorKind::Pipeline, "bench instance did not split into two factors");
        csv << k << ',' << g.vertex_count() << ','
            << std::chrono::duration<double, std::milli>(t1 - t0).count() << '\n';
    }
    emit(cfg, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local prime factor decomposition of strong product graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool reads_graph) {
        if (reads_graph) {
            sub->add_option("--input,-i", cfg.input, "graph file (edge list or JSON); stdin when omitted");
            sub->add_option("--format", cfg.format, "input format")
                ->check(CLI::IsMember({"auto", "edgelist", "json"}));
            sub->add_flag("--quotient", cfg.use_quotient, "replace the input by its quotient G/S first");
        }
        sub->add_option("--output,-o", cfg.output, "output file; stdout when omitted");
        sub->add_option("--size-cap", cfg.size_cap, "largest neighborhood quotient handed to the factorizer")
            ->check(CLI::Range(4, 4096));
    };

    auto* factor = app.add_subcommand("factor", "factors through one backbone vertex");
    common(factor, true);
    factor->add_option("--anchor", cfg.anchor, "backbone vertex to color fibers from");

    auto* skeleton = app.add_subcommand("skeleton", "colored Cartesian skeleton");
    common(skeleton, true);
    skeleton->add_option("--n2-size-cap", cfg.n2_size_cap, "size cap for 2-neighborhood quotients")
        ->check(CLI::Range(4, 4096));
    skeleton->add_option("--dot", cfg.dot, "also write a DOT rendering to this file");

    auto* bb = app.add_subcommand("backbone", "backbone of a thin graph");
    common(bb, true);
    auto* thin = app.add_subcommand("check-thin", "thinness and S-classes");
    common(thin, true);

    auto* rec = app.add_subcommand("recognize", "decide local unrefinement; exit 1 when rejected");
    common(rec, true);
    rec->add_option("--n2-size-cap", cfg.n2_size_cap, "size cap for 2-neighborhood quotients")
        ->check(CLI::Range(4, 4096));

    auto* gen = app.add_subcommand("generate", "random thin product instance with ground truth");
    common(gen, false);
    gen->add_option("--factors", cfg.factors, "comma-separated factor sizes");
    gen->add_option("--seed", cfg.seed, "PRNG seed")->required();
    gen->add_option("--edge-prob", cfg.edge_prob, "edge probability for factor graphs")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--fixture", cfg.fixture, "emit a frozen fixture instead")
        ->check(CLI::IsMember({"twisted", "staging"}));

    auto* bench = app.add_subcommand("bench", "time the single-anchor path on P_k x P3");
    common(bench, false);
    bench->add_option("--ks", cfg.ks, "comma-separated path lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*factor) return cmd_factor(cfg);
        if (*skeleton) return cmd_skeleton(cfg);
        if (*bb) return cmd_backbone(cfg);
        if (*thin) return cmd_check_thin(cfg);
        if (*rec) return cmd_recognize(cfg);
        if (*gen) return cmd_generate(cfg);
        if (*bench) return cmd_bench(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Pipeline ? 1 : 2;
    }
    return 2;
}
