#pragma once

#include <map>
#include <string>
#include <vector>

#include "spfd/graph.hpp"
#include "spfd/product.hpp"
#include "spfd/skeleton.hpp"

namespace spfd {

// Candidate factors read off a product coloring: for each color, the fiber of that
// color through vertex 0, and coordinates obtained by matching every vertex to the
// fiber vertex it shares a component with once that color is removed.
struct Extraction {
    std::vector<VertexSet> fibers;
    std::vector<Graph> factors;  // fiber i relabelled by position, color-i edges only
    Coordinatization coords;
    bool bijective = false;
    std::string diagnostic;
};

Extraction extract_factors(const Graph& g, const std::map<Edge, int>& color_of, int n_colors);

// Edge-exact check that g equals the strong product of `factors` under the
// coordinates implied by the coloring.
bool verify_product(const std::vector<Graph>& factors, const std::map<Edge, int>& color_of, int n_colors,
                    const Graph& g, std::string* why = nullptr);

struct RecognitionReport {
    bool in_upsilon = false;
    int max_local_factors = 0;
    std::vector<Graph> extracted_factors;
    std::vector<VertexSet> fibers;
    ColoredSkeleton coloring;
    bool reconstruction_ok = false;
    std::vector<std::string> diagnostics;
};

// Throws Disconnected / NotThin for unsuitable input; pipeline failures end up in
// the diagnostics with in_upsilon = false.
RecognitionReport recognize(const Graph& g, const SkeletonOptions& opts = {});

struct FastFactorization {
    Vertex anchor = 0;
    std::vector<Graph> factors;  // ordered by vertex count, then discovery
    std::vector<VertexSet> fibers;
    int prime_count = 0;
};

// Single-anchor factorization for graphs assumed locally unrefined: colors the
// fibers through the smallest backbone vertex and reads each one off as a factor.
FastFactorization pfd_fast(const Graph& g, int size_cap = kDefaultSizeCap);

}  // namespace spfd
