#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spfd/graph.hpp"

namespace spfd {

inline constexpr int kIsoSizeCap = 64;

struct CanonicalLabeling {
    std::vector<Vertex> position;  // vertex -> canonical position
    std::string form;              // equal for two graphs iff they are isomorphic
};

// Colour refinement plus individualisation, keeping the lexicographically
// smallest adjacency encoding over all leaves. Throws SizeCap above size_cap.
CanonicalLabeling canonical_labeling(const Graph& g, int size_cap = kIsoSizeCap);
std::string canonical_form(const Graph& g, int size_cap = kIsoSizeCap);

bool is_isomorphic(const Graph& g, const Graph& h, int size_cap = kIsoSizeCap);
// Bijection V(g) -> V(h) preserving edges, if any.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                    int size_cap = kIsoSizeCap);

}  // namespace spfd
