#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spfd/graph.hpp"
#include "spfd/oracle.hpp"
#include "spfd/recognizer.hpp"
#include "spfd/s_structure.hpp"
#include "spfd/skeleton.hpp"

namespace spfd {

using Json = nlohmann::ordered_json;

enum class GraphFormat { Auto, EdgeList, Json };

// "n m" followed by m lines "u v". Throws InvalidInput on malformed text.
Graph read_edge_list(std::istream& in);
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);
std::string write_edge_list(const Graph& g);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json structure_json(const Graph& g);  // {"thin", "backbone", "s_classes"}
Json skeleton_json(const ColoredSkeleton& s);
Json report_json(const RecognitionReport& r);
Json fast_json(const FastFactorization& f);
Json instance_json(const ProductInstance& inst);

// DOT rendering; Cartesian edges carry label "c<color>", the rest are dotted.
std::string skeleton_dot(const Graph& g, const ColoredSkeleton& s);

}  // namespace spfd
