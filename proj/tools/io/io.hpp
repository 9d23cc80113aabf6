#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "proyden/boundary.hpp"
#include "proyden/capacity.hpp"
#include "proyden/dirichlet.hpp"
#include "proyden/graph.hpp"
#include "proyden/modulus.hpp"
#include "proyden/parabolicity.hpp"
#include "proyden/sobolev.hpp"

namespace proyden::io {

using nlohmann::json;

/// Malformed input; the message starts with a line:column or a field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses text, reporting syntax errors as "line L, column C: ...".
json parse_json(const std::string& text, const std::string& source = "<input>");
json read_json_file(const std::string& path);

GraphSpec graph_spec_from_json(const json& j);
json graph_to_json(const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);

/// Accepts an array aligned to vertex order, or {"values": [...]}.
GraphFunction function_from_json(const json& j, std::size_t n);
GraphFunction load_function(const std::string& path, std::size_t n);

/// "0=0,5=1" -> (id, value) pairs.
std::vector<std::pair<std::int64_t, double>> parse_pins(const std::string& text);
/// "left=0,right=1" -> (name, value) pairs.
std::vector<std::pair<std::string, double>> parse_named_values(const std::string& text);
/// "1,2,3" -> integers.
std::vector<std::int64_t> parse_id_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

json to_json(const SolverOptions& o);
json to_json(const SolveReport& r);
json to_json(const CapacityResult& r);
json to_json(const ModulusResult& r);
json to_json(const SobolevResult& r);
json to_json(const ParabolicityThresholds& t);
json to_json(const ParabolicityResult& r);
json to_json(const ExhaustionSolveResult& r, const WeightedGraph& g);
json to_json(const RoydenDecomposition& r, const WeightedGraph& g);
json to_json(const AtInfinityResult& r, const WeightedGraph& g);
json to_json(const ProbeResult& r);
json to_json(const VertexSet& s, const WeightedGraph& g);

/// Deterministic text form: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace proyden::io
