#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace proyden::io {

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

double as_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

double optional_real(const json& obj, const char* key, const std::string& path, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_real(*it, path + "." + key);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not a finite number");
  }
}

std::int64_t parse_integer(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not an integer");
  }
}

json ids(const std::vector<Vertex>& vs, const WeightedGraph& g) {
  json out = json::array();
  for (Vertex x : vs) out.push_back(g.id(x));
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + location(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": malformed JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

GraphSpec graph_spec_from_json(const json& j) {
  GraphSpec spec;
  const json& vertices = field(j, "vertices", "$");
  if (!vertices.is_array()) fail("$.vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    GraphSpec::VertexEntry entry;
    entry.id = as_integer(field(v, "id", path), path + ".id");
    entry.measure = optional_real(v, "measure", path, 1.0);
    spec.vertices.push_back(entry);
  }
  const json& edges = field(j, "edges", "$");
  if (!edges.is_array()) fail("$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    GraphSpec::EdgeEntry entry;
    entry.u = as_integer(field(e, "u", path), path + ".u");
    entry.v = as_integer(field(e, "v", path), path + ".v");
    entry.conductance = optional_real(e, "conductance", path, 1.0);
    entry.length = optional_real(e, "length", path, 1.0);
    spec.edges.push_back(entry);
  }
  return spec;
}

json graph_to_json(const WeightedGraph& g) {
  const GraphSpec spec = to_spec(g);
  json out;
  out["vertices"] = json::array();
  for (const auto& v : spec.vertices) out["vertices"].push_back({{"id", v.id}, {"measure", v.measure}});
  out["edges"] = json::array();
  for (const auto& e : spec.edges)
    out["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"conductance", e.conductance}, {"length", e.length}});
  return out;
}

WeightedGraph load_graph(const std::string& path) {
  return build_graph(graph_spec_from_json(read_json_file(path)));
}

GraphFunction function_from_json(const json& j, std::size_t n) {
  const json* arr = &j;
  std::string path = "$";
  if (j.is_object()) {
    arr = &field(j, "values", "$");
    path = "$.values";
  }
  if (!arr->is_array()) fail(path, "expected an array of numbers");
  if (arr->size() != n)
    fail(path, "expected " + std::to_string(n) + " values, got " + std::to_string(arr->size()));
  GraphFunction out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = as_real((*arr)[i], path + "[" + std::to_string(i) + "]");
  return out;
}

GraphFunction load_function(const std::string& path, std::size_t n) {
  try {
    return function_from_json(read_json_file(path), n);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + what);
  }
}

std::vector<std::pair<std::int64_t, double>> parse_pins(const std::string& text) {
  std::vector<std::pair<std::int64_t, double>> out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("pin '" + item + "': expected id=value");
    out.emplace_back(parse_integer(item.substr(0, eq), "pin id"),
                     parse_real(item.substr(eq + 1), "pin value"));
  }
  if (out.empty()) throw ParseError("no pins given");
  return out;
}

std::vector<std::pair<std::string, double>> parse_named_values(const std::string& text) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("'" + item + "': expected name=value");
    out.emplace_back(item.substr(0, eq), parse_real(item.substr(eq + 1), item.substr(0, eq)));
  }
  return out;
}

std::vector<std::int64_t> parse_id_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_integer(item, "list entry"));
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item, "list entry"));
  return out;
}

json to_json(const SolverOptions& o) {
  return {{"tol_update", o.tol_update},
          {"tol_residual", o.tol_residual},
          {"max_sweeps", o.max_sweeps},
          {"subspace_correction", o.subspace_correction}};
}

json to_json(const SolveReport& r) {
  return {{"sweeps", r.sweeps},         {"max_update", r.max_update},
          {"residual", r.residual},     {"energy", r.energy},
          {"converged", r.converged},   {"options", to_json(r.options)},
          {"free_vertices", r.free_vertices}, {"warnings", r.warnings}};
}

json to_json(const CapacityResult& r) {
  return {{"value", r.value},
          {"iterations", r.report.sweeps},
          {"residual", r.report.residual},
          {"potential", r.potential},
          {"report", to_json(r.report)}};
}

json to_json(const ModulusResult& r) {
  return {{"route", r.route == ModulusRoute::dual ? "dual" : "direct"},
          {"value", r.value},
          {"density", r.density},
          {"paths", r.paths},
          {"slack", r.slack},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

json to_json(const SobolevResult& r) {
  return {{"value", r.value},           {"constant", r.constant},
          {"minimizer", r.minimizer},   {"residual", r.residual},
          {"per_start", r.per_start},   {"iterations", r.iterations},
          {"converged", r.converged},   {"bound", "upper"}};
}

json to_json(const ParabolicityThresholds& t) {
  return {{"slope", t.slope}, {"eps_par", t.eps_par}, {"delta", t.delta}, {"window", t.window}};
}

json to_json(const ParabolicityResult& r) {
  json reports = json::array();
  for (const auto& rep : r.reports)
    reports.push_back({{"sweeps", rep.sweeps}, {"residual", rep.residual}, {"converged", rep.converged}});
  return {{"sizes", r.sizes},
          {"sequence", r.capacities},
          {"slope", r.slope},
          {"relative_change", r.relative_change},
          {"nonincreasing", r.nonincreasing},
          {"classification", to_string(r.classification)},
          {"thresholds", to_json(r.thresholds)},
          {"reports", reports}};
}

json to_json(const VertexSet& s, const WeightedGraph& g) {
  return ids(std::vector<Vertex>(s.begin(), s.end()), g);
}

json to_json(const ExhaustionSolveResult& r, const WeightedGraph& g) {
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w, g));
  return {{"levels", r.levels},
          {"reports", reports},
          {"witnesses", witnesses},
          {"deviations", r.deviations},
          {"selected", r.selected},
          {"limit", r.limit},
          {"tolerance", r.tolerance},
          {"cauchy", r.cauchy},
          {"tail_cauchy", r.tail_cauchy},
          {"energies", r.energies},
          {"data_energy", r.data_energy},
          {"energy_bounded", r.energy_bounded},
          {"range_bounded", r.range_bounded}};
}

json to_json(const RoydenDecomposition& r, const WeightedGraph& g) {
  json by_end = json::object();
  for (const auto& m : r.outer_max_by_end) by_end[m.end] = m.value;
  return {{"f", r.f},
          {"harmonic", r.harmonic},
          {"potential", r.potential},
          {"interior", to_json(r.interior, g)},
          {"interior_residual", r.interior_residual},
          {"outer_sphere", to_json(r.outer_sphere, g)},
          {"outer_max", r.outer_max},
          {"outer_max_by_end", by_end},
          {"potential_norm", r.potential_norm},
          {"exhaustion", to_json(r.exhaustion, g)}};
}

json to_json(const AtInfinityResult& r, const WeightedGraph& g) {
  json traces = json::array();
  for (const auto& t : r.traces) {
    traces.push_back({{"end", t.end},
                      {"data", t.data},
                      {"ray", ids(t.ray, g)},
                      {"depth", t.depth},
                      {"deviation", t.deviation},
                      {"free", t.free},
                      {"deepest_free_deviation", t.deepest_free_deviation}});
  }
  return {{"solution", r.solution},
          {"extension", r.extension},
          {"extension_report", to_json(r.extension_report)},
          {"exhaustion", to_json(r.exhaustion, g)},
          {"traces", traces}};
}

json to_json(const ProbeResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"ends", {w.first, w.second}},
                         {"solution", w.solution},
                         {"oscillation", w.oscillation},
                         {"nonconstant", w.nonconstant}});
  return {{"kind", to_string(r.kind)},
          {"distinguished", r.distinguished},
          {"parabolicity", to_json(r.parabolicity)},
          {"truncation_size", r.truncation_size},
          {"witnesses", witnesses}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace proyden::io
