#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace proyden::acceptance {

/// How a row compares measured against expected.
enum class Relation {
  relative,  // |m - e| / |e| <= tol
  absolute,  // |m - e| <= tol
  at_most,   // m <= e + tol
  equal,     // m == e exactly
};

struct Row {
  std::string check;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::absolute;
  bool pass = false;
  std::string note;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Row> rows;

  bool pass() const;
  void add(std::string check, double measured, double expected, double tolerance,
           Relation relation, std::string note = {});
};

/// capacities, modulus, solver, gradient, parabolicity, infinity, royden,
/// stability, calculus, sobolev, determinism, all.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument listing the known suites for an unknown name.
std::vector<Criterion> run_suite(const std::string& name, std::uint64_t seed);

nlohmann::json to_json(const std::vector<Criterion>& criteria);
std::string to_string(Relation r);

/// One summary line per criterion followed by its rows.
std::string format_table(const std::vector<Criterion>& criteria);

}  // namespace proyden::acceptance
