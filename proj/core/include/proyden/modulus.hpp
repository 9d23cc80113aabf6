#pragma once

#include <cstddef>
#include <vector>

#include "proyden/dirichlet.hpp"
#include "proyden/graph.hpp"

namespace proyden {

/// Raised when the direct route would need more simple paths than allowed.
class PathCapExceeded : public Error {
 public:
  explicit PathCapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

enum class ModulusRoute { dual, direct };

struct ModulusOptions {
  std::size_t path_cap = 100'000;
  /// Stop when (upper - lower) / upper falls below this.
  double gap_tolerance = 1e-9;
  std::size_t max_sweeps = 200'000;
  SolverOptions solver{};
};

/// p-modulus of the family of A-B paths.
///
/// A density rho is admissible when sum_{e in path} length_e rho_e >= 1 for
/// every path; its mass is sum_e conductance_e (length_e rho_e)^p. With this
/// mass the modulus coincides with the condenser capacity.
struct ModulusResult {
  ModulusRoute route = ModulusRoute::dual;
  double value = 0.0;
  EdgeField density;
  /// Enumerated paths as edge lists (empty when the dual route skipped them).
  std::vector<std::vector<EdgeIndex>> paths;
  /// sum_{e in path} length_e rho_e - 1, per enumerated path.
  std::vector<double> slack;
  /// Certified bracket of the direct route; equals value for the dual route.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Simple paths from A to B whose interior avoids A and B, in deterministic
/// depth-first order. Throws PathCapExceeded beyond `cap` paths.
std::vector<std::vector<EdgeIndex>> connecting_paths(const WeightedGraph& g, const VertexSet& a,
                                                     const VertexSet& b, std::size_t cap);

/// Density read off the capacity potential: rho_e = |du_e| / length_e.
ModulusResult modulus_dual(const WeightedGraph& g, const VertexSet& a, const VertexSet& b,
                           double p, const ModulusOptions& options = {});

/// Convex program over the enumerated path family, solved by projected
/// coordinate ascent on its Lagrange dual (multipliers >= 0, one per path).
ModulusResult modulus_direct(const WeightedGraph& g, const VertexSet& a, const VertexSet& b,
                             double p, const ModulusOptions& options = {});

ModulusResult modulus(const WeightedGraph& g, const VertexSet& a, const VertexSet& b, double p,
                      ModulusRoute route, const ModulusOptions& options = {});

}  // namespace proyden
