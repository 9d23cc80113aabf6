#pragma once

#include "proyden/dirichlet.hpp"
#include "proyden/graph.hpp"

namespace proyden {

struct CapacityResult {
  double value = 0.0;
  /// Extremal potential: 1 on the source set, 0 on the sink set.
  GraphFunction potential;
  SolveReport report;
};

/// Condenser capacity: min E_p(u) subject to u = 1 on `source`, u = 0 on `sink`.
/// Throws InvalidArgument if either set is empty or they intersect.
CapacityResult capacity(const WeightedGraph& g, const VertexSet& source, const VertexSet& sink,
                        double p, const SolverOptions& options = {});

}  // namespace proyden
