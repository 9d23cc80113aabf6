#include "proyden/capacity.hpp"

#include "proyden/calculus.hpp"

namespace proyden {

CapacityResult capacity(const WeightedGraph& g, const VertexSet& source, const VertexSet& sink,
                        double p, const SolverOptions& options) {
  require_exponent(p);
  if (source.empty() || sink.empty()) throw InvalidArgument("capacity: source and sink must be nonempty");
  if (source.intersects(sink)) throw InvalidArgument("capacity: source and sink intersect");
  const std::size_t n = g.num_vertices();

  DirichletProblem problem;
  problem.free.assign(n, true);
  problem.data.assign(n, 0.0);
  problem.p = p;
  problem.options = options;
  for (Vertex x : source) {
    if (x >= n) throw InvalidArgument("capacity: source vertex out of range");
    problem.free[x] = false;
    problem.data[x] = 1.0;
  }
  for (Vertex x : sink) {
    if (x >= n) throw InvalidArgument("capacity: sink vertex out of range");
    problem.free[x] = false;
  }

  auto solution = solve_dirichlet(g, problem);
  CapacityResult out;
  out.value = p_energy(g, solution.values, p);
  out.potential = std::move(solution.values);
  out.report = std::move(solution.report);
  return out;
}

}  // namespace proyden
