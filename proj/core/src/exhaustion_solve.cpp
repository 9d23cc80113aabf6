#include "proyden/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "proyden/calculus.hpp"

namespace proyden {

namespace {

constexpr double kSlack = 1e-12;

std::vector<double> witness_deviation(const std::vector<VertexSet>& witnesses,
                                      const GraphFunction& a, const GraphFunction& b) {
  std::vector<double> out(witnesses.size(), 0.0);
  for (std::size_t j = 0; j < witnesses.size(); ++j)
    for (Vertex x : witnesses[j]) out[j] = std::max(out[j], std::abs(a[x] - b[x]));
  return out;
}

double largest(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

bool dominates(const std::vector<double>& earlier, const std::vector<double>& later) {
  for (std::size_t j = 0; j < earlier.size(); ++j)
    if (later[j] > earlier[j] + kSlack) return false;
  return true;
}

}  // namespace

ExhaustionSolveResult exhaustion_solve(const WeightedGraph& g, const GraphFunction& f,
                                       const Exhaustion& ex, double p,
                                       const ExhaustionOptions& options) {
  require_exponent(p);
  const std::size_t n = g.num_vertices();
  if (f.size() != n) throw InvalidArgument("exhaustion_solve: f has the wrong length");
  for (double v : f)
    if (!std::isfinite(v)) throw InvalidArgument("exhaustion_solve: f is not finite");
  if (ex.levels.empty()) throw InvalidArgument("exhaustion_solve: empty exhaustion");
  if (!(options.cauchy_tolerance > 0.0))
    throw InvalidArgument("exhaustion_solve: Cauchy tolerance must be positive");

  ExhaustionSolveResult out;
  out.witnesses = options.witnesses ? *options.witnesses : ex.levels;
  for (const auto& w : out.witnesses)
    for (Vertex x : w)
      if (x >= n) throw InvalidArgument("exhaustion_solve: witness vertex out of range");

  const auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
  const double lo = *lo_it, hi = *hi_it;
  out.tolerance = options.cauchy_tolerance * (hi > lo ? hi - lo : 1.0);
  out.data_energy = p_energy(g, f, p);

  GraphFunction previous = f;
  for (std::size_t k = 0; k < ex.levels.size(); ++k) {
    const VertexSet& level = ex.levels[k];
    if (level.size() >= n)
      throw SolveError("exhaustion_solve: level " + std::to_string(k) +
                       " covers the whole graph, leaving nothing pinned");
    DirichletProblem problem;
    problem.free = level.mask(n);
    problem.data = f;
    problem.p = p;
    problem.options = options.solver;
    problem.initial = previous;
    DirichletSolution sol;
    try {
      sol = solve_dirichlet(g, problem);
    } catch (const Error& e) {
      throw SolveError("exhaustion_solve: level " + std::to_string(k) + ": " + e.what());
    }
    if (!sol.report.converged)
      throw SolveError("exhaustion_solve: level " + std::to_string(k) + " did not converge");

    const double energy = p_energy(g, sol.values, p);
    if (energy > out.data_energy * (1.0 + 1e-9) + kSlack) out.energy_bounded = false;
    for (double v : sol.values)
      if (v < lo - kSlack || v > hi + kSlack) out.range_bounded = false;
    out.energies.push_back(energy);
    out.deviations.push_back(k == 0 ? std::vector<double>(out.witnesses.size(), 0.0)
                                    : witness_deviation(out.witnesses, sol.values, previous));
    previous = sol.values;
    out.levels.push_back(std::move(sol.values));
    out.reports.push_back(std::move(sol.report));
  }

  // Tail: longest run of trailing levels whose consecutive deviations are
  // within tolerance and nonincreasing on every witness.
  const std::size_t last = out.levels.size() - 1;
  std::size_t start = last;
  while (start > 0) {
    const auto& dev = out.deviations[start];
    if (largest(dev) > out.tolerance) break;
    if (start < last && !dominates(dev, out.deviations[start + 1])) break;
    --start;
  }
  if (start < last) {
    out.tail_cauchy = true;
    for (std::size_t k = start; k <= last; ++k) out.selected.push_back(k);
  } else {
    // Diagonal extraction, walking back from the deepest level: keep a level
    // when it is within tolerance of the earliest kept one and its deviation
    // is at least the next deviation on every witness.
    std::vector<std::size_t> picked{last};
    std::vector<double> later(out.witnesses.size(), 0.0);
    for (std::size_t k = last; k-- > 0;) {
      const auto dev = witness_deviation(out.witnesses, out.levels[k], out.levels[picked.back()]);
      if (largest(dev) > out.tolerance) continue;
      if (picked.size() > 1 && !dominates(dev, later)) continue;
      picked.push_back(k);
      later = dev;
    }
    out.selected.assign(picked.rbegin(), picked.rend());
  }
  out.cauchy = out.selected.size() >= 2;
  out.limit = out.levels[out.selected.back()];
  return out;
}

}  // namespace proyden
