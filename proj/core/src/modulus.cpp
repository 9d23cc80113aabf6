#include "proyden/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "proyden/calculus.hpp"
#include "proyden/capacity.hpp"

namespace proyden {

PathCapExceeded::PathCapExceeded(std::size_t cap)
    : Error("path enumeration exceeds the cap of " + std::to_string(cap) +
            " simple paths; use the dual route or raise the cap"),
      cap_(cap) {}

namespace {

void check_sets(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("modulus: A and B must be nonempty");
  if (a.intersects(b)) throw InvalidArgument("modulus: A and B intersect");
  for (Vertex x : a)
    if (x >= g.num_vertices()) throw InvalidArgument("modulus: vertex of A out of range");
  for (Vertex x : b)
    if (x >= g.num_vertices()) throw InvalidArgument("modulus: vertex of B out of range");
}

std::vector<double> path_slack(const WeightedGraph& g,
                               const std::vector<std::vector<EdgeIndex>>& paths,
                               const EdgeField& rho) {
  std::vector<double> slack;
  slack.reserve(paths.size());
  for (const auto& path : paths) {
    double length = 0.0;
    for (EdgeIndex e : path) length += g.edge(e).length * rho[e];
    slack.push_back(length - 1.0);
  }
  return slack;
}

}  // namespace

std::vector<std::vector<EdgeIndex>> connecting_paths(const WeightedGraph& g, const VertexSet& a,
                                                     const VertexSet& b, std::size_t cap) {
  check_sets(g, a, b);
  const std::size_t n = g.num_vertices();
  const auto in_a = a.mask(n);
  const auto in_b = b.mask(n);
  std::vector<std::vector<EdgeIndex>> paths;
  std::vector<bool> on_path(n, false);
  std::vector<EdgeIndex> edges;

  // Iterative DFS keeps deep paths off the call stack.
  struct Frame {
    Vertex x;
    std::size_t next;
  };
  for (Vertex start : a) {
    std::vector<Frame> stack{{start, 0}};
    on_path[start] = true;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nbrs = g.neighbors(top.x);
      if (top.next == nbrs.size()) {
        on_path[top.x] = false;
        stack.pop_back();
        if (!edges.empty()) edges.pop_back();
        continue;
      }
      const Neighbor nb = nbrs[top.next++];
      if (on_path[nb.vertex] || in_a[nb.vertex]) continue;
      if (in_b[nb.vertex]) {
        if (paths.size() == cap) throw PathCapExceeded(cap);
        paths.push_back(edges);
        paths.back().push_back(nb.edge);
        continue;
      }
      on_path[nb.vertex] = true;
      edges.push_back(nb.edge);
      stack.push_back({nb.vertex, 0});
    }
  }
  return paths;
}

ModulusResult modulus_dual(const WeightedGraph& g, const VertexSet& a, const VertexSet& b,
                           double p, const ModulusOptions& options) {
  check_sets(g, a, b);
  const auto cap = capacity(g, a, b, p, options.solver);
  ModulusResult out;
  out.route = ModulusRoute::dual;
  out.value = cap.value;
  out.lower_bound = cap.value;
  out.upper_bound = cap.value;
  out.density = grad(g, cap.potential);
  out.iterations = cap.report.sweeps;
  out.converged = cap.report.converged;
  try {
    out.paths = connecting_paths(g, a, b, options.path_cap);
    out.slack = path_slack(g, out.paths, out.density);
  } catch (const PathCapExceeded&) {
    out.paths.clear();
  }
  return out;
}

ModulusResult modulus_direct(const WeightedGraph& g, const VertexSet& a, const VertexSet& b,
                             double p, const ModulusOptions& options) {
  require_exponent(p);
  auto paths = connecting_paths(g, a, b, options.path_cap);
  const std::size_t m = g.num_edges();
  const double inv = 1.0 / (p - 1.0);

  // Work in sigma_e = length_e rho_e: minimize sum c_e sigma_e^p subject to
  // sum_{e in path} sigma_e >= 1. For multipliers lambda >= 0 the minimizer of
  // the Lagrangian is sigma_e = (eta_e / (p c_e))^(1/(p-1)), eta_e the sum of
  // multipliers of paths through e, and the dual value is
  // sum lambda - (p-1) sum c_e (eta_e / (p c_e))^q.
  std::vector<double> lambda(paths.size(), 0.0);
  std::vector<double> eta(m, 0.0);
  auto sigma_of = [&](EdgeIndex e, double load) {
    return load <= 0.0 ? 0.0 : std::pow(load / (p * g.edge(e).conductance), inv);
  };

  ModulusResult out;
  out.route = ModulusRoute::direct;
  EdgeField sigma(m, 0.0);
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  std::size_t sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const auto& path = paths[k];
      for (EdgeIndex e : path) eta[e] = std::max(0.0, eta[e] - lambda[k]);
      auto load = [&](double t) {
        double s = 0.0;
        for (EdgeIndex e : path) s += sigma_of(e, eta[e] + t);
        return s - 1.0;
      };
      double t = 0.0;
      if (load(0.0) < 0.0) {
        double lo = 0.0, hi = 1.0;
        while (load(hi) < 0.0) hi *= 2.0;
        for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          (load(mid) < 0.0 ? lo : hi) = mid;
        }
        t = hi;
      }
      lambda[k] = t;
      for (EdgeIndex e : path) eta[e] += t;
    }

    // Rebuild loads from scratch to keep rounding from accumulating.
    std::fill(eta.begin(), eta.end(), 0.0);
    for (std::size_t k = 0; k < paths.size(); ++k)
      for (EdgeIndex e : paths[k]) eta[e] += lambda[k];

    double dual = 0.0;
    for (double l : lambda) dual += l;
    for (EdgeIndex e = 0; e < m; ++e) {
      sigma[e] = sigma_of(e, eta[e]);
      dual -= (p - 1.0) * g.edge(e).conductance * std::pow(sigma[e], p);
    }
    double min_load = std::numeric_limits<double>::infinity();
    for (const auto& path : paths) {
      double s = 0.0;
      for (EdgeIndex e : path) s += sigma[e];
      min_load = std::min(min_load, s);
    }
    double primal = 0.0;
    for (EdgeIndex e = 0; e < m; ++e)
      primal += g.edge(e).conductance * std::pow(sigma[e] / min_load, p);
    lower = std::max(lower, dual);
    if (primal < upper) {
      upper = primal;
      out.density.assign(m, 0.0);
      for (EdgeIndex e = 0; e < m; ++e) out.density[e] = sigma[e] / min_load / g.edge(e).length;
    }
    if (upper - lower <= options.gap_tolerance * upper) {
      out.converged = true;
      ++sweep;
      break;
    }
  }
  out.iterations = sweep;
  out.lower_bound = lower;
  out.upper_bound = upper;
  out.value = upper;
  out.slack = path_slack(g, paths, out.density);
  out.paths = std::move(paths);
  return out;
}

ModulusResult modulus(const WeightedGraph& g, const VertexSet& a, const VertexSet& b, double p,
                      ModulusRoute route, const ModulusOptions& options) {
  return route == ModulusRoute::dual ? modulus_dual(g, a, b, p, options)
                                     : modulus_direct(g, a, b, p, options);
}

}  // namespace proyden
