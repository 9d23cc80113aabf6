#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "proyden/calculus.hpp"

namespace proyden::oracle {

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, double lo,
                           double hi, bool unit_lengths) {
  std::uniform_real_distribution<double> weight(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return;
    const double c = weight(rng);
    const double l = unit_lengths ? 1.0 : weight(rng);
    edges.push_back({a, b, c, l});
  };
  for (Vertex v = 1; v < n; ++v) add(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng) < density) add(a, b);
  std::vector<double> measures(n);
  for (double& m : measures) m = weight(rng);
  return WeightedGraph(std::move(measures), std::move(edges));
}

WeightedGraph triangle() { return WeightedGraph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}); }

WeightedGraph four_cycle_with_chord() {
  return WeightedGraph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

WeightedGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return WeightedGraph(std::vector<double>(leaves + 1, 1.0), std::move(edges));
}

GraphFunction dense_harmonic(const WeightedGraph& g, const std::vector<bool>& free,
                             const GraphFunction& data) {
  const std::size_t n = g.num_vertices();
  std::vector<Eigen::Index> pos(n, -1);
  Eigen::Index k = 0;
  for (Vertex x = 0; x < n; ++x)
    if (free[x]) pos[x] = k++;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(k);
  for (const Edge& e : g.edges()) {
    const Vertex ends[2] = {e.u, e.v};
    for (int s = 0; s < 2; ++s) {
      const Vertex x = ends[s], y = ends[1 - s];
      if (!free[x]) continue;
      a(pos[x], pos[x]) += e.conductance;
      if (free[y]) a(pos[x], pos[y]) -= e.conductance;
      else b[pos[x]] += e.conductance * data[y];
    }
  }
  const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
  GraphFunction out = data;
  for (Vertex x = 0; x < n; ++x)
    if (free[x]) out[x] = sol[pos[x]];
  return out;
}

double dirichlet_eigenvalue(const WeightedGraph& g, const std::vector<bool>& interior) {
  const std::size_t n = g.num_vertices();
  std::vector<Eigen::Index> pos(n, -1);
  Eigen::Index k = 0;
  for (Vertex x = 0; x < n; ++x)
    if (interior[x]) pos[x] = k++;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (Vertex x = 0; x < n; ++x)
    if (interior[x]) m(pos[x], pos[x]) = g.measure(x);
  for (const Edge& e : g.edges()) {
    if (interior[e.u]) l(pos[e.u], pos[e.u]) += e.conductance;
    if (interior[e.v]) l(pos[e.v], pos[e.v]) += e.conductance;
    if (interior[e.u] && interior[e.v]) {
      l(pos[e.u], pos[e.v]) -= e.conductance;
      l(pos[e.v], pos[e.u]) -= e.conductance;
    }
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, m);
  return solver.eigenvalues().minCoeff();
}

GraphFunction brute_force_minimizer(const WeightedGraph& g, const std::vector<bool>& free,
                                    const GraphFunction& data, double p) {
  std::vector<Vertex> vars;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (free[x]) {
      vars.push_back(x);
    } else {
      lo = first ? data[x] : std::min(lo, data[x]);
      hi = first ? data[x] : std::max(hi, data[x]);
      first = false;
    }
  }
  if (vars.size() > 3) throw InvalidArgument("brute_force_minimizer: at most 3 free vertices");
  GraphFunction u = data;
  std::vector<double> center(vars.size(), 0.5 * (lo + hi));
  double half = 0.5 * (hi - lo);
  constexpr int kPoints = 41;
  for (int round = 0; round < 60 && half > 1e-13; ++round) {
    std::vector<double> best = center;
    double best_energy = std::numeric_limits<double>::infinity();
    std::vector<int> idx(vars.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i)
        u[vars[i]] = center[i] - half + 2.0 * half * idx[i] / (kPoints - 1);
      const double e = p_energy(g, u, p);
      if (e < best_energy) {
        best_energy = e;
        for (std::size_t i = 0; i < vars.size(); ++i) best[i] = u[vars[i]];
      }
      std::size_t d = 0;
      while (d < idx.size() && ++idx[d] == kPoints) idx[d++] = 0;
      if (d == idx.size()) break;
    }
    center = best;
    half *= 4.0 / (kPoints - 1);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) u[vars[i]] = center[i];
  return u;
}

double path_capacity(std::size_t n, double p) { return std::pow(static_cast<double>(n), 1.0 - p); }

double tree_capacity(std::size_t b, std::size_t n, double p) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    s += std::pow(std::pow(static_cast<double>(b), static_cast<double>(k + 1)), -1.0 / (p - 1.0));
  return std::pow(s, 1.0 - p);
}

double tree_right_child(std::size_t depth) {
  const double r = 1.0 - std::pow(2.0, 1.0 - static_cast<double>(depth));
  return 1.0 - r / (2.0 * (1.0 + r));
}

GraphFunction fd_gradient(const WeightedGraph& g, const GraphFunction& u, double p, double eps) {
  GraphFunction out(u.size(), 0.0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    double scale = 1e-4;
    for (const Neighbor& nb : g.neighbors(x)) {
      const double d = u[x] - u[nb.vertex];
      scale = std::min(scale, 0.01 * std::sqrt(d * d + eps * eps));
    }
    const double h = std::max(scale, 1e-12);
    auto local = [&](double t) {
      double s = 0.0;
      for (const Neighbor& nb : g.neighbors(x)) {
        const double d = t - u[nb.vertex];
        s += g.edge(nb.edge).conductance * std::pow(d * d + eps * eps, 0.5 * p);
      }
      return s;
    };
    // Five-point stencil on the energy restricted to the edges at x.
    out[x] = (-local(u[x] + 2 * h) + 8 * local(u[x] + h) - 8 * local(u[x] - h) +
              local(u[x] - 2 * h)) /
             (12 * h);
  }
  return out;
}

}  // namespace proyden::oracle
