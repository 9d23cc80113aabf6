#include "proyden/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "proyden/calculus.hpp"
#include "proyden/power.hpp"

namespace proyden {

namespace {

class QuotientSolver {
 public:
  QuotientSolver(const WeightedGraph& g, const VertexSet& interior, double p,
                 const SobolevOptions& options)
      : g_(g), interior_(interior), law_(p), p_(p), options_(options),
        interior_list_(interior.begin(), interior.end()), position_(g.num_vertices(), kNone) {
    for (std::size_t i = 0; i < interior_list_.size(); ++i) position_[interior_list_[i]] = i;
  }

  double quotient(const GraphFunction& u) const {
    return p_energy(g_, u, p_) / lp_mass(g_, u, p_);
  }

  void normalize(GraphFunction& u) const {
    const double scale = std::pow(lp_mass(g_, u, p_), -1.0 / p_);
    for (double& x : u) x *= scale;
  }

  double residual(const GraphFunction& u, double value) const {
    double worst = 0.0;
    for (Vertex x : interior_) {
      double s = 0.0;
      for (const auto& nb : g_.neighbors(x))
        s += g_.edge(nb.edge).conductance * law_.psi(u[x] - u[nb.vertex]);
      worst = std::max(worst, std::abs(s - value * g_.measure(x) * law_.psi(u[x])));
    }
    return worst;
  }

  /// Runs inverse iteration from a normalized start; returns the final quotient.
  double iterate(GraphFunction& u, std::size_t& steps, bool& converged) const {
    normalize(u);
    double value = quotient(u);
    converged = false;
    for (steps = 0; steps < options_.max_iterations; ++steps) {
      GraphFunction source(u.size(), 0.0);
      for (Vertex x : interior_) source[x] = g_.measure(x) * law_.psi(u[x]);
      // Warm start: for an eigenfunction the solution is u scaled by value^(-1/(p-1)).
      GraphFunction v = u;
      const double scale = std::pow(value, -1.0 / (p_ - 1.0));
      for (double& x : v) x *= scale;
      poisson(v, source);
      normalize(v);
      const double next = quotient(v);
      u = std::move(v);
      const bool settled = std::abs(value - next) <= options_.tolerance * next;
      value = next;
      if (settled) {
        converged = true;
        ++steps;
        break;
      }
    }
    return value;
  }

 private:
  /// Minimizes E_p(v) / p - <source, v> over v vanishing off the interior:
  /// Gauss-Seidel sweeps interleaved with damped Newton steps.
  void poisson(GraphFunction& v, const GraphFunction& source) const {
    for (std::size_t sweep = 0; sweep < options_.max_inner_sweeps; ++sweep) {
      const double scale = std::max(sup_norm(v), 1e-300);
      double change = newton(v, source, scale);
      for (Vertex x : interior_) {
        const double next = relax(v, x, source[x]);
        change = std::max(change, std::abs(next - v[x]));
        v[x] = next;
      }
      if (change <= 1e-14 * scale) break;
    }
  }

  double newton(GraphFunction& v, const GraphFunction& source, double scale) const {
    const std::size_t nf = interior_.size();
    const double floor_diff = 1e-8 * scale;
    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(nf));
    std::vector<double> diag(nf, 0.0);
    for (std::size_t i = 0; i < nf; ++i) rhs[static_cast<Eigen::Index>(i)] = source[interior_list_[i]];
    for (const Edge& ed : g_.edges()) {
      const auto a = position_[ed.u], b = position_[ed.v];
      if (a == kNone && b == kNone) continue;
      const double d = v[ed.u] - v[ed.v];
      const double flux = ed.conductance * law_.psi(d);
      const double w = (p_ - 1.0) * ed.conductance *
                       std::pow(std::max(std::abs(d), floor_diff), p_ - 2.0);
      if (a != kNone) {
        diag[a] += w;
        rhs[static_cast<Eigen::Index>(a)] -= flux;
      }
      if (b != kNone) {
        diag[b] += w;
        rhs[static_cast<Eigen::Index>(b)] += flux;
      }
      if (a != kNone && b != kNone) {
        triplets.emplace_back(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b), -w);
        triplets.emplace_back(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a), -w);
      }
    }
    for (std::size_t i = 0; i < nf; ++i)
      triplets.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), diag[i]);
    Eigen::SparseMatrix<double> hess(static_cast<Eigen::Index>(nf), static_cast<Eigen::Index>(nf));
    hess.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(hess);
    if (solver.info() != Eigen::Success) return 0.0;
    const Eigen::VectorXd step = solver.solve(rhs);
    if (solver.info() != Eigen::Success || !step.allFinite()) return 0.0;

    GraphFunction dir(v.size(), 0.0);
    for (std::size_t i = 0; i < nf; ++i) dir[interior_list_[i]] = step[static_cast<Eigen::Index>(i)];
    const double alpha = line_search(v, dir, source);
    if (!(alpha > 0.0)) return 0.0;
    const double before = objective(v, source);
    GraphFunction trial = v;
    double largest = 0.0;
    for (Vertex x : interior_) {
      trial[x] += alpha * dir[x];
      largest = std::max(largest, std::abs(alpha * dir[x]));
    }
    if (objective(trial, source) > before) return 0.0;
    v.swap(trial);
    return largest;
  }

  double objective(const GraphFunction& v, const GraphFunction& source) const {
    double s = p_energy(g_, v, p_) / p_;
    for (Vertex x : interior_) s -= source[x] * v[x];
    return s;
  }

  /// Minimizer over alpha >= 0 of the objective along dir; its derivative
  /// is nondecreasing in alpha.
  double line_search(const GraphFunction& v, const GraphFunction& dir,
                     const GraphFunction& source) const {
    double linear = 0.0;
    for (Vertex x : interior_) linear += source[x] * dir[x];
    auto deriv = [&](double a) {
      double s = -linear;
      for (const Edge& ed : g_.edges()) {
        const double dd = dir[ed.u] - dir[ed.v];
        if (dd != 0.0) s += ed.conductance * law_.psi(v[ed.u] - v[ed.v] + a * dd) * dd;
      }
      return s;
    };
    double lo = 0.0, flo = deriv(0.0);
    if (!(flo < 0.0)) return 0.0;
    double hi = 1.0, fhi = deriv(hi);
    while (fhi < 0.0 && hi < 1e8) {
      lo = hi;
      flo = fhi;
      hi *= 2.0;
      fhi = deriv(hi);
    }
    if (fhi < 0.0) return hi;
    int side = 0;
    for (int it = 0; it < 100; ++it) {
      const double a = (lo * fhi - hi * flo) / (fhi - flo);
      if (!(a > lo && a < hi)) break;
      const double fa = deriv(a);
      if (fa == 0.0) return a;
      if (fa < 0.0) {
        lo = a;
        flo = fa;
        if (side == -1) fhi *= 0.5;
        side = -1;
      } else {
        hi = a;
        fhi = fa;
        if (side == 1) flo *= 0.5;
        side = 1;
      }
      if (hi - lo <= 1e-13 * hi) break;
    }
    return 0.5 * (lo + hi);
  }

  /// Root of F(t) = sum_y c psi(t - v(y)) - s, increasing in t.
  double relax(const GraphFunction& v, Vertex x, double s) const {
    const auto nbrs = g_.neighbors(x);
    if (p_ == 2.0) {
      double num = s, den = 0.0;
      for (const auto& nb : nbrs) {
        const double c = g_.edge(nb.edge).conductance;
        num += c * v[nb.vertex];
        den += c;
      }
      return num / den;
    }
    auto f = [&](double t) {
      double acc = -s;
      for (const auto& nb : nbrs) acc += g_.edge(nb.edge).conductance * law_.psi(t - v[nb.vertex]);
      return acc;
    };
    double lo = v[nbrs[0].vertex], hi = lo;
    for (const auto& nb : nbrs) {
      lo = std::min(lo, v[nb.vertex]);
      hi = std::max(hi, v[nb.vertex]);
    }
    double step = std::max(hi - lo, std::max(std::abs(v[x]), 1e-300));
    while (f(lo) > 0.0) {
      lo -= step;
      step *= 2.0;
    }
    step = std::max(hi - lo, 1e-300);
    while (f(hi) < 0.0) {
      hi += step;
      step *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(std::abs(hi), std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  const WeightedGraph& g_;
  const VertexSet& interior_;
  PowerLaw law_;
  double p_;
  SobolevOptions options_;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Vertex> interior_list_;
  std::vector<std::size_t> position_;
};

// Multi-start inverse iteration on one connected piece of the interior.
SobolevResult best_of_starts(const WeightedGraph& g, const VertexSet& piece, double p,
                             const SobolevOptions& options) {
  const QuotientSolver solver(g, piece, p, options);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);

  SobolevResult out;
  const std::size_t starts = std::max<std::size_t>(options.starts, 1);
  for (std::size_t s = 0; s < starts; ++s) {
    GraphFunction u(g.num_vertices(), 0.0);
    for (Vertex x : piece) u[x] = s == 0 ? 1.0 : uniform(rng);
    std::size_t steps = 0;
    bool converged = false;
    const double value = solver.iterate(u, steps, converged);
    out.per_start.push_back(value);
    out.iterations += steps;
    if (s == 0 || value < out.value) {
      out.value = value;
      out.minimizer = std::move(u);
      out.converged = converged;
    }
  }
  return out;
}

// Components of the subgraph induced on the interior, in order of least vertex.
std::vector<VertexSet> pieces(const WeightedGraph& g, const VertexSet& interior) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexSet> out;
  for (Vertex root : interior) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root}, stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x)) {
        if (seen[nb.vertex] || !interior.contains(nb.vertex)) continue;
        seen[nb.vertex] = true;
        comp.push_back(nb.vertex);
        stack.push_back(nb.vertex);
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

}  // namespace

SobolevResult sobolev_constant(const WeightedGraph& g, const VertexSet& interior, double p,
                               const SobolevOptions& options) {
  require_exponent(p);
  const std::size_t n = g.num_vertices();
  if (interior.empty()) throw InvalidArgument("sobolev_constant: interior is empty");
  for (Vertex x : interior)
    if (x >= n) throw InvalidArgument("sobolev_constant: interior vertex out of range");
  if (interior.size() == n)
    throw InvalidArgument("sobolev_constant: interior covers every vertex (no Dirichlet constraint)");

  // Energy and mass both split over pieces with no edge between them, so the
  // infimum is attained on a single piece. Solving pieces apart keeps exact
  // zeros elsewhere, which iteration on the union only approaches slowly.
  SobolevResult out;
  bool first = true;
  std::size_t iterations = 0;
  for (const auto& piece : pieces(g, interior)) {
    auto r = best_of_starts(g, piece, p, options);
    iterations += r.iterations;
    if (first) {
      out = std::move(r);
      first = false;
      continue;
    }
    for (std::size_t s = 0; s < out.per_start.size(); ++s)
      out.per_start[s] = std::min(out.per_start[s], r.per_start[s]);
    if (r.value < out.value) {
      r.per_start = std::move(out.per_start);
      out = std::move(r);
    }
  }
  out.iterations = iterations;
  out.constant = std::pow(out.value, -1.0 / p);
  out.residual = QuotientSolver(g, interior, p, options).residual(out.minimizer, out.value);
  return out;
}

}  // namespace proyden
