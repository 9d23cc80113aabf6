#include "proyden/dirichlet.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "proyden/calculus.hpp"
#include "proyden/power.hpp"

namespace proyden {

namespace {

constexpr std::size_t kBisectionSteps = 200;
constexpr double kBisectionWidth = 1e-14;

class Relaxation {
 public:
  Relaxation(const WeightedGraph& g, const DirichletProblem& problem)
      : g_(g), free_(problem.free), p_(problem.p), law_(problem.p) {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (free_[x]) {
        position_.push_back(free_list_.size());
        free_list_.push_back(x);
      } else {
        position_.push_back(kNone);
      }
    }
  }

  std::size_t free_count() const { return free_list_.size(); }

  // One Gauss-Seidel sweep in ascending vertex order; returns the largest move.
  double sweep(GraphFunction& u) const {
    double largest = 0.0;
    for (Vertex x : free_list_) {
      const double old = u[x];
      const double t = local_minimizer(x, u);
      if (t == old) continue;
      if (local_energy(x, t, u) <= local_energy(x, old, u)) {
        u[x] = t;
        largest = std::max(largest, std::abs(t - old));
      }
    }
    return largest;
  }

  // Weighted-Laplacian correction with exact line search on the true energy.
  // Returns the largest move (0 if the step was rejected).
  double correct(GraphFunction& u, double lo, double hi) {
    const std::size_t nf = free_list_.size();
    if (nf < 2 || hi <= lo) return 0.0;
    const double floor_diff = 1e-8 * (hi - lo);

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(nf + 2 * g_.num_edges());
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nf));
    std::vector<double> diag(nf, 0.0);
    for (const Edge& ed : g_.edges()) {
      const bool fu = free_[ed.u];
      const bool fv = free_[ed.v];
      if (!fu && !fv) continue;
      const double d = u[ed.u] - u[ed.v];
      const double w = ed.conductance * std::pow(std::max(std::abs(d), floor_diff), p_ - 2.0);
      // Exact gradient on the right, so the step is a descent direction
      // even where the weight is floored.
      const double flux = ed.conductance * law_.psi(d);
      if (fu) {
        diag[position_[ed.u]] += w;
        rhs[static_cast<Eigen::Index>(position_[ed.u])] -= flux;
      }
      if (fv) {
        diag[position_[ed.v]] += w;
        rhs[static_cast<Eigen::Index>(position_[ed.v])] += flux;
      }
      if (fu && fv) {
        const auto a = static_cast<Eigen::Index>(position_[ed.u]);
        const auto b = static_cast<Eigen::Index>(position_[ed.v]);
        triplets.emplace_back(a, b, -w);
        triplets.emplace_back(b, a, -w);
      }
    }
    for (std::size_t i = 0; i < nf; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      triplets.emplace_back(k, k, diag[i]);
    }
    Eigen::SparseMatrix<double> lap(static_cast<Eigen::Index>(nf), static_cast<Eigen::Index>(nf));
    lap.setFromTriplets(triplets.begin(), triplets.end());
    if (!analyzed_) {
      solver_.analyzePattern(lap);
      analyzed_ = true;
    }
    solver_.factorize(lap);
    if (solver_.info() != Eigen::Success) return 0.0;
    const Eigen::VectorXd step = solver_.solve(rhs);
    if (solver_.info() != Eigen::Success || !step.allFinite()) return 0.0;

    GraphFunction dir(u.size(), 0.0);
    for (std::size_t i = 0; i < nf; ++i) dir[free_list_[i]] = step[static_cast<Eigen::Index>(i)];

    const double alpha = line_search(u, dir);
    if (!(alpha > 0.0)) return 0.0;
    GraphFunction trial = u;
    double largest = 0.0;
    for (Vertex x : free_list_) {
      trial[x] = std::clamp(u[x] + alpha * dir[x], lo, hi);
      largest = std::max(largest, std::abs(trial[x] - u[x]));
    }
    // Energy change summed edge by edge, so gains far below the rounding
    // level of the total energy still count. Near the minimizer the change
    // drops under the rounding of the touched terms; the line search works
    // on the derivative and is trusted there.
    double change = 0.0;
    double touched = 0.0;
    for (const Edge& ed : g_.edges()) {
      if (trial[ed.u] == u[ed.u] && trial[ed.v] == u[ed.v]) continue;
      const double before = ed.conductance * law_.abs_pow(u[ed.u] - u[ed.v]);
      change += ed.conductance * law_.abs_pow(trial[ed.u] - trial[ed.v]) - before;
      touched += before;
    }
    if (!(change <= 16.0 * std::numeric_limits<double>::epsilon() * touched)) return 0.0;
    u.swap(trial);
    return largest;
  }

  double residual_of(const GraphFunction& u) const { return residual(g_, u, p_, free_); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double local_energy(Vertex x, double t, const GraphFunction& u) const {
    double s = 0.0;
    for (const Neighbor& nb : g_.neighbors(x))
      s += g_.edge(nb.edge).conductance * law_.abs_pow(t - u[nb.vertex]);
    return s;
  }

  // Root of t -> sum_y c |t - u(y)|^(p-2) (t - u(y)), bracketed by the
  // neighbor range.
  double local_minimizer(Vertex x, const GraphFunction& u) const {
    const auto nbrs = g_.neighbors(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double weighted = 0.0;
    double weight = 0.0;
    for (const Neighbor& nb : nbrs) {
      lo = std::min(lo, u[nb.vertex]);
      hi = std::max(hi, u[nb.vertex]);
      weighted += g_.edge(nb.edge).conductance * u[nb.vertex];
      weight += g_.edge(nb.edge).conductance;
    }
    if (hi == lo) return lo;
    if (p_ == 2.0) return std::clamp(weighted / weight, lo, hi);
    auto slope = [&](double t) {
      double s = 0.0;
      for (const Neighbor& nb : nbrs) s += g_.edge(nb.edge).conductance * law_.psi(t - u[nb.vertex]);
      return s;
    };
    for (std::size_t step = 0; step < kBisectionSteps && hi - lo >= kBisectionWidth; ++step) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (slope(mid) < 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  }

  // Minimizer over alpha >= 0 of E(u + alpha dir) via the derivative
  // p * sum_e c psi(du_e + alpha dd_e) dd_e, which is nondecreasing in alpha.
  double line_search(const GraphFunction& u, const GraphFunction& dir) const {
    struct Term {
      double c, du, dd;
    };
    std::vector<Term> terms;
    for (const Edge& ed : g_.edges()) {
      const double dd = dir[ed.u] - dir[ed.v];
      if (dd != 0.0) terms.push_back({ed.conductance, u[ed.u] - u[ed.v], dd});
    }
    if (terms.empty()) return 0.0;
    auto deriv = [&](double a) {
      double s = 0.0;
      for (const Term& t : terms) s += t.c * law_.psi(t.du + a * t.dd) * t.dd;
      return s;
    };
    double lo = 0.0;
    double flo = deriv(0.0);
    if (!(flo < 0.0)) return 0.0;
    double hi = 1.0;
    double fhi = deriv(hi);
    while (fhi < 0.0 && hi < 1e8) {
      lo = hi;
      flo = fhi;
      hi *= 2.0;
      fhi = deriv(hi);
    }
    if (fhi < 0.0) return hi;
    // Illinois variant of regula falsi.
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

  const WeightedGraph& g_;
  const std::vector<bool>& free_;
  double p_;
  PowerLaw law_;
  std::vector<Vertex> free_list_;
  std::vector<std::size_t> position_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
  bool analyzed_ = false;
};

void check_well_posed(const WeightedGraph& g, const DirichletProblem& problem) {
  const std::size_t n = g.num_vertices();
  if (problem.free.size() != n || problem.data.size() != n) {
    throw InvalidArgument("Dirichlet problem sizes do not match the graph");
  }
  std::vector<bool> reached(n, false);
  std::queue<Vertex> queue;
  for (Vertex x = 0; x < n; ++x) {
    if (!problem.free[x]) {
      if (!std::isfinite(problem.data[x])) {
        throw InvalidArgument("pinned value at vertex " + std::to_string(g.id(x)) +
                              " is not finite");
      }
      reached[x] = true;
      queue.push(x);
    }
  }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (const Neighbor& nb : g.neighbors(x)) {
      if (problem.free[nb.vertex] && !reached[nb.vertex]) {
        reached[nb.vertex] = true;
        queue.push(nb.vertex);
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!reached[x]) {
      throw SolveError("ill-posed Dirichlet problem: free vertex " + std::to_string(g.id(x)) +
                       " cannot reach any pinned vertex");
    }
  }
}

}  // namespace

DirichletProblem pinned_problem(const WeightedGraph& g,
                                const std::vector<std::pair<Vertex, double>>& pins, double p,
                                const SolverOptions& options) {
  DirichletProblem problem;
  problem.free.assign(g.num_vertices(), true);
  problem.data.assign(g.num_vertices(), 0.0);
  problem.p = p;
  problem.options = options;
  for (auto [x, value] : pins) {
    if (x >= g.num_vertices()) throw InvalidArgument("pinned vertex out of range");
    problem.free[x] = false;
    problem.data[x] = value;
  }
  return problem;
}

DirichletSolution solve_dirichlet(const WeightedGraph& g, const DirichletProblem& problem) {
  require_exponent(problem.p);
  check_well_posed(g, problem);
  const SolverOptions& opts = problem.options;
  if (!(opts.tol_update > 0.0) || !(opts.tol_residual > 0.0)) {
    throw InvalidArgument("solver tolerances must be positive");
  }

  DirichletSolution out;
  SolveReport& report = out.report;
  report.options = opts;
  if (problem.p <= 1.05) {
    report.warnings.push_back("p <= 1.05: the energy is nearly degenerate and conditioning degrades");
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t pinned = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (problem.free[x]) continue;
    lo = std::min(lo, problem.data[x]);
    hi = std::max(hi, problem.data[x]);
    sum += problem.data[x];
    ++pinned;
  }

  GraphFunction& u = out.values;
  u = problem.data;
  Relaxation relax(g, problem);
  report.free_vertices = relax.free_count();
  if (relax.free_count() == 0) {
    report.energy.push_back(p_energy(g, u, problem.p));
    report.converged = true;
    return out;
  }

  const double mean = sum / static_cast<double>(pinned);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!problem.free[x]) continue;
    if (problem.initial) {
      if (problem.initial->size() != g.num_vertices()) {
        throw InvalidArgument("initial guess size does not match the graph");
      }
      const double v = (*problem.initial)[x];
      u[x] = std::isfinite(v) ? std::clamp(v, lo, hi) : mean;
    } else {
      u[x] = mean;
    }
  }

  double energy = p_energy(g, u, problem.p);
  report.energy.push_back(energy);
  for (std::size_t sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    double moved = 0.0;
    if (opts.subspace_correction) moved = relax.correct(u, lo, hi);
    const double update = relax.sweep(u);
    energy = p_energy(g, u, problem.p);
    report.energy.push_back(energy);
    report.sweeps = sweep;
    report.max_update = std::max(update, moved);
    if (report.max_update < opts.tol_update) {
      report.residual = relax.residual_of(u);
      if (report.residual < opts.tol_residual) {
        report.converged = true;
        return out;
      }
    }
  }
  report.residual = relax.residual_of(u);
  return out;
}

double residual(const WeightedGraph& g, std::span<const double> u, double p,
                const std::vector<bool>& free) {
  if (u.size() != g.num_vertices() || free.size() != g.num_vertices()) {
    throw InvalidArgument("residual: size mismatch");
  }
  const PowerLaw law(p);
  double worst = 0.0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!free[x]) continue;
    double s = 0.0;
    for (const Neighbor& nb : g.neighbors(x))
      s += g.edge(nb.edge).conductance * law.psi(u[nb.vertex] - u[x]);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

double residual(const WeightedGraph& g, std::span<const double> u, double p,
                const VertexSet& free) {
  return residual(g, u, p, free.mask(g.num_vertices()));
}

ComparisonCertificate compare(const WeightedGraph& g, const DirichletProblem& lower,
                              const DirichletProblem& upper) {
  if (lower.free != upper.free) throw InvalidArgument("compare: free sets differ");
  if (lower.p != upper.p) throw InvalidArgument("compare: exponents differ");
  if (lower.data.size() != g.num_vertices() || upper.data.size() != g.num_vertices()) {
    throw InvalidArgument("compare: data size does not match the graph");
  }
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!lower.free[x] && lower.data[x] > upper.data[x]) {
      throw InvalidArgument("compare: boundary data not ordered at vertex " +
                            std::to_string(g.id(x)));
    }
  }
  ComparisonCertificate cert;
  cert.lower = solve_dirichlet(g, lower);
  cert.upper = solve_dirichlet(g, upper);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    cert.max_violation =
        std::max(cert.max_violation, cert.lower.values[x] - cert.upper.values[x]);
  }
  cert.tolerance = 2.0 * std::max(lower.options.tol_update, upper.options.tol_update);
  cert.holds = cert.max_violation <= cert.tolerance;
  return cert;
}

}  // namespace proyden
