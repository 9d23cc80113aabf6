#include "acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "proyden/boundary.hpp"
#include "proyden/calculus.hpp"
#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"
#include "proyden/modulus.hpp"
#include "proyden/parabolicity.hpp"
#include "proyden/parallel.hpp"
#include "proyden/sobolev.hpp"

namespace proyden::acceptance {

namespace {

constexpr double kExponents[] = {1.5, 2.0, 3.0};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + fmt(vs[i]);
  return s;
}

std::string label(const std::string& base, double p) { return base + " p=" + fmt(p); }

double rel_err(double m, double e) { return std::abs(m - e) / std::abs(e); }

std::mt19937_64 stream(std::uint64_t seed, int criterion) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(criterion)};
  return std::mt19937_64(seq);
}

VertexSet one(Vertex x) { return VertexSet({x}); }

std::vector<Vertex> tree_level(std::size_t b, std::size_t level) {
  std::size_t first = 0, width = 1;
  for (std::size_t k = 0; k < level; ++k) {
    first += width;
    width *= b;
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < width; ++i) out.push_back(first + i);
  return out;
}

// Random pinned problem: about a fifth of the vertices pinned (at least two).
struct RandomProblem {
  WeightedGraph graph;
  std::vector<bool> free;
  GraphFunction data;
};

RandomProblem random_problem(std::mt19937_64& rng, std::size_t lo_n, std::size_t hi_n) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(lo_n, hi_n)(rng);
  auto g = oracle::random_graph(rng, n, std::min(1.0, 3.0 / static_cast<double>(n)));
  std::vector<bool> free(n, true);
  GraphFunction data(n, 0.0);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<Vertex> order(n);
  for (Vertex x = 0; x < n; ++x) order[x] = x;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t pins = std::max<std::size_t>(2, n / 5);
  for (std::size_t i = 0; i < pins; ++i) {
    free[order[i]] = false;
    data[order[i]] = value(rng);
  }
  return {std::move(g), std::move(free), std::move(data)};
}

DirichletProblem problem_of(const RandomProblem& rp, double p) {
  DirichletProblem prob;
  prob.free = rp.free;
  prob.data = rp.data;
  prob.p = p;
  return prob;
}

void path_capacities(Criterion& c, std::uint64_t) {
  for (double p : kExponents) {
    for (std::size_t n : {2, 4, 8, 16}) {
      auto g = make_path(n);
      const double cap = capacity(g, one(0), one(n), p).value;
      c.add(label("cap path(" + std::to_string(n) + ")", p), cap, oracle::path_capacity(n, p), 1e-6,
            Relation::relative);
    }
    auto g = make_path(3);
    auto brute = oracle::brute_force_minimizer(g, {false, true, true, false}, {0, 0, 0, 1}, p);
    c.add(label("brute-force grid energy path(3)", p), p_energy(g, brute, p),
          oracle::path_capacity(3, p), 1e-6, Relation::relative);
  }
}

void tree_capacities(Criterion& c, std::uint64_t) {
  for (std::size_t n : {2, 3, 4}) {
    auto g = make_tree(2, n);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::pow(2.0, -static_cast<double>(k + 1));
    const double cap = capacity(g, one(0), VertexSet(tree_level(2, n)), 2.0).value;
    c.add("cap tree(2," + std::to_string(n) + ") p=2", cap, 1.0 / s, 1e-6, Relation::relative);
  }
  auto g = make_tree(2, 3);
  const double cap = capacity(g, one(0), VertexSet(tree_level(2, 3)), 3.0).value;
  c.add("cap tree(2,3) p=3 series formula", cap, oracle::tree_capacity(2, 3, 3.0), 1e-6,
        Relation::relative);
}

void modulus_duality(Criterion& c, std::uint64_t seed) {
  for (double p : kExponents) {
    auto tri = oracle::triangle();
    c.add(label("triangle Mod vs Cap", p), modulus_direct(tri, one(0), one(1), p).value,
          capacity(tri, one(0), one(1), p).value, 1e-4, Relation::relative);
    auto c4 = oracle::four_cycle_with_chord();
    c.add(label("4-cycle+chord Mod vs Cap", p), modulus_direct(c4, one(1), one(3), p).value,
          capacity(c4, one(1), one(3), p).value, 1e-4, Relation::relative);
  }
  auto rng = stream(seed, 3);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
    auto g = oracle::random_graph(rng, n, 0.4);
    const double p = kExponents[i % 3];
    const double mod = modulus_direct(g, one(0), one(n - 1), p).value;
    const double cap = capacity(g, one(0), one(n - 1), p).value;
    worst = std::max(worst, rel_err(mod, cap));
  }
  c.add("20 random graphs: worst |Mod - Cap| / Cap", worst, 0.0, 1e-4, Relation::at_most);
}

void solver_oracle(Criterion& c, std::uint64_t seed) {
  auto rng = stream(seed, 4);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto rp = random_problem(rng, 5, 50);
    auto sol = solve_dirichlet(rp.graph, problem_of(rp, 2.0));
    const auto ref = oracle::dense_harmonic(rp.graph, rp.free, rp.data);
    for (std::size_t x = 0; x < ref.size(); ++x) worst = std::max(worst, std::abs(sol.values[x] - ref[x]));
  }
  c.add("p=2 vs dense linear oracle, 50 graphs: sup error", worst, 0.0, 1e-8, Relation::at_most);

  std::size_t max_violations = 0, cmp_violations = 0;
  std::uniform_real_distribution<double> bump(0.0, 0.5);
  std::bernoulli_distribution zero(0.3);
  for (int i = 0; i < 100; ++i) {
    const double p = kExponents[i % 3];
    auto rp = random_problem(rng, 4, 30);
    auto lower = problem_of(rp, p);
    auto upper = lower;
    for (std::size_t x = 0; x < rp.data.size(); ++x)
      if (!rp.free[x] && !zero(rng)) upper.data[x] += bump(rng);
    auto cert = compare(rp.graph, lower, upper);
    if (!cert.holds) ++cmp_violations;
    double lo = 1e300, hi = -1e300;
    for (std::size_t x = 0; x < rp.data.size(); ++x)
      if (!rp.free[x]) {
        lo = std::min(lo, rp.data[x]);
        hi = std::max(hi, rp.data[x]);
      }
    const double tol = 2.0 * lower.options.tol_update;
    for (double v : cert.lower.values)
      if (v < lo - tol || v > hi + tol) ++max_violations;
  }
  c.add("maximum principle violations (100 instances)", static_cast<double>(max_violations), 0.0,
        0.0, Relation::equal);
  c.add("comparison violations above 2 tol (100 instances)", static_cast<double>(cmp_violations),
        0.0, 0.0, Relation::equal);
}

void gradient_check(Criterion& c, std::uint64_t seed) {
  auto rng = stream(seed, 5);
  const double exps[] = {1.5, 2.0, 2.5, 3.0};
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  double worst_plain = 0.0, worst_reg = 0.0;
  std::size_t excluded = 0;
  for (int i = 0; i < 50; ++i) {
    const double p = exps[i % 4];
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
    auto g = oracle::random_graph(rng, n, 0.3);
    GraphFunction u(n);
    for (double& x : u) x = value(rng);
    // Force a tie across one edge so the excluded set is exercised.
    const Edge& tie = g.edge(std::uniform_int_distribution<std::size_t>(0, g.num_edges() - 1)(rng));
    u[tie.v] = u[tie.u];

    const auto an = energy_gradient(g, u, p, 0.0);
    const auto fd = oracle::fd_gradient(g, u, p, 0.0);
    double num = 0.0, den = 0.0;
    for (Vertex x = 0; x < n; ++x) {
      bool near_zero = false;
      for (const Neighbor& nb : g.neighbors(x))
        if (std::abs(u[x] - u[nb.vertex]) < 1e-8) near_zero = true;
      if (near_zero) {
        ++excluded;
        continue;
      }
      num = std::max(num, std::abs(fd[x] - an[x]));
      den = std::max(den, std::abs(an[x]));
    }
    if (den > 0.0) worst_plain = std::max(worst_plain, num / den);

    const double eps = 1e-6;
    const auto an_r = energy_gradient(g, u, p, eps);
    const auto fd_r = oracle::fd_gradient(g, u, p, eps);
    num = den = 0.0;
    for (Vertex x = 0; x < n; ++x) {
      num = std::max(num, std::abs(fd_r[x] - an_r[x]));
      den = std::max(den, std::abs(an_r[x]));
    }
    if (den > 0.0) worst_reg = std::max(worst_reg, num / den);
  }
  c.add("eps=0 vs central differences: worst relative error", worst_plain, 0.0, 1e-6,
        Relation::at_most, std::to_string(excluded) + " vertices at near-zero differences excluded");
  c.add("eps=1e-6 vs regularized energy: worst relative error", worst_reg, 0.0, 1e-6,
        Relation::at_most);
}

void parabolicity_check(Criterion& c, std::uint64_t) {
  const std::vector<std::size_t> line_sizes{4096, 8192, 16384, 32768, 65536};
  const std::vector<std::size_t> tree_sizes{10, 11, 12, 13, 14, 15, 16};
  for (double p : kExponents) {
    for (auto kind : {InfiniteFamily::halfline, InfiniteFamily::line}) {
      const auto r = parabolicity({kind, 2, {}}, line_sizes, p);
      const double factor = kind == InfiniteFamily::line ? 2.0 : 1.0;
      double worst = 0.0;
      for (std::size_t i = 0; i < r.sizes.size(); ++i)
        worst = std::max(worst, rel_err(r.capacities[i], factor * oracle::path_capacity(r.sizes[i], p)));
      const std::string name = to_string(kind);
      c.add(label(name + " classified parabolic", p),
            r.classification == Classification::parabolic ? 1.0 : 0.0, 1.0, 0.0, Relation::equal,
            to_string(r.classification) + ", slope " + fmt(r.slope) + ", final cap " +
                fmt(r.capacities.back()));
      c.add(label(name + " caps vs " + (factor == 2.0 ? "2 k^(1-p)" : "k^(1-p)"), p), worst, 0.0,
            1e-6, Relation::at_most);
    }
    const auto t = parabolicity({InfiniteFamily::tree, 2, {}}, tree_sizes, p);
    double worst = 0.0;
    for (std::size_t i = 0; i < t.sizes.size(); ++i)
      worst = std::max(worst, rel_err(t.capacities[i], oracle::tree_capacity(2, t.sizes[i], p)));
    c.add(label("tree(2) classified hyperbolic", p),
          t.classification == Classification::hyperbolic ? 1.0 : 0.0, 1.0, 0.0, Relation::equal,
          to_string(t.classification) + ", relative change " + fmt(t.relative_change) +
              ", final cap " + fmt(t.capacities.back()));
    c.add(label("tree(2) caps vs series formula", p), worst, 0.0, 1e-6, Relation::at_most);
    if (p == 2.0) {
      c.add("tree(2) p=2 caps nonincreasing", t.nonincreasing ? 1.0 : 0.0, 1.0, 0.0,
            Relation::equal, fmt_list(t.capacities));
      const auto at10 = std::find(t.sizes.begin(), t.sizes.end(), std::size_t{10}) - t.sizes.begin();
      c.add("tree(2,10) p=2 cap within 2% of 1", t.capacities[static_cast<std::size_t>(at10)], 1.0,
            0.02, Relation::relative);
    }
  }
}

struct TreeEnds {
  Truncation t;
  EndProfile profile;
  Exhaustion ex;
};

TreeEnds tree_ends(std::size_t depth) {
  auto t = truncate({InfiniteFamily::tree, 2, {}}, depth);
  auto profile = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
  auto ex = exhaustion(t.graph, t.basepoint, default_radii(2, depth - 1));
  return {std::move(t), std::move(profile), std::move(ex)};
}

void infinity_check(Criterion& c, std::uint64_t) {
  const auto te = tree_ends(10);
  for (double p : kExponents) {
    const auto r = dirichlet_at_infinity(te.t.graph, te.profile, {0.0, 1.0}, te.ex, p);
    c.add(label("tree(2,10) h(root)", p), r.solution[0], 0.5, 1e-6, Relation::absolute);
    if (p == 2.0) {
      c.add("tree(2,10) p=2 h(right child) vs infinite-tree value", r.solution[2], 0.75, 1e-4,
            Relation::absolute);
      c.add("tree(2,10) p=2 h(right child) vs finite-network value", r.solution[2],
            oracle::tree_right_child(10), 1e-8, Relation::absolute);
    }
    for (const auto& tr : r.traces) {
      std::vector<double> shells;
      for (std::size_t i = 0; i < tr.ray.size(); ++i)
        if (tr.free[i]) shells.push_back(tr.deviation[i]);
      c.add(label("trace " + tr.end + " deepest-shell deviation", p), tr.deepest_free_deviation,
            0.02, 0.0, Relation::at_most);
      bool decreasing = shells.size() >= 3;
      for (std::size_t i = shells.size() >= 3 ? shells.size() - 2 : 0; decreasing && i < shells.size(); ++i)
        if (!(shells[i] < shells[i - 1])) decreasing = false;
      const std::vector<double> tail(shells.end() - std::min<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(shells.size())), shells.end());
      c.add(label("trace " + tr.end + " decreasing over last 3 shells", p), decreasing ? 1.0 : 0.0,
            1.0, 0.0, Relation::equal, fmt_list(tail));
    }
  }
}

void royden_check(Criterion& c, std::uint64_t) {
  for (double p : kExponents) {
    double worst_res = 0.0;
    std::vector<double> outer;
    for (std::size_t d : {4, 6, 8}) {
      auto t = truncate({InfiniteFamily::tree, 2, {}}, d);
      auto profile = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
      GraphFunction f(t.graph.num_vertices(), 0.0);
      for (Vertex x = 0; x < f.size(); ++x)
        if (profile.assignment[x] == 1) f[x] = 1.0;
      f = clamp(f, 0.0, 1.0);
      auto ex = exhaustion(t.graph, t.basepoint, default_radii(1, d - 1));
      const auto rd = royden_decompose(t.graph, f, ex, p, {}, &profile);
      worst_res = std::max(worst_res, rd.interior_residual);
      outer.push_back(rd.outer_max);
    }
    c.add(label("tree(2,{4,6,8}) h-residual on interior", p), worst_res, 0.0, 1e-8,
          Relation::at_most);
    const bool decreasing = outer[1] < outer[0] && outer[2] < outer[1];
    c.add(label("tree(2,{4,6,8}) outer-sphere max|g| strictly decreasing", p),
          decreasing ? 1.0 : 0.0, 1.0, 0.0, Relation::equal, fmt_list(outer));

    double sup = 0.0;
    for (std::size_t k : {250, 500, 1000}) {
      auto t = truncate({InfiniteFamily::line, 2, {}}, k);
      GraphFunction f(t.graph.num_vertices());
      for (Vertex x = 0; x < f.size(); ++x) {
        const double m = static_cast<double>(x) - static_cast<double>(k);
        f[x] = (m >= 0 ? 1.0 : 0.5) / (1.0 + std::abs(m));
      }
      auto ex = exhaustion(t.graph, t.basepoint, default_radii(1, k - 1));
      const auto rd = royden_decompose(t.graph, f, ex, p);
      double mean = 0.0;
      for (double v : rd.harmonic) mean += v;
      mean /= static_cast<double>(rd.harmonic.size());
      sup = 0.0;
      for (double v : rd.harmonic) sup = std::max(sup, std::abs(v - mean));
    }
    c.add(label("Z(1000) sup|h - mean(h)|", p), sup, 0.0, 1e-3, Relation::at_most);
  }
}

void stability_check(Criterion& c, std::uint64_t seed) {
  auto rng = stream(seed, 9);
  const double eps = 0.01;
  const auto te = tree_ends(8);
  std::uniform_real_distribution<double> shift(-eps, eps);
  for (double p : kExponents) {
    ExhaustionOptions opts;
    const auto base = dirichlet_at_infinity(te.t.graph, te.profile, {0.0, 1.0}, te.ex, p, opts);
    std::vector<std::vector<double>> perturbed{{eps, 1.0 - eps}, {-eps, 1.0 + eps}, {eps, 1.0 + eps}};
    perturbed.push_back({shift(rng), 1.0 + shift(rng)});
    double worst = 0.0;
    for (const auto& data : perturbed) {
      const auto r = dirichlet_at_infinity(te.t.graph, te.profile, data, te.ex, p, opts);
      for (std::size_t x = 0; x < r.solution.size(); ++x)
        worst = std::max(worst, std::abs(r.solution[x] - base.solution[x]));
    }
    c.add(label("tree(2,8) sup change for end data change 0.01", p), worst,
          eps + 2.0 * opts.solver.tol_update, 0.0, Relation::at_most);
  }
}

void calculus_check(Criterion& c, std::uint64_t seed) {
  auto rng = stream(seed, 10);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  std::size_t product = 0, contraction = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 15)(rng);
    auto g = oracle::random_graph(rng, n, 0.3);
    GraphFunction u(n), v(n), uv(n);
    for (std::size_t x = 0; x < n; ++x) {
      u[x] = value(rng);
      v[x] = i % 10 == 0 ? 1.0 : value(rng);
      uv[x] = u[x] * v[x];
    }
    const auto bound = product_upper_gradient(g, u, v);
    const auto gp = grad(g, uv);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (gp[e] > bound[e] * (1.0 + 1e-12) + 1e-300) ++product;
    double lo = value(rng), hi = value(rng);
    if (lo > hi) std::swap(lo, hi);
    const auto gc = grad(g, clamp(u, lo, hi));
    const auto gu = grad(g, u);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (gc[e] > gu[e]) ++contraction;
  }
  c.add("product_upper_gradient domination violations (200 instances)",
        static_cast<double>(product), 0.0, 0.0, Relation::equal);
  c.add("clamp contraction violations (200 instances)", static_cast<double>(contraction), 0.0, 0.0,
        Relation::equal);
}

void sobolev_check(Criterion& c, std::uint64_t seed) {
  SobolevOptions opts;
  opts.seed = seed;
  for (double p : kExponents) {
    auto g = make_path(2);
    c.add(label("one free vertex on path(2)", p), sobolev_constant(g, one(1), p, opts).value, 2.0,
          1e-12, Relation::absolute);
  }
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    auto g = make_path(n);
    std::vector<bool> interior(n + 1, true);
    interior[0] = interior[n] = false;
    const double value = sobolev_constant(g, VertexSet::from_mask(interior), 2.0, opts).value;
    worst = std::max(worst, std::abs(value - oracle::dirichlet_eigenvalue(g, interior)));
  }
  c.add("p=2 paths n<=8 vs eigen-oracle: worst error", worst, 0.0, 1e-6, Relation::at_most);
  for (double p : kExponents) {
    std::vector<double> values;
    for (std::size_t n : {4, 8, 16, 32}) {
      auto g = make_path(n);
      std::vector<bool> interior(n + 1, true);
      interior[n] = false;
      values.push_back(sobolev_constant(g, VertexSet::from_mask(interior), p, opts).value);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i] < values[i - 1])) decreasing = false;
    c.add(label("halfline {4,8,16,32} strictly decreasing", p), decreasing ? 1.0 : 0.0, 1.0, 0.0,
          Relation::equal, fmt_list(values));
  }
}

struct Entry {
  int id;
  const char* suite;
  const char* title;
  void (*run)(Criterion&, std::uint64_t);
};

const Entry kEntries[] = {
    {1, "capacities", "path capacities n^(1-p)", path_capacities},
    {2, "capacities", "tree capacities by series-parallel reduction", tree_capacities},
    {3, "modulus", "Mod = Cap duality", modulus_duality},
    {4, "solver", "solver vs linear oracle; maximum and comparison principles", solver_oracle},
    {5, "gradient", "energy gradient vs finite differences", gradient_check},
    {6, "parabolicity", "parabolicity classification", parabolicity_check},
    {7, "infinity", "Dirichlet problem at infinity on tree(2,10)", infinity_check},
    {8, "royden", "Royden decomposition", royden_check},
    {9, "stability", "stability under end-data perturbation", stability_check},
    {10, "calculus", "calculus inequalities", calculus_check},
    {11, "sobolev", "Sobolev constant", sobolev_check},
};

std::vector<Criterion> run_entries(const std::vector<const Entry*>& entries, std::uint64_t seed) {
  std::vector<Criterion> out(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    out[i].id = entries[i]->id;
    out[i].title = entries[i]->title;
    try {
      entries[i]->run(out[i], seed);
    } catch (const std::exception& e) {
      out[i].add("completed without error", 0.0, 1.0, 0.0, Relation::equal, e.what());
    }
  });
  return out;
}

std::vector<const Entry*> numeric_entries() {
  std::vector<const Entry*> all;
  for (const auto& e : kEntries) all.push_back(&e);
  return all;
}

Criterion determinism(const std::vector<Criterion>& first, std::uint64_t seed) {
  Criterion c{12, "determinism: identical output across two runs", {}};
  const auto second = run_entries(numeric_entries(), seed);
  for (std::size_t i = 0; i < first.size(); ++i) {
    const bool same = to_json({first[i]}).dump() == to_json({second[i]}).dump();
    c.add("criterion " + std::to_string(first[i].id) + " reproduces byte-identically",
          same ? 1.0 : 0.0, 1.0, 0.0, Relation::equal);
  }
  return c;
}

bool evaluate(double m, double e, double tol, Relation r) {
  if (!std::isfinite(m)) return false;
  switch (r) {
    case Relation::relative: return std::abs(m - e) <= tol * std::abs(e);
    case Relation::absolute: return std::abs(m - e) <= tol;
    case Relation::at_most: return m <= e + tol;
    case Relation::equal: return m == e;
  }
  return false;
}

}  // namespace

bool Criterion::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

void Criterion::add(std::string check, double measured, double expected, double tolerance,
                    Relation relation, std::string note) {
  rows.push_back({std::move(check), measured, expected, tolerance, relation,
                  evaluate(measured, expected, tolerance, relation), std::move(note)});
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::relative: return "rel";
    case Relation::absolute: return "abs";
    case Relation::at_most: return "<=";
    case Relation::equal: return "==";
  }
  return "?";
}

std::vector<std::string> suite_names() {
  return {"capacities", "modulus",  "solver",   "gradient", "parabolicity", "infinity",
          "royden",     "stability", "calculus", "sobolev",  "determinism",  "all"};
}

std::vector<Criterion> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    auto out = run_entries(numeric_entries(), seed);
    out.push_back(determinism(out, seed));
    return out;
  }
  if (name == "determinism") return {determinism(run_entries(numeric_entries(), seed), seed)};
  std::vector<const Entry*> picked;
  for (const auto& e : kEntries)
    if (name == e.suite) picked.push_back(&e);
  if (picked.empty()) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown suite '" + name + "'; known suites: " + known);
  }
  return run_entries(picked, seed);
}

nlohmann::json to_json(const std::vector<Criterion>& criteria) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : criteria)
    for (const auto& r : c.rows)
      rows.push_back({{"criterion", c.id},
                      {"check", r.check},
                      {"measured", r.measured},
                      {"expected", r.expected},
                      {"tolerance", r.tolerance},
                      {"relation", to_string(r.relation)},
                      {"pass", r.pass},
                      {"note", r.note}});
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& c : criteria) summary.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass()}});
  return {{"rows", rows}, {"criteria", summary}};
}

std::string format_table(const std::vector<Criterion>& criteria) {
  std::string out;
  char buf[512];
  for (const auto& c : criteria) {
    std::snprintf(buf, sizeof buf, "[%s] criterion %d: %s\n", c.pass() ? "PASS" : "FAIL", c.id,
                  c.title.c_str());
    out += buf;
    for (const auto& r : c.rows) {
      std::snprintf(buf, sizeof buf, "    %s  %-58s measured %-14.8g expected %-10.6g %s tol %.1e%s%s\n",
                    r.pass ? "ok  " : "FAIL", r.check.c_str(), r.measured, r.expected,
                    to_string(r.relation).c_str(), r.tolerance, r.note.empty() ? "" : "  | ",
                    r.note.c_str());
      out += buf;
    }
  }
  return out;
}

}  // namespace proyden::acceptance
