#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "acceptance.hpp"
#include "io.hpp"
#include "proyden/boundary.hpp"
#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"
#include "proyden/modulus.hpp"
#include "proyden/parabolicity.hpp"
#include "proyden/sobolev.hpp"

#ifndef PROYDEN_VERSION
#define PROYDEN_VERSION "0.0.0"
#endif

using namespace proyden;
using io::json;

namespace {

struct Common {
  double p = 2.0;
  SolverOptions solver{};
  std::string out;
  std::uint64_t seed = 1;
};

struct Outcome {
  json result;
  json reports = json::object();
  bool ok = true;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "exponent p > 1");
  cmd->add_option("--tol-update", c.solver.tol_update, "stop when the largest vertex update is below this");
  cmd->add_option("--tol-residual", c.solver.tol_residual, "and the p-Laplacian residual is below this");
  cmd->add_option("--max-sweeps", c.solver.max_sweeps, "sweep limit per solve");
  cmd->add_option("--out", c.out, "write the result bundle here instead of stdout");
  cmd->add_option("--seed", c.seed, "seed for randomized parts");
}

json config_of(const Common& c) {
  return {{"p", c.p}, {"solver", io::to_json(c.solver)}, {"seed", c.seed}};
}

VertexSet id_set(const WeightedGraph& g, const std::string& text) {
  std::vector<Vertex> out;
  for (auto id : io::parse_id_list(text)) out.push_back(g.index_of(id));
  return VertexSet(std::move(out));
}

std::vector<double> default_graph_radii(const WeightedGraph& g, Vertex o) {
  const auto dist = distances_from(g, o);
  const double reach = *std::max_element(dist.begin(), dist.end());
  const auto last = static_cast<std::size_t>(std::max(1.0, std::ceil(reach) - 1.0));
  std::vector<double> radii;
  for (double r : default_radii(1, last))
    if (metric_ball(g, o, r).size() < g.num_vertices()) radii.push_back(r);
  if (radii.empty()) throw InvalidArgument("graph too small for a default exhaustion; pass --radii");
  return radii;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete p-potential theory on weighted graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PROYDEN_VERSION);
  Common common;
  json config;
  std::function<Outcome()> action;
  std::string command;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a canonical graph as JSON");
  std::string gen_family;
  std::vector<std::size_t> gen_args;
  WeightOverrides weights;
  gen->add_option("family", gen_family, "path | halfline | cycle | tree | grid")->required();
  gen->add_option("params", gen_args, "n | n | n | b depth | w h")->required();
  gen->add_option("--measure", weights.measure);
  gen->add_option("--conductance", weights.conductance);
  gen->add_option("--length", weights.length);
  gen->add_option("--out", common.out);
  gen->callback([&] {
    command = "gen";
    action = [&]() -> Outcome {
      FamilyParams fp;
      fp.family = parse_family(gen_family);
      const std::size_t need = (fp.family == GraphFamily::tree || fp.family == GraphFamily::grid) ? 2 : 1;
      if (gen_args.size() != need)
        throw io::ParseError("gen " + gen_family + ": expected " + std::to_string(need) + " size parameter(s)");
      if (fp.family == GraphFamily::tree) {
        fp.b = gen_args[0];
        fp.n = gen_args[1];
      } else {
        fp.n = gen_args[0];
        if (fp.family == GraphFamily::grid) fp.height = gen_args[1];
      }
      return {io::graph_to_json(generate(fp, weights))};
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "p-Dirichlet problem with pinned values");
  std::string graph_path, pins_text;
  add_common(solve, common);
  solve->add_option("--pin", pins_text, "pinned values as id=value,...")->required();
  solve->add_option("graph", graph_path)->required();
  solve->callback([&] {
    command = "solve";
    config = config_of(common);
    config["graph"] = graph_path;
    config["pins"] = pins_text;
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      std::vector<std::pair<Vertex, double>> pins;
      for (auto [id, v] : io::parse_pins(pins_text)) pins.emplace_back(g.index_of(id), v);
      auto sol = solve_dirichlet(g, pinned_problem(g, pins, common.p, common.solver));
      return {{{"values", sol.values}, {"ids", g.ids()}},
              {{"solve", io::to_json(sol.report)}},
              sol.report.converged};
    };
  });

  // capacity / modulus
  std::string source_text, sink_text, route = "dual";
  ModulusOptions mod_opts;
  auto* cap = app.add_subcommand("capacity", "condenser capacity between two vertex sets");
  add_common(cap, common);
  cap->add_option("--source", source_text, "ids with value 1")->required();
  cap->add_option("--sink", sink_text, "ids with value 0")->required();
  cap->add_option("graph", graph_path)->required();
  cap->callback([&] {
    command = "capacity";
    config = config_of(common);
    config["graph"] = graph_path;
    config["source"] = source_text;
    config["sink"] = sink_text;
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      auto r = capacity(g, id_set(g, source_text), id_set(g, sink_text), common.p, common.solver);
      auto j = io::to_json(r);
      json rep = {{"solve", j["report"]}};
      j.erase("report");
      return {j, rep, r.report.converged};
    };
  });
  auto* mod = app.add_subcommand("modulus", "p-modulus of the connecting path family");
  add_common(mod, common);
  mod->add_option("--source", source_text)->required();
  mod->add_option("--sink", sink_text)->required();
  mod->add_option("--route", route, "dual | direct")->check(CLI::IsMember({"dual", "direct"}));
  mod->add_option("--path-cap", mod_opts.path_cap, "refuse the direct route beyond this many paths");
  mod->add_option("graph", graph_path)->required();
  mod->callback([&] {
    command = "modulus";
    config = config_of(common);
    config["graph"] = graph_path;
    config["source"] = source_text;
    config["sink"] = sink_text;
    config["route"] = route;
    config["path_cap"] = mod_opts.path_cap;
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      mod_opts.solver = common.solver;
      auto r = modulus(g, id_set(g, source_text), id_set(g, sink_text), common.p,
                       route == "dual" ? ModulusRoute::dual : ModulusRoute::direct, mod_opts);
      return {io::to_json(r), json::object(), r.converged};
    };
  });

  // parabolic / probe
  std::string family_name;
  std::string sizes_text;
  std::size_t branching = 2;
  ParabolicityThresholds thresholds;
  auto family_options = [&](CLI::App* cmd) {
    cmd->add_option("--family", family_name, "halfline | z | tree | grid")->required();
    cmd->add_option("--b", branching, "tree branching");
    cmd->add_option("--sigma", thresholds.slope, "parabolic slope threshold");
    cmd->add_option("--eps-par", thresholds.eps_par, "capacity threshold");
    cmd->add_option("--delta", thresholds.delta, "hyperbolic relative-change threshold");
    cmd->add_option("--window", thresholds.window, "levels in the relative-change window");
  };
  auto family_config = [&] {
    config["family"] = family_name;
    config["b"] = branching;
    config["thresholds"] = io::to_json(thresholds);
  };
  auto sizes_of = [&]() {
    std::vector<std::size_t> out;
    for (auto v : io::parse_id_list(sizes_text)) {
      if (v <= 0) throw io::ParseError("--sizes: sizes must be positive");
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  };
  auto* para = app.add_subcommand("parabolic", "classify a family as p-parabolic or hyperbolic");
  add_common(para, common);
  family_options(para);
  para->add_option("--sizes", sizes_text, "increasing truncation sizes, comma separated")->required();
  para->callback([&] {
    command = "parabolic";
    config = config_of(common);
    family_config();
    config["sizes"] = sizes_text;
    action = [&]() -> Outcome {
      FamilySpec fam{parse_infinite_family(family_name), branching, {}};
      auto r = parabolicity(fam, sizes_of(), common.p, thresholds, common.solver);
      auto j = io::to_json(r);
      json rep = {{"levels", j["reports"]}};
      j.erase("reports");
      return {j, rep, r.classification != Classification::undetermined};
    };
  });
  auto* probe = app.add_subcommand("probe", "harmonic-boundary cardinality probe");
  add_common(probe, common);
  family_options(probe);
  probe->add_option("--sizes", sizes_text, "truncation sizes (family default if omitted)");
  probe->callback([&] {
    command = "probe";
    config = config_of(common);
    family_config();
    config["sizes"] = sizes_text;
    action = [&]() -> Outcome {
      FamilySpec fam{parse_infinite_family(family_name), branching, {}};
      ProbeOptions po;
      if (!sizes_text.empty()) po.sizes = sizes_of();
      po.thresholds = thresholds;
      po.exhaustion.solver = common.solver;
      auto r = boundary_cardinality_probe(fam, common.p, po);
      return {io::to_json(r)};
    };
  });

  // sobolev
  std::string interior_text, pinned_text;
  SobolevOptions sob;
  auto* sobo = app.add_subcommand("sobolev", "Dirichlet Sobolev constant of a vertex set");
  add_common(sobo, common);
  auto* interior_opt = sobo->add_option("--interior", interior_text, "ids of the support set");
  sobo->add_option("--pinned", pinned_text, "ids held at zero (support is the rest)")->excludes(interior_opt);
  sobo->add_option("--starts", sob.starts, "number of starts");
  sobo->add_option("graph", graph_path)->required();
  sobo->callback([&] {
    command = "sobolev";
    config = config_of(common);
    config["graph"] = graph_path;
    config["interior"] = interior_text;
    config["pinned"] = pinned_text;
    config["starts"] = sob.starts;
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      VertexSet interior;
      if (!interior_text.empty()) interior = id_set(g, interior_text);
      else if (!pinned_text.empty()) interior = id_set(g, pinned_text).complement(g.num_vertices());
      else throw io::ParseError("sobolev: pass --interior or --pinned");
      sob.seed = common.seed;
      auto r = sobolev_constant(g, interior, common.p, sob);
      return {io::to_json(r), json::object(), r.converged};
    };
  });

  // exhaust / decompose
  std::string f_path, radii_text;
  std::int64_t basepoint_id = 0;
  bool have_basepoint = false;
  ExhaustionOptions ex_opts;
  auto exhaustion_options = [&](CLI::App* cmd) {
    add_common(cmd, common);
    cmd->add_option("--f", f_path, "function JSON (array or {\"values\": [...]})")->required();
    cmd->add_option("--basepoint", basepoint_id, "basepoint id (default: least id)")
        ->each([&](const std::string&) { have_basepoint = true; });
    cmd->add_option("--radii", radii_text, "increasing radius schedule");
    cmd->add_option("--cauchy-tol", ex_opts.cauchy_tolerance, "Cauchy tolerance relative to osc f");
    cmd->add_option("graph", graph_path)->required();
  };
  auto exhaustion_setup = [&](const WeightedGraph& g) {
    const Vertex o = have_basepoint ? g.index_of(basepoint_id) : 0;
    auto radii = radii_text.empty() ? default_graph_radii(g, o) : io::parse_real_list(radii_text);
    ex_opts.solver = common.solver;
    return exhaustion(g, o, radii);
  };
  auto exhaustion_config = [&] {
    config = config_of(common);
    config["graph"] = graph_path;
    config["f"] = f_path;
    config["radii"] = radii_text;
    config["basepoint"] = have_basepoint ? json(basepoint_id) : json(nullptr);
    config["cauchy_tolerance"] = ex_opts.cauchy_tolerance;
  };
  auto* exh = app.add_subcommand("exhaust", "exhaustion solve with limit extraction");
  exhaustion_options(exh);
  exh->callback([&] {
    command = "exhaust";
    exhaustion_config();
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      auto f = io::load_function(f_path, g.num_vertices());
      auto ex = exhaustion_setup(g);
      auto r = exhaustion_solve(g, f, ex, common.p, ex_opts);
      auto j = io::to_json(r, g);
      json rep = {{"levels", j["reports"]}, {"exhaustion_warnings", ex.warnings}};
      j.erase("reports");
      return {j, rep, r.cauchy};
    };
  });
  auto* dec = app.add_subcommand("decompose", "Royden decomposition f = g + h");
  exhaustion_options(dec);
  dec->callback([&] {
    command = "decompose";
    exhaustion_config();
    action = [&]() -> Outcome {
      auto g = io::load_graph(graph_path);
      auto f = io::load_function(f_path, g.num_vertices());
      auto ex = exhaustion_setup(g);
      RoydenDecomposition r;
      try {
        r = royden_decompose(g, f, ex, common.p, ex_opts);
      } catch (const NotCauchyError& e) {
        // Report what the exhaustion produced; the run still fails.
        std::cerr << "error: " << e.what() << "\n";
        auto j = io::to_json(e.partial(), g);
        json rep = {{"levels", j["reports"]}, {"exhaustion_warnings", ex.warnings}};
        j.erase("reports");
        return {json{{"error", e.what()}, {"exhaustion", j}}, rep, false};
      }
      auto j = io::to_json(r, g);
      json rep = {{"levels", j["exhaustion"]["reports"]}, {"exhaustion_warnings", ex.warnings}};
      j["exhaustion"].erase("reports");
      return {j, rep, true};
    };
  });

  // at-infinity
  std::size_t depth = 0;
  std::string ends_text;
  auto* inf = app.add_subcommand("at-infinity", "Dirichlet problem at infinity with end data");
  add_common(inf, common);
  inf->add_option("--family", family_name, "halfline | z | tree | grid")->required();
  inf->add_option("--b", branching, "tree branching");
  inf->add_option("--depth,--size", depth, "truncation size")->required();
  inf->add_option("--ends", ends_text, "end data as name=value,...")->required();
  inf->add_option("--radii", radii_text, "exhaustion radii (default: group radius + 1 up to size - 1)");
  inf->add_option("--cauchy-tol", ex_opts.cauchy_tolerance);
  inf->callback([&] {
    command = "at-infinity";
    config = config_of(common);
    config["family"] = family_name;
    config["b"] = branching;
    config["depth"] = depth;
    config["ends"] = ends_text;
    config["radii"] = radii_text;
    config["cauchy_tolerance"] = ex_opts.cauchy_tolerance;
    action = [&]() -> Outcome {
      auto t = truncate({parse_infinite_family(family_name), branching, {}}, depth);
      auto profile = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
      std::vector<double> data(profile.ends.size(), 0.0);
      std::vector<bool> given(profile.ends.size(), false);
      for (auto [name, v] : io::parse_named_values(ends_text)) {
        const auto e = profile.find(name);
        data[e] = v;
        given[e] = true;
      }
      for (std::size_t e = 0; e < given.size(); ++e)
        if (!given[e]) throw io::ParseError("--ends: no value for end '" + profile.ends[e].name + "'");
      std::vector<double> radii;
      if (!radii_text.empty()) {
        radii = io::parse_real_list(radii_text);
      } else {
        const auto first = static_cast<std::size_t>(t.group_radius) + 1;
        const auto dist = distances_from(t.graph, t.basepoint);
        const auto reach = static_cast<std::size_t>(*std::max_element(dist.begin(), dist.end()));
        if (reach < first + 1) throw InvalidArgument("truncation too small for an exhaustion");
        radii = default_radii(first, reach - 1);
      }
      auto ex = exhaustion(t.graph, t.basepoint, radii);
      ex_opts.solver = common.solver;
      AtInfinityResult r;
      try {
        r = dirichlet_at_infinity(t.graph, profile, data, ex, common.p, ex_opts);
      } catch (const NotCauchyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        auto j = io::to_json(e.partial(), t.graph);
        json rep = {{"levels", j["reports"]}};
        j.erase("reports");
        return {json{{"error", e.what()}, {"exhaustion", j}}, rep, false};
      }
      auto j = io::to_json(r, t.graph);
      json names = json::array();
      for (const auto& e : profile.ends) names.push_back(e.name);
      j["ends"] = names;
      json rep = {{"levels", j["exhaustion"]["reports"]}, {"extension", j["extension_report"]}};
      j["exhaustion"].erase("reports");
      j.erase("extension_report");
      return {j, rep, true};
    };
  });

  // acceptance
  std::string suite;
  bool as_json = false;
  auto* acc = app.add_subcommand("acceptance", "run acceptance checks");
  acc->add_option("suite", suite, "capacities | modulus | ... | all")->required();
  acc->add_flag("--json", as_json, "emit the JSON bundle instead of a table");
  acc->add_option("--out", common.out);
  acc->add_option("--seed", common.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto emit = [&](const std::string& text) {
    if (common.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(common.out);
    if (!out) {
      std::cerr << "error: cannot write " << common.out << "\n";
      std::exit(1);
    }
    out << text;
  };

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  if (acc->parsed()) {
    std::vector<acceptance::Criterion> criteria;
    try {
      criteria = acceptance::run_suite(suite, common.seed);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    const bool all_pass = std::all_of(criteria.begin(), criteria.end(),
                                      [](const auto& c) { return c.pass(); });
    if (as_json) {
      json bundle = {{"command", "acceptance"},
                     {"config", {{"suite", suite}, {"seed", common.seed}}},
                     {"result", acceptance::to_json(criteria)},
                     {"reports", json::object()},
                     {"wall_time_s", elapsed()},
                     {"version", PROYDEN_VERSION}};
      emit(io::dump(bundle));
    } else {
      emit(acceptance::format_table(criteria));
    }
    return all_pass ? 0 : 2;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GraphError& e) {
    std::cerr << "error: invalid graph: " << e.what() << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (command == "gen") {
    emit(io::dump(outcome.result));
    return 0;
  }
  json bundle = {{"command", command},
                 {"config", config},
                 {"result", outcome.result},
                 {"reports", outcome.reports},
                 {"wall_time_s", elapsed()},
                 {"version", PROYDEN_VERSION}};
  emit(io::dump(bundle));
  return outcome.ok ? 0 : 2;
}
