#include "proyden/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>

namespace proyden {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double slack(double r) { return 1e-12 * std::max(1.0, std::abs(r)); }

void check_vertex(const WeightedGraph& g, Vertex o) {
  if (o >= g.num_vertices()) throw InvalidArgument("basepoint is not a vertex of the graph");
}

// Components of the subgraph induced by `inside`, each as a sorted vertex list,
// ordered by least vertex.
std::vector<std::vector<Vertex>> components(const WeightedGraph& g,
                                            const std::vector<bool>& inside) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (!inside[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      comp.push_back(x);
      for (const Neighbor& nb : g.neighbors(x)) {
        if (inside[nb.vertex] && !seen[nb.vertex]) {
          seen[nb.vertex] = true;
          queue.push(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void check_increasing(const std::vector<double>& radii, const char* what) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || radii[i] < 0.0) {
      throw InvalidArgument(std::string(what) + ": radii must be finite and nonnegative");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw InvalidArgument(std::string(what) + ": radius schedule is not strictly increasing");
    }
  }
}

std::vector<std::ptrdiff_t> assign(std::size_t n, const std::vector<End>& ends) {
  std::vector<std::ptrdiff_t> a(n, -1);
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (Vertex x : ends[i].region) a[x] = static_cast<std::ptrdiff_t>(i);
  return a;
}

}  // namespace

std::vector<double> distances_from(const WeightedGraph& g, Vertex o) {
  check_vertex(g, o);
  std::vector<double> dist(g.num_vertices(), kInf);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[o] = 0.0;
  heap.emplace(0.0, o);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const Neighbor& nb : g.neighbors(x)) {
      const double nd = d + g.edge(nb.edge).length;
      if (nd < dist[nb.vertex]) {
        dist[nb.vertex] = nd;
        heap.emplace(nd, nb.vertex);
      }
    }
  }
  return dist;
}

VertexSet metric_ball(const WeightedGraph& g, Vertex o, double r) {
  if (!(r >= 0.0)) throw InvalidArgument("metric_ball: radius must be nonnegative");
  const auto dist = distances_from(g, o);
  std::vector<Vertex> ball;
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (dist[x] <= r + slack(r)) ball.push_back(x);
  return VertexSet(std::move(ball));
}

Exhaustion exhaustion(const WeightedGraph& g, Vertex o, std::vector<double> radii) {
  if (radii.empty()) throw InvalidArgument("exhaustion: empty radius schedule");
  check_increasing(radii, "exhaustion");
  const auto dist = distances_from(g, o);
  Exhaustion ex;
  ex.basepoint = o;
  for (double r : radii) {
    std::vector<Vertex> level;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
      if (dist[x] <= r + slack(r)) level.push_back(x);
    ex.levels.emplace_back(std::move(level));
  }
  ex.radii = std::move(radii);
  if (ex.levels.back().size() != g.num_vertices()) {
    ex.warnings.push_back("final level covers " + std::to_string(ex.levels.back().size()) +
                          " of " + std::to_string(g.num_vertices()) + " vertices");
  }
  return ex;
}

std::size_t EndProfile::find(const std::string& name) const {
  for (std::size_t i = 0; i < ends.size(); ++i)
    if (ends[i].name == name) return i;
  throw InvalidArgument("no end named '" + name + "'");
}

VertexSet outer_sphere(const WeightedGraph& g, Vertex o) {
  const auto dist = distances_from(g, o);
  const double far = *std::max_element(dist.begin(), dist.end());
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x)
    if (dist[x] >= far - slack(far)) out.push_back(x);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> far_components(const WeightedGraph& g, Vertex o, double radius,
                                      const std::optional<VertexSet>& frontier) {
  const auto dist = distances_from(g, o);
  const VertexSet front = frontier ? *frontier : outer_sphere(g, o);
  std::vector<bool> inside(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) inside[x] = dist[x] >= radius - slack(radius);
  std::vector<VertexSet> out;
  for (auto& comp : components(g, inside)) {
    const bool unbounded = std::any_of(comp.begin(), comp.end(),
                                       [&](Vertex x) { return front.contains(x); });
    if (unbounded) out.emplace_back(std::move(comp));
  }
  return out;
}

EndProfile ends(const WeightedGraph& g, Vertex o, std::vector<double> probe_radii,
                const std::optional<VertexSet>& frontier) {
  if (probe_radii.size() < 2) throw InvalidArgument("ends: at least two probe radii required");
  check_increasing(probe_radii, "ends");
  check_vertex(g, o);
  const VertexSet front = frontier ? *frontier : outer_sphere(g, o);

  EndProfile profile;
  profile.basepoint = o;
  std::vector<VertexSet> previous;
  for (std::size_t i = 0; i < probe_radii.size(); ++i) {
    auto comps = far_components(g, o, probe_radii[i], front);
    profile.counts.push_back(comps.size());
    if (i > 0) {
      std::vector<std::size_t> parent(comps.size(), 0);
      for (std::size_t j = 0; j < comps.size(); ++j) {
        const Vertex probe = *comps[j].begin();
        for (std::size_t k = 0; k < previous.size(); ++k) {
          if (previous[k].contains(probe)) {
            parent[j] = k;
            break;
          }
        }
      }
      profile.parents.push_back(std::move(parent));
    }
    previous = std::move(comps);
  }
  profile.probe_radii = std::move(probe_radii);
  const auto c = profile.counts.size();
  profile.stable = profile.counts[c - 1] == profile.counts[c - 2] && profile.counts[c - 1] > 0;
  for (std::size_t j = 0; j < previous.size(); ++j)
    profile.ends.push_back({"e" + std::to_string(j), std::move(previous[j])});
  profile.assignment = assign(g.num_vertices(), profile.ends);
  return profile;
}

EndProfile group_ends(const WeightedGraph& g, Vertex o, double radius,
                      const std::vector<std::pair<std::string, std::vector<std::size_t>>>& groups,
                      const std::optional<VertexSet>& frontier) {
  check_vertex(g, o);
  auto comps = far_components(g, o, radius, frontier);
  std::vector<int> used(comps.size(), 0);
  EndProfile profile;
  profile.basepoint = o;
  profile.probe_radii = {radius};
  profile.counts = {comps.size()};
  profile.grouped = true;
  for (const auto& [name, members] : groups) {
    if (members.empty()) throw InvalidArgument("end group '" + name + "' is empty");
    std::vector<Vertex> region;
    for (std::size_t idx : members) {
      if (idx >= comps.size()) {
        throw InvalidArgument("end group '" + name + "' references component " +
                              std::to_string(idx) + " but only " + std::to_string(comps.size()) +
                              " exist at radius " + std::to_string(radius));
      }
      ++used[idx];
      region.insert(region.end(), comps[idx].begin(), comps[idx].end());
    }
    profile.ends.push_back({name, VertexSet(std::move(region))});
  }
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (used[j] != 1) {
      throw InvalidArgument("end grouping must use component " + std::to_string(j) +
                            " exactly once");
    }
  }
  profile.stable = !profile.ends.empty();
  profile.assignment = assign(g.num_vertices(), profile.ends);
  return profile;
}

std::vector<Vertex> canonical_ray(const WeightedGraph& g, Vertex o, const VertexSet& region) {
  if (region.empty()) throw InvalidArgument("canonical_ray: empty region");
  const auto from_o = distances_from(g, o);
  Vertex target = *region.begin();
  for (Vertex x : region)
    if (from_o[x] > from_o[target] + slack(from_o[target])) target = x;
  const auto to_target = distances_from(g, target);
  const double total = from_o[target];

  std::vector<Vertex> ray{o};
  Vertex x = o;
  while (x != target) {
    Vertex next = x;
    for (const Neighbor& nb : g.neighbors(x)) {
      const double len = g.edge(nb.edge).length;
      const double tol = slack(total) * 16;
      const bool forward = std::abs(from_o[nb.vertex] - from_o[x] - len) <= tol;
      const bool on_geodesic = std::abs(from_o[nb.vertex] + to_target[nb.vertex] - total) <= tol;
      if (forward && on_geodesic) {
        next = nb.vertex;  // neighbors are sorted, so the first hit is the least id
        break;
      }
    }
    if (next == x) throw SolveError("canonical_ray: geodesic walk stalled");
    ray.push_back(next);
    x = next;
  }
  return ray;
}

}  // namespace proyden
