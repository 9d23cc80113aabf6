#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "proyden/graph.hpp"

namespace proyden::oracle {

/// Seeded connected graph: random spanning tree plus extra edges with
/// probability `density`; weights uniform in [lo, hi].
WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density,
                           double lo = 0.5, double hi = 2.0, bool unit_lengths = false);

WeightedGraph triangle();
/// Cycle 0-1-2-3-0 with chord 0-2.
WeightedGraph four_cycle_with_chord();
/// Center 0 joined to leaves 1..k.
WeightedGraph star(std::size_t leaves);

/// p = 2 Dirichlet problem by a dense linear solve (column-pivoting QR).
GraphFunction dense_harmonic(const WeightedGraph& g, const std::vector<bool>& free,
                             const GraphFunction& data);

/// Smallest eigenvalue of L v = lambda M v on the interior (zero outside),
/// L the weighted Laplacian, M = diag(mu).
double dirichlet_eigenvalue(const WeightedGraph& g, const std::vector<bool>& interior);

/// Minimizes sum c |du|^p over the free values by nested grid search with
/// successive refinement (at most 3 free vertices).
GraphFunction brute_force_minimizer(const WeightedGraph& g, const std::vector<bool>& free,
                                    const GraphFunction& data, double p);

/// cap of the endpoints of path(n): n^(1-p).
double path_capacity(std::size_t n, double p);

/// cap({root}, level n) of tree(b, n): (sum_{k<n} (b^(k+1))^(-1/(p-1)))^(1-p).
double tree_capacity(std::size_t b, std::size_t n, double p);

/// h(right child) on tree(2, depth) with left leaves 0 and right leaves 1, p = 2.
double tree_right_child(std::size_t depth);

/// Central differences of the regularized p-energy; the step at each vertex
/// is min(1e-4, 0.01 * smallest incident sqrt(du^2 + eps^2)).
GraphFunction fd_gradient(const WeightedGraph& g, const GraphFunction& u, double p, double eps);

}  // namespace proyden::oracle
