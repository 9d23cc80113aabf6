#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proyden/dirichlet.hpp"
#include "proyden/family.hpp"
#include "proyden/parabolicity.hpp"
#include "proyden/topology.hpp"

namespace proyden {

struct ExhaustionOptions {
  SolverOptions solver{};
  /// Cauchy tolerance relative to the oscillation max f - min f.
  double cauchy_tolerance = 0.1;
  /// Compacts for local-uniform convergence; defaults to the exhaustion levels.
  std::optional<std::vector<VertexSet>> witnesses{};
};

struct ExhaustionSolveResult {
  /// h_k: solution on level k, equal to f outside it.
  std::vector<GraphFunction> levels;
  std::vector<SolveReport> reports;
  std::vector<VertexSet> witnesses;
  /// deviations[k][j] = max over witness j of |h_k - h_{k-1}|; row 0 is zero.
  std::vector<std::vector<double>> deviations;
  /// Indices of the levels kept by the limit extraction, increasing.
  std::vector<std::size_t> selected;
  GraphFunction limit;
  double tolerance = 0.0;
  /// True when the selected subsequence (at least two levels) has consecutive
  /// deviations below tolerance and nonincreasing on every witness.
  bool cauchy = false;
  /// True when the selection is a full tail of the level sequence.
  bool tail_cauchy = false;
  std::vector<double> energies;
  double data_energy = 0.0;
  /// E_p(h_k) <= E_p(f) and min f <= h_k <= max f at every level.
  bool energy_bounded = true;
  bool range_bounded = true;
};

/// Solves the Dirichlet problem on each level with f pinned outside it,
/// warm-starting every level from the previous one, and extracts a limit.
///
/// Throws SolveError naming the level if a level covers the whole graph,
/// is ill-posed, or does not converge.
ExhaustionSolveResult exhaustion_solve(const WeightedGraph& g, const GraphFunction& f,
                                       const Exhaustion& ex, double p,
                                       const ExhaustionOptions& options = {});

/// Raised by operations that need a Cauchy exhaustion; carries the partial result.
class NotCauchyError : public SolveError {
 public:
  NotCauchyError(const std::string& what, ExhaustionSolveResult partial)
      : SolveError(what), partial_(std::move(partial)) {}
  const ExhaustionSolveResult& partial() const { return partial_; }

 private:
  ExhaustionSolveResult partial_;
};

struct EndMaximum {
  std::string end;
  double value = 0.0;
};

struct RoydenDecomposition {
  GraphFunction f;
  /// Harmonic part: the exhaustion limit.
  GraphFunction harmonic;
  /// Potential part f - harmonic.
  GraphFunction potential;
  /// Free set of the deepest selected level and the residual of h on it.
  VertexSet interior;
  double interior_residual = 0.0;
  /// Vertices of the deepest level at maximal distance from the basepoint.
  VertexSet outer_sphere;
  double outer_max = 0.0;
  /// max |g| over the outer sphere within each end; empty without an end profile.
  std::vector<EndMaximum> outer_max_by_end;
  /// (sum_x mu(x) |g(x)|^p)^(1/p).
  double potential_norm = 0.0;
  ExhaustionSolveResult exhaustion;
};

/// f = g + h with h the exhaustion limit. Throws NotCauchyError otherwise.
RoydenDecomposition royden_decompose(const WeightedGraph& g, const GraphFunction& f,
                                     const Exhaustion& ex, double p,
                                     const ExhaustionOptions& options = {},
                                     const EndProfile* profile = nullptr);

struct EndTrace {
  std::string end;
  double data = 0.0;
  /// Canonical ray from the basepoint into the end.
  std::vector<Vertex> ray;
  std::vector<double> depth;
  /// |h - data| along the ray.
  std::vector<double> deviation;
  /// Whether each ray vertex is free on the deepest level.
  std::vector<bool> free;
  /// Deviation at the last free ray vertex (0 if none is free).
  double deepest_free_deviation = 0.0;
};

struct AtInfinityResult {
  GraphFunction solution;
  /// Boundary data extended to the whole graph.
  GraphFunction extension;
  SolveReport extension_report;
  ExhaustionSolveResult exhaustion;
  std::vector<EndTrace> traces;
};

/// Exhaustion solution with prescribed values on each end.
///
/// `data` is aligned with profile.ends. Throws InvalidArgument for unstable
/// ends, mismatched data or an exhaustion not reaching past the probe radius,
/// and NotCauchyError if the limit extraction fails.
AtInfinityResult dirichlet_at_infinity(const WeightedGraph& g, const EndProfile& profile,
                                       const std::vector<double>& data, const Exhaustion& ex,
                                       double p, const ExhaustionOptions& options = {});

/// Integer radii from start to last: all of them when few, otherwise a
/// geometric schedule of about `levels` radii ending at last.
std::vector<double> default_radii(std::size_t start, std::size_t last, std::size_t levels = 12);

enum class BoundaryKind { empty, trivial, rich };

struct ProbeWitness {
  std::string first;
  std::string second;
  GraphFunction solution;
  double oscillation = 0.0;
  bool nonconstant = false;
};

struct ProbeOptions {
  /// Truncation sizes for parabolicity; empty picks a family default.
  std::vector<std::size_t> sizes;
  ParabolicityThresholds thresholds{};
  ExhaustionOptions exhaustion{};
};

struct ProbeResult {
  BoundaryKind kind = BoundaryKind::empty;
  /// Number of end groups told apart by some witness.
  std::size_t distinguished = 0;
  ParabolicityResult parabolicity;
  std::size_t truncation_size = 0;
  std::vector<ProbeWitness> witnesses;
};

/// Parabolic families report an empty harmonic boundary. Otherwise every pair
/// of end groups of the largest truncation gets indicator data; a nonconstant
/// solution (oscillation > 10 tol_update) separates the pair.
ProbeResult boundary_cardinality_probe(const FamilySpec& family, double p,
                                       const ProbeOptions& options = {});

std::vector<std::size_t> default_probe_sizes(InfiniteFamily kind);

std::string to_string(BoundaryKind kind);

}  // namespace proyden
