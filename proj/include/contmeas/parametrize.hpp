#pragma once

#include "contmeas/graph.hpp"
#include "contmeas/path.hpp"

namespace contmeas {

/// Partial coverage of a graph: per edge, merged sub-intervals of [0,1].
struct Coverage {
  std::vector<std::vector<std::pair<double, double>>> intervals;

  explicit Coverage(size_t n_edges = 0) : intervals(n_edges) {}
  void add(int edge, double a, double b);
  bool contains(int edge, double s, double tol = 1e-12) const;
  /// Uncovered arc length on one edge, given its Euclidean length.
  double uncovered_measure(int edge, double edge_len) const;
  bool complete(const EmbeddedGraph& g, double tol = 1e-11) const;
  bool empty() const;
};

struct ParametrizationResult {
  PolylinePath path;       // closed, constant speed
  TraversalLedger ledger;  // forward = backward = 1 on every edge
  int iterations = 0;
  std::vector<double> spur_lengths;
};

/// The iterative double-cover construction: doubled geodesic from the
/// seed vertex to the farthest point, then repeated farthest-point spurs
/// joined in until the graph is covered.
ParametrizationResult canonical_parametrization(const EmbeddedGraph& g);

/// Independent oracle: depth-first Euler tour of the bidirected graph.
ParametrizationResult double_cover_euler(const EmbeddedGraph& g);

struct FarthestPoint {
  GraphPoint point;
  double distance = 0.0;
};

/// Graph point of maximum intrinsic distance to the covered set.
/// Throws when nothing is uncovered.
FarthestPoint farthest_uncovered_point(const EmbeddedGraph& g,
                                       const Coverage& covered);

/// Whole-edge coverage view: an edge counts as covered when the ledger
/// records at least one pass.
FarthestPoint farthest_uncovered_point(const EmbeddedGraph& g,
                                       const TraversalLedger& covered);

}  // namespace contmeas
