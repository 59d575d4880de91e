#pragma once

#include "contmeas/graph.hpp"

namespace contmeas {

/// A connected union of per-edge sub-intervals with diameter <= delta.
struct PartitionPiece {
  const EmbeddedGraph* parent = nullptr;
  // per edge, disjoint sub-intervals [a,b] of [0,1]
  std::vector<std::vector<std::pair<double, double>>> intervals;
  double diameter = 0.0;
  double measure = 0.0;
};

struct DeltaPartition {
  std::vector<PartitionPiece> pieces;
  double delta = 0.0;
};

/// Greedy region growing over cells of size delta/8; covers the graph
/// exactly. Requires a connected validated graph.
DeltaPartition delta_partition(const EmbeddedGraph& g, double delta);

/// Sum of piece diameters; always <= h1 of the parent graph.
double diameter_sum(const DeltaPartition& p);

/// Certified lower bound for L_delta: best diameter sum over the greedy
/// partition, a diameter-steered variant and boundary refinements.
double l_delta_lower_bound(const EmbeddedGraph& g, double delta);

/// Exhaustive maximum of the diameter sum over families of disjoint
/// connected unions of resolution-cells with diameter <= delta.
/// Instances are capped at 64 cells total.
double l_delta_bruteforce(const EmbeddedGraph& g, double delta, int resolution);

}  // namespace contmeas
