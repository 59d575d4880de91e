#pragma once

#include "contmeas/graph.hpp"
#include "contmeas/path.hpp"

namespace contmeas {

/// Finite point sequence with consecutive gaps at most delta.
struct DeltaChain {
  std::vector<Point> points;
  double delta = 0.0;
};

double chain_length(const DeltaChain& c);

/// Undirected graph on net samples with an edge whenever the Euclidean
/// gap is at most delta; weights are the gaps.
struct ProximityGraph {
  std::vector<Point> coords;
  std::vector<std::vector<std::pair<int, double>>> adj;
};

ProximityGraph proximity_graph(const EpsilonNet& net, double delta);

bool is_delta_connected(const EpsilonNet& net, double delta);

/// Minimum-length delta-chain between two samples (Dijkstra on the
/// proximity graph). Throws when no delta-chain exists.
DeltaChain shortest_delta_chain(const EpsilonNet& net, int a, int b, double delta);

/// Chain lengths from every sample to every other (parallel over sources).
/// Unreachable pairs get +inf.
std::vector<std::vector<double>> all_pairs_chain_lengths(const EpsilonNet& net,
                                                         double delta);

/// Serial reference for the parallel kernel above.
std::vector<std::vector<double>> all_pairs_chain_lengths_serial(
    const EpsilonNet& net, double delta);

/// Constant-speed injective shortest path on the graph between two graph
/// points; length equals intrinsic_distance.
PolylinePath geodesic(const EmbeddedGraph& g, const GraphPoint& p,
                      const GraphPoint& q);

}  // namespace contmeas
