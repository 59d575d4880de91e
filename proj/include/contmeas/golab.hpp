#pragma once

#include <functional>
#include <string>

#include "contmeas/graph.hpp"
#include "contmeas/parametrize.hpp"

namespace contmeas {

/// A sequence of compacta K_n converging (or not) to a limit K in
/// Hausdorff distance, with a bound on the number of components.
struct Scenario {
  std::string name;
  std::function<EmbeddedGraph(int)> generator;
  EmbeddedGraph limit;
  int component_bound = 1;  // -1 when unbounded
};

/// name in {staircase, comb, polygon, dust, twocomp}; throws otherwise.
Scenario make_scenario(const std::string& name);

EmbeddedGraph scenario_graph(const std::string& name, int n);

struct SemicontinuityRow {
  int n = 0;
  double d_hausdorff = 0.0;  // between eps-nets, error at most 2 eps
  double h1_value = 0.0;
};

struct SemicontinuityReport {
  std::vector<SemicontinuityRow> rows;
  double h1_limit = 0.0;
  double liminf_estimate = 0.0;  // min of h1 over the last half of rows
  bool holds = false;
  double net_eps = 0.0;
  double tolerance = 0.0;
};

/// Lower-semicontinuity check: holds iff the liminf estimate stays above
/// h1(limit) minus the tolerance. The default tolerance absorbs the
/// finite-resolution gap of slowly converging scenarios.
SemicontinuityReport semicontinuity_report(const Scenario& s,
                                           const std::vector<int>& n_list,
                                           double eps,
                                           double tolerance = 0.02);

struct ChainBoundResult {
  bool ok = false;
  double worst_ratio = 0.0;  // max chain length over 4*h1
};

/// Every shortest delta-chain between net samples of a connected graph
/// has length at most 4*h1.
ChainBoundResult chain_bound_check(const EmbeddedGraph& g, double delta,
                                   double eps);

/// h1(K) >= diam(sub_sample) - m*delta for a delta-connected sub-sample
/// of a graph with at most m components. Throws when the sub-sample is
/// not delta-connected.
bool diameter_chain_bound_check(const EmbeddedGraph& k,
                                const PointSet& sub_sample, double delta,
                                int m);

/// Localized variant on a region U given as per-edge covered intervals:
/// h1(K cap U) >= (1 - delta/r) * diam(sub_sample) - m*delta, under the
/// margin hypothesis dist(sub_sample, boundary of U) >= r. When U has no
/// boundary inside the graph the factor (1 - delta/r) drops out.
bool localized_bound_check(const EmbeddedGraph& k, const PointSet& sub_sample,
                           const Coverage& region, double r, double delta,
                           int m);

/// Seeded random plane tree with unit-scale edges and no unregistered
/// crossings; deterministic in (n_vertices, seed).
EmbeddedGraph random_tree(int n_vertices, unsigned seed);

}  // namespace contmeas
