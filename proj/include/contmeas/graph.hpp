#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "contmeas/geometry.hpp"

namespace contmeas {

/// A compactum embedded in R^d as straight segments between vertices.
/// Segments may meet only at shared endpoint vertices.
struct EmbeddedGraph {
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;

  size_t dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
  double edge_length(int e) const;
  const Point& edge_a(int e) const { return vertices[edges[e].first]; }
  const Point& edge_b(int e) const { return vertices[edges[e].second]; }
};

/// A point on a graph: edge index plus barycentric offset in [0,1].
struct GraphPoint {
  int edge = 0;
  double s = 0.0;
};

Point point_at(const EmbeddedGraph& g, const GraphPoint& p);

struct Violation {
  std::string message;
  int edge_a = -1;
  int edge_b = -1;
};

/// Checks index validity, duplicate edges and the segment intersection
/// invariant (tolerance 1e-12). Returns an empty list when the graph is ok.
std::vector<Violation> validate(const EmbeddedGraph& g);

void require_valid(const EmbeddedGraph& g);

/// Exact one-dimensional Hausdorff measure: sum of segment lengths.
double h1(const EmbeddedGraph& g);

/// Connected components via union-find on shared vertices.
/// Isolated vertices form their own (zero-length) components.
std::vector<EmbeddedGraph> components(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

/// Shortest-path length through the graph; +inf across components.
double intrinsic_distance(const EmbeddedGraph& g, const GraphPoint& p,
                          const GraphPoint& q);

struct EpsilonNet {
  const EmbeddedGraph* parent = nullptr;
  std::vector<GraphPoint> samples;
  std::vector<Point> points;  // sample coordinates, valid on their own
  double spacing = 0.0;

  const std::vector<Point>& coords() const { return points; }
};

/// Subdivides each edge of length L into ceil(L/eps) equal pieces; the
/// samples are all subdivision points plus the vertices (deduplicated).
EpsilonNet epsilon_net(const EmbeddedGraph& g, double eps);

/// Intrinsic distances from a vertex to all vertices (Dijkstra).
std::vector<double> vertex_distances(const EmbeddedGraph& g, int source);

/// H^1 measure of the closed intrinsic ball of radius r around a vertex.
double intrinsic_ball_measure(const EmbeddedGraph& g, int center, double r);

/// Graph refined at prescribed per-edge cut offsets; the shortest-path
/// carrier shared by the chain and parametrize modules.
struct SplitGraph {
  const EmbeddedGraph* g = nullptr;
  std::vector<std::vector<double>> cuts;  // per edge, sorted, includes 0 and 1
  std::vector<GraphPoint> node_point;     // node id -> location
  std::vector<Point> node_coord;
  // adjacency: (neighbor node, weight, edge, segment index within edge)
  struct Arc {
    int to;
    double w;
    int edge;
    int seg;
  };
  std::vector<std::vector<Arc>> adj;

  int node_of(int edge, int cut_index) const { return node_id_[edge][cut_index]; }
  int vertex_node(int v) const { return v; }

  struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int> pred;       // predecessor node, -1 at sources
    std::vector<int> pred_edge;  // edge of the arc from pred, -1 at sources
    std::vector<int> pred_seg;   // segment index within that edge
  };
  DijkstraResult dijkstra(const std::vector<int>& sources) const;

  std::vector<std::vector<int>> node_id_;  // per edge, per cut index
};

/// cuts[e] may be unsorted and need not contain 0/1; they are added.
SplitGraph build_split_graph(const EmbeddedGraph& g,
                             std::vector<std::vector<double>> cuts);

}  // namespace contmeas
