#include "contmeas/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace contmeas {

double chain_length(const DeltaChain& c) {
  double s = 0.0;
  for (size_t i = 1; i < c.points.size(); ++i)
    s += dist(c.points[i - 1], c.points[i]);
  return s;
}

ProximityGraph proximity_graph(const EpsilonNet& net, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be > 0");
  ProximityGraph pg;
  pg.coords = net.coords();
  const int n = static_cast<int>(pg.coords.size());
  pg.adj.resize(n);
  // relative slack keeps samples spaced exactly delta apart connected when
  // their coordinate differences land an ulp above delta
  const double d2 = delta * delta * (1.0 + 4e-12);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double q = dist2(pg.coords[i], pg.coords[j]);
      if (q <= d2) {
        const double w = std::sqrt(q);
        pg.adj[i].push_back({j, w});
        pg.adj[j].push_back({i, w});
      }
    }
  return pg;
}

bool is_delta_connected(const EpsilonNet& net, double delta) {
  ProximityGraph pg = proximity_graph(net, delta);
  const int n = static_cast<int>(pg.coords.size());
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, w] : pg.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
  }
  return visited == n;
}

namespace {

std::pair<std::vector<double>, std::vector<int>> dijkstra(
    const ProximityGraph& pg, int source) {
  const int n = static_cast<int>(pg.coords.size());
  std::vector<double> dist_(n, kInf);
  std::vector<int> pred(n, -1);
  using QN = std::pair<double, int>;
  std::priority_queue<QN, std::vector<QN>, std::greater<>> q;
  dist_[source] = 0.0;
  q.push({0.0, source});
  while (!q.empty()) {
    auto [d, u] = q.top();
    q.pop();
    if (d > dist_[u]) continue;
    for (auto [v, w] : pg.adj[u]) {
      const double nd = d + w;
      if (nd < dist_[v] || (nd == dist_[v] && pred[v] >= 0 && u < pred[v])) {
        dist_[v] = nd;
        pred[v] = u;
        q.push({nd, v});
      }
    }
  }
  return {std::move(dist_), std::move(pred)};
}

}  // namespace

DeltaChain shortest_delta_chain(const EpsilonNet& net, int a, int b,
                                double delta) {
  ProximityGraph pg = proximity_graph(net, delta);
  const int n = static_cast<int>(pg.coords.size());
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("shortest_delta_chain: sample index out of range");
  auto [dist_, pred] = dijkstra(pg, a);
  if (!std::isfinite(dist_[b]))
    throw std::runtime_error("shortest_delta_chain: no delta-chain");
  DeltaChain chain;
  chain.delta = delta;
  for (int v = b; v != -1; v = pred[v]) chain.points.push_back(pg.coords[v]);
  std::reverse(chain.points.begin(), chain.points.end());
  return chain;
}

std::vector<std::vector<double>> all_pairs_chain_lengths(const EpsilonNet& net,
                                                         double delta) {
  ProximityGraph pg = proximity_graph(net, delta);
  const int n = static_cast<int>(pg.coords.size());
  std::vector<std::vector<double>> out(n);
#ifdef CONTMEAS_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int s = 0; s < n; ++s) out[s] = dijkstra(pg, s).first;
  return out;
}

std::vector<std::vector<double>> all_pairs_chain_lengths_serial(
    const EpsilonNet& net, double delta) {
  ProximityGraph pg = proximity_graph(net, delta);
  const int n = static_cast<int>(pg.coords.size());
  std::vector<std::vector<double>> out(n);
  for (int s = 0; s < n; ++s) out[s] = dijkstra(pg, s).first;
  return out;
}

PolylinePath geodesic(const EmbeddedGraph& g, const GraphPoint& p,
                      const GraphPoint& q) {
  Point pa = point_at(g, p), qa = point_at(g, q);
  if (dist(pa, qa) < 1e-15)
    throw std::invalid_argument("geodesic: degenerate (equal endpoints)");
  std::vector<std::vector<double>> cuts(g.edges.size());
  cuts[p.edge].push_back(p.s);
  cuts[q.edge].push_back(q.s);
  SplitGraph sg = build_split_graph(g, std::move(cuts));
  auto node_for = [&](const GraphPoint& gp) {
    const auto& c = sg.cuts[gp.edge];
    for (size_t i = 0; i < c.size(); ++i)
      if (std::abs(c[i] - gp.s) <= 1e-12) return sg.node_id_[gp.edge][i];
    throw std::invalid_argument("geodesic: invalid graph point");
  };
  const int np = node_for(p), nq = node_for(q);
  auto res = sg.dijkstra({np});
  if (!std::isfinite(res.dist[nq]))
    throw std::runtime_error("geodesic: points in different components");
  std::vector<int> nodes;
  for (int v = nq; v != -1; v = res.pred[v]) nodes.push_back(v);
  std::reverse(nodes.begin(), nodes.end());
  PolylinePath path;
  const double total = res.dist[nq];
  double acc = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) acc += dist(sg.node_coord[nodes[i - 1]], sg.node_coord[nodes[i]]);
    path.breakpoints.push_back({acc / total, sg.node_coord[nodes[i]]});
  }
  path.breakpoints.front().t = 0.0;
  path.breakpoints.back().t = 1.0;
  return path;
}

}  // namespace contmeas
