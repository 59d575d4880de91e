#include "contmeas/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace contmeas {

namespace {
constexpr double kGeomTol = 1e-12;
}

double EmbeddedGraph::edge_length(int e) const {
  return dist(edge_a(e), edge_b(e));
}

Point point_at(const EmbeddedGraph& g, const GraphPoint& p) {
  const Point& a = g.edge_a(p.edge);
  const Point& b = g.edge_b(p.edge);
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + p.s * (b[i] - a[i]);
  return r;
}

std::vector<Violation> validate(const EmbeddedGraph& g) {
  std::vector<Violation> out;
  const int nv = static_cast<int>(g.vertices.size());
  for (int v = 0; v < nv; ++v) {
    if (!g.vertices.empty() && g.vertices[v].size() != g.dim())
      out.push_back({"inconsistent vertex dimension", -1, -1});
    for (double c : g.vertices[v])
      if (!std::isfinite(c)) out.push_back({"non-finite vertex coordinate", -1, -1});
  }
  std::set<std::pair<int, int>> seen;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    if (i < 0 || j < 0 || i >= nv || j >= nv) {
      out.push_back({"edge vertex index out of range", static_cast<int>(e), -1});
      continue;
    }
    if (i == j)
      out.push_back({"degenerate edge (identical endpoints)", static_cast<int>(e), -1});
    auto key = std::minmax(i, j);
    if (!seen.insert({key.first, key.second}).second)
      out.push_back({"duplicate edge", static_cast<int>(e), -1});
  }
  if (!out.empty()) return out;

  const int ne = static_cast<int>(g.edges.size());
  for (int e = 0; e < ne; ++e) {
    for (int f = e + 1; f < ne; ++f) {
      auto [a, b] = g.edges[e];
      auto [c, d] = g.edges[f];
      int shared = -1;
      if (a == c || a == d) shared = a;
      if (b == c || b == d) shared = b;
      if (shared >= 0) {
        // Adjacent edges may only touch at the shared vertex; collinear
        // overlap shows up as equal unit directions away from it.
        const Point& p0 = g.vertices[shared];
        const Point& p1 = g.vertices[g.edges[e].first == shared ? g.edges[e].second
                                                                : g.edges[e].first];
        const Point& p2 = g.vertices[g.edges[f].first == shared ? g.edges[f].second
                                                                : g.edges[f].first];
        const double l1 = dist(p0, p1), l2 = dist(p0, p2);
        if (l1 > 0 && l2 > 0) {
          double dd = 0;
          for (size_t k = 0; k < p0.size(); ++k) {
            const double u = (p1[k] - p0[k]) / l1 - (p2[k] - p0[k]) / l2;
            dd += u * u;
          }
          if (std::sqrt(dd) < 1e-9)
            out.push_back({"overlapping collinear edges", e, f});
        }
      } else {
        if (segment_segment_distance(g.edge_a(e), g.edge_b(e), g.edge_a(f),
                                     g.edge_b(f)) < kGeomTol)
          out.push_back({"interior intersection", e, f});
      }
    }
  }
  // A vertex sitting on the interior of a non-incident edge is an
  // unregistered junction.
  for (int v = 0; v < nv; ++v) {
    for (int e = 0; e < ne; ++e) {
      if (g.edges[e].first == v || g.edges[e].second == v) continue;
      if (point_segment_distance(g.vertices[v], g.edge_a(e), g.edge_b(e)) < kGeomTol)
        out.push_back({"vertex on edge interior", e, -1});
    }
  }
  return out;
}

void require_valid(const EmbeddedGraph& g) {
  auto v = validate(g);
  if (!v.empty()) throw std::invalid_argument("invalid graph: " + v.front().message);
}

double h1(const EmbeddedGraph& g) {
  double s = 0.0;
  for (size_t e = 0; e < g.edges.size(); ++e) s += g.edge_length(static_cast<int>(e));
  return s;
}

namespace {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

std::vector<EmbeddedGraph> components(const EmbeddedGraph& g) {
  UnionFind uf(static_cast<int>(g.vertices.size()));
  for (auto [i, j] : g.edges) uf.unite(i, j);
  std::vector<int> root_to_comp(g.vertices.size(), -1);
  std::vector<EmbeddedGraph> out;
  std::vector<int> remap(g.vertices.size(), -1);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    int r = uf.find(v);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    auto& comp = out[root_to_comp[r]];
    remap[v] = static_cast<int>(comp.vertices.size());
    comp.vertices.push_back(g.vertices[v]);
  }
  for (auto [i, j] : g.edges) {
    auto& comp = out[root_to_comp[uf.find(i)]];
    comp.edges.emplace_back(remap[i], remap[j]);
  }
  return out;
}

bool is_connected(const EmbeddedGraph& g) { return components(g).size() == 1; }

SplitGraph build_split_graph(const EmbeddedGraph& g,
                             std::vector<std::vector<double>> cuts) {
  SplitGraph sg;
  sg.g = &g;
  cuts.resize(g.edges.size());
  const int nv = static_cast<int>(g.vertices.size());
  int next_id = nv;
  sg.cuts.resize(g.edges.size());
  sg.node_id_.resize(g.edges.size());
  sg.node_point.resize(nv);
  sg.node_coord.resize(nv);
  for (int v = 0; v < nv; ++v) sg.node_coord[v] = g.vertices[v];
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto& c = cuts[e];
    c.push_back(0.0);
    c.push_back(1.0);
    std::sort(c.begin(), c.end());
    std::vector<double> ded;
    for (double s : c) {
      s = std::clamp(s, 0.0, 1.0);
      if (ded.empty() || s - ded.back() > 1e-13) ded.push_back(s);
    }
    if (ded.back() < 1.0) ded.back() = 1.0;
    sg.cuts[e] = ded;
    auto& ids = sg.node_id_[e];
    ids.resize(ded.size());
    for (size_t i = 0; i < ded.size(); ++i) {
      if (i == 0)
        ids[i] = g.edges[e].first;
      else if (i + 1 == ded.size())
        ids[i] = g.edges[e].second;
      else {
        ids[i] = next_id++;
        GraphPoint gp{static_cast<int>(e), ded[i]};
        sg.node_point.push_back(gp);
        sg.node_coord.push_back(point_at(g, gp));
      }
    }
  }
  for (int v = 0; v < nv; ++v) sg.node_point[v] = GraphPoint{-1, 0.0};
  sg.adj.resize(next_id);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const double len = g.edge_length(static_cast<int>(e));
    for (size_t i = 0; i + 1 < sg.cuts[e].size(); ++i) {
      const double w = (sg.cuts[e][i + 1] - sg.cuts[e][i]) * len;
      const int a = sg.node_id_[e][i], b = sg.node_id_[e][i + 1];
      sg.adj[a].push_back({b, w, static_cast<int>(e), static_cast<int>(i)});
      sg.adj[b].push_back({a, w, static_cast<int>(e), static_cast<int>(i)});
    }
  }
  return sg;
}

SplitGraph::DijkstraResult SplitGraph::dijkstra(
    const std::vector<int>& sources) const {
  DijkstraResult r;
  r.dist.assign(adj.size(), kInf);
  r.pred.assign(adj.size(), -1);
  r.pred_edge.assign(adj.size(), -1);
  r.pred_seg.assign(adj.size(), -1);
  using QN = std::pair<double, int>;
  std::priority_queue<QN, std::vector<QN>, std::greater<>> q;
  for (int s : sources) {
    r.dist[s] = 0.0;
    q.push({0.0, s});
  }
  while (!q.empty()) {
    auto [d, u] = q.top();
    q.pop();
    if (d > r.dist[u]) continue;
    for (const Arc& a : adj[u]) {
      const double nd = d + a.w;
      if (nd < r.dist[a.to] ||
          (nd == r.dist[a.to] && r.pred[a.to] >= 0 && u < r.pred[a.to])) {
        r.dist[a.to] = nd;
        r.pred[a.to] = u;
        r.pred_edge[a.to] = a.edge;
        r.pred_seg[a.to] = a.seg;
        q.push({nd, a.to});
      }
    }
  }
  return r;
}

namespace {
int cut_node(const SplitGraph& sg, const GraphPoint& p) {
  const auto& c = sg.cuts[p.edge];
  for (size_t i = 0; i < c.size(); ++i)
    if (std::abs(c[i] - p.s) <= 1e-12) return sg.node_id_[p.edge][i];
  throw std::logic_error("cut_node: offset not among cuts");
}
}  // namespace

double intrinsic_distance(const EmbeddedGraph& g, const GraphPoint& p,
                          const GraphPoint& q) {
  if (p.edge < 0 || p.edge >= static_cast<int>(g.edges.size()) || p.s < 0 ||
      p.s > 1 || q.edge < 0 || q.edge >= static_cast<int>(g.edges.size()) ||
      q.s < 0 || q.s > 1)
    throw std::invalid_argument("intrinsic_distance: invalid GraphPoint");
  std::vector<std::vector<double>> cuts(g.edges.size());
  cuts[p.edge].push_back(p.s);
  cuts[q.edge].push_back(q.s);
  SplitGraph sg = build_split_graph(g, std::move(cuts));
  auto res = sg.dijkstra({cut_node(sg, p)});
  return res.dist[cut_node(sg, q)];
}

EpsilonNet epsilon_net(const EmbeddedGraph& g, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon_net: eps must be > 0");
  EpsilonNet net;
  net.parent = &g;
  net.spacing = eps;
  // Vertices first (edge = -1, s = vertex index), then interior samples.
  for (size_t v = 0; v < g.vertices.size(); ++v)
    net.samples.push_back(GraphPoint{-1, static_cast<double>(v)});
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const double len = g.edge_length(static_cast<int>(e));
    const int n = std::max(1, static_cast<int>(std::ceil(len / eps)));
    for (int k = 1; k < n; ++k)
      net.samples.push_back(
          GraphPoint{static_cast<int>(e), static_cast<double>(k) / n});
  }
  net.points.reserve(net.samples.size());
  for (const auto& gp : net.samples)
    net.points.push_back(gp.edge < 0 ? g.vertices[static_cast<int>(gp.s)]
                                     : point_at(g, gp));
  return net;
}

std::vector<double> vertex_distances(const EmbeddedGraph& g, int source) {
  SplitGraph sg = build_split_graph(g, {});
  auto res = sg.dijkstra({source});
  res.dist.resize(g.vertices.size());
  return res.dist;
}

double intrinsic_ball_measure(const EmbeddedGraph& g, int center, double r) {
  auto d = vertex_distances(g, center);
  double total = 0.0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const double len = g.edge_length(static_cast<int>(e));
    const double a = std::clamp(r - d[g.edges[e].first], 0.0, len);
    const double b = std::clamp(r - d[g.edges[e].second], 0.0, len);
    total += std::min(len, a + b);
  }
  return total;
}

}  // namespace contmeas
