#include "contmeas/parametrize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace contmeas {

void Coverage::add(int edge, double a, double b) {
  if (b < a) std::swap(a, b);
  a = std::clamp(a, 0.0, 1.0);
  b = std::clamp(b, 0.0, 1.0);
  auto& iv = intervals[edge];
  iv.push_back({a, b});
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  for (auto [lo, hi] : iv) {
    if (!merged.empty() && lo <= merged.back().second + 1e-12)
      merged.back().second = std::max(merged.back().second, hi);
    else
      merged.push_back({lo, hi});
  }
  iv = std::move(merged);
}

bool Coverage::contains(int edge, double s, double tol) const {
  for (auto [lo, hi] : intervals[edge])
    if (lo - tol <= s && s <= hi + tol) return true;
  return false;
}

double Coverage::uncovered_measure(int edge, double edge_len) const {
  double covered = 0.0;
  for (auto [lo, hi] : intervals[edge]) covered += hi - lo;
  return std::max(0.0, (1.0 - covered)) * edge_len;
}

bool Coverage::complete(const EmbeddedGraph& g, double tol) const {
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (uncovered_measure(static_cast<int>(e),
                          g.edge_length(static_cast<int>(e))) > tol)
      return false;
  return true;
}

bool Coverage::empty() const {
  for (const auto& iv : intervals)
    if (!iv.empty()) return false;
  return true;
}

namespace {

SplitGraph coverage_split_graph(const EmbeddedGraph& g, const Coverage& cov) {
  std::vector<std::vector<double>> cuts(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    for (auto [a, b] : cov.intervals[e]) {
      cuts[e].push_back(a);
      cuts[e].push_back(b);
    }
  return build_split_graph(g, std::move(cuts));
}

std::vector<int> covered_nodes(const SplitGraph& sg, const Coverage& cov) {
  std::vector<char> is_src(sg.adj.size(), 0);
  for (size_t e = 0; e < sg.cuts.size(); ++e)
    for (size_t i = 0; i < sg.cuts[e].size(); ++i)
      if (cov.contains(static_cast<int>(e), sg.cuts[e][i]))
        is_src[sg.node_id_[e][i]] = 1;
  std::vector<int> out;
  for (size_t n = 0; n < is_src.size(); ++n)
    if (is_src[n]) out.push_back(static_cast<int>(n));
  return out;
}

struct Farthest {
  GraphPoint point{-1, 0.0};
  double distance = -1.0;
  int near_node = -1;   // node through which the spur leaves the point
  int other_node = -1;  // opposite subsegment end when the maximizer is interior
  double other_s = 0.0;  // edge offset of other_node
};

// Maximizer of the distance function over uncovered sub-segments. The
// distance along a sub-segment is min(d_a + x, d_b + (len - x)).
Farthest farthest_over(const SplitGraph& sg, const Coverage& cov,
                       const SplitGraph::DijkstraResult& dij,
                       bool restrict_to_uncovered) {
  Farthest best;
  const EmbeddedGraph& g = *sg.g;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const double elen = g.edge_length(static_cast<int>(e));
    for (size_t i = 0; i + 1 < sg.cuts[e].size(); ++i) {
      const double sa = sg.cuts[e][i], sb = sg.cuts[e][i + 1];
      if (restrict_to_uncovered &&
          cov.contains(static_cast<int>(e), 0.5 * (sa + sb)))
        continue;
      const int na = sg.node_id_[e][i], nb = sg.node_id_[e][i + 1];
      const double da = dij.dist[na], db = dij.dist[nb];
      const double len = (sb - sa) * elen;
      if (!std::isfinite(da) && !std::isfinite(db)) continue;
      const double x = std::clamp(0.5 * (db - da + len), 0.0, len);
      const double v = std::min(da + x, db + (len - x));
      const double s = len > 0 ? sa + (x / len) * (sb - sa) : sa;
      if (v > best.distance + 1e-15) {
        best.distance = v;
        best.point = {static_cast<int>(e), s};
        const bool near_a = da + x <= db + (len - x);
        best.near_node = near_a ? na : nb;
        // An interior maximizer means the subsegment is a gap between two
        // covered regions; remember the opposite end so the spur can span
        // the whole gap in one pass instead of bisecting it forever.
        if (std::isfinite(da) && std::isfinite(db) && x > 0.0 && x < len) {
          best.other_node = near_a ? nb : na;
          best.other_s = near_a ? sb : sa;
        } else {
          best.other_node = -1;
        }
      }
    }
  }
  return best;
}

struct Spur {
  std::vector<Point> knots;  // from the far point down to the contact
  std::vector<std::tuple<int, double, double>> arcs;
  double length = 0.0;
};

Spur walk_spur(const SplitGraph& sg, const SplitGraph::DijkstraResult& dij,
               const Farthest& far, int node) {
  Spur spur;
  const EmbeddedGraph& g = *sg.g;
  const Point far_coord = point_at(g, far.point);
  spur.knots.push_back(far_coord);
  // partial arc from the interior point to the nearest split node
  {
    const Point nc = sg.node_coord[node];
    const double d = dist(far_coord, nc);
    if (d > 1e-15) {
      // locate the node's offset on the same edge
      double node_s = -1.0;
      for (size_t i = 0; i < sg.cuts[far.point.edge].size(); ++i)
        if (sg.node_id_[far.point.edge][i] == node)
          node_s = sg.cuts[far.point.edge][i];
      spur.knots.push_back(nc);
      spur.arcs.emplace_back(far.point.edge, far.point.s, node_s);
      spur.length += d;
    }
  }
  while (dij.pred[node] >= 0) {
    const int prev = node;
    const int e = dij.pred_edge[node];
    const int seg = dij.pred_seg[node];
    node = dij.pred[node];
    spur.knots.push_back(sg.node_coord[node]);
    spur.arcs.emplace_back(e, sg.cuts[e][seg], sg.cuts[e][seg + 1]);
    spur.length += dist(sg.node_coord[prev], sg.node_coord[node]);
  }
  return spur;
}

PolylinePath doubled_path(const std::vector<Point>& fwd) {
  // out along fwd, back the same way; constant speed by construction
  std::vector<Point> pts = fwd;
  for (auto it = std::next(fwd.rbegin()); it != fwd.rend(); ++it)
    pts.push_back(*it);
  double total = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
  PolylinePath p;
  double acc = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) acc += dist(pts[i - 1], pts[i]);
    const double t = acc / total;
    if (!p.breakpoints.empty() && t <= p.breakpoints.back().t) continue;
    p.breakpoints.push_back({t, pts[i]});
  }
  p.breakpoints.front().t = 0.0;
  p.breakpoints.back().t = 1.0;
  return p;
}

// Smallest parameter where the path passes through the given point.
double first_parameter_at(const PolylinePath& p, const Point& x) {
  double best_d = kInf;
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i)
    best_d = std::min(best_d, point_segment_distance(x, p.breakpoints[i].p,
                                                     p.breakpoints[i + 1].p));
  if (best_d > 1e-9)
    throw std::logic_error("contact point not on current path");
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    const auto& a = p.breakpoints[i];
    const auto& b = p.breakpoints[i + 1];
    if (point_segment_distance(x, a.p, b.p) <= best_d + 1e-13) {
      double num = 0, den = 0;
      for (size_t k = 0; k < x.size(); ++k) {
        num += (x[k] - a.p[k]) * (b.p[k] - a.p[k]);
        den += (b.p[k] - a.p[k]) * (b.p[k] - a.p[k]);
      }
      const double u = den > 0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
      return a.t + u * (b.t - a.t);
    }
  }
  throw std::logic_error("contact point not on current path");
}

}  // namespace

ParametrizationResult canonical_parametrization(const EmbeddedGraph& g) {
  require_valid(g);
  if (g.edges.empty() || h1(g) <= 0)
    throw std::invalid_argument("canonical_parametrization: zero-length graph");
  if (!is_connected(g))
    throw std::invalid_argument("canonical_parametrization: graph not connected");

  ParametrizationResult result;
  Coverage cov(g.edges.size());

  // Seed: doubled geodesic from vertex 0 to its farthest point.
  {
    SplitGraph sg = build_split_graph(g, {});
    auto dij = sg.dijkstra({0});
    Farthest far = farthest_over(sg, cov, dij, false);
    Spur spur = walk_spur(sg, dij, far, far.near_node);
    std::vector<Point> fwd(spur.knots.rbegin(), spur.knots.rend());
    result.path = doubled_path(fwd);
    for (auto [e, a, b] : spur.arcs) cov.add(e, a, b);
    result.spur_lengths.push_back(spur.length);
    result.iterations = 1;
  }

  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  const int n_comp = 1;
  const int cyclomatic = std::max(0, ne - nv + n_comp);
  // Gap closure on cycles converges geometrically, roughly 40 iterations
  // per independent cycle down to the 1e-12 guard.
  const int cap = 2 * ne + nv + 44 * cyclomatic;

  while (!cov.complete(g)) {
    if (result.iterations >= cap)
      throw std::runtime_error(
          "canonical_parametrization: non-termination (report bug)");
    SplitGraph sg = coverage_split_graph(g, cov);
    auto dij = sg.dijkstra(covered_nodes(sg, cov));
    Farthest far = farthest_over(sg, cov, dij, true);
    if (far.distance < 1e-12) break;  // numerically covered
    Spur spur = walk_spur(sg, dij, far, far.near_node);
    // An interior gap sits between two covered regions; continue the spur
    // across the rest of its subsegment so one doubled pass covers the
    // whole gap. Otherwise near-side halves pile up without closing it.
    if (far.other_node >= 0) {
      const Point oc = sg.node_coord[far.other_node];
      const double tail = dist(point_at(g, far.point), oc);
      if (tail > 1e-15) {
        spur.knots.insert(spur.knots.begin(), oc);
        spur.arcs.emplace_back(far.point.edge, far.point.s, far.other_s);
        spur.length += tail;
      }
    }
    // Spur runs from the contact on the current path out to the far
    // point; the join traverses it there and back.
    PolylinePath spur_path;
    {
      std::vector<Point> pts(spur.knots.rbegin(), spur.knots.rend());
      double total = 0.0;
      for (size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
      double acc = 0.0;
      for (size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) acc += dist(pts[i - 1], pts[i]);
        const double t = acc / total;
        if (!spur_path.breakpoints.empty() &&
            t <= spur_path.breakpoints.back().t)
          continue;
        spur_path.breakpoints.push_back({t, pts[i]});
      }
      spur_path.breakpoints.front().t = 0.0;
      spur_path.breakpoints.back().t = 1.0;
    }
    const double t0 = first_parameter_at(result.path, spur_path.breakpoints.front().p);
    spur_path.breakpoints.front().p = result.path.eval(t0);
    result.path = constant_speed_reparam(join(result.path, spur_path, t0));
    for (auto [e, a, b] : spur.arcs) cov.add(e, a, b);
    result.spur_lengths.push_back(spur.length);
    ++result.iterations;
  }

  result.path = constant_speed_reparam(result.path);
  result.ledger = edge_multiplicity(result.path, g);
  return result;
}

ParametrizationResult double_cover_euler(const EmbeddedGraph& g) {
  require_valid(g);
  if (!is_connected(g))
    throw std::invalid_argument("double_cover_euler: graph not connected");
  if (g.edges.empty())
    throw std::invalid_argument("double_cover_euler: zero-length graph");

  // Every vertex of the bidirected graph has equal in/out degree, so an
  // Euler circuit exists; Hierholzer with smallest-neighbor-first order.
  struct Arc {
    int to;
    int id;
  };
  std::vector<std::vector<Arc>> arcs(g.vertices.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [i, j] = g.edges[e];
    arcs[i].push_back({j, 2 * e});
    arcs[j].push_back({i, 2 * e + 1});
  }
  for (auto& v : arcs)
    std::sort(v.begin(), v.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.to, a.id) < std::tie(b.to, b.id); });
  std::vector<char> used(2 * g.edges.size(), 0);
  std::vector<size_t> next(g.vertices.size(), 0);
  std::vector<int> stack{0}, circuit;
  while (!stack.empty()) {
    const int v = stack.back();
    while (next[v] < arcs[v].size() && used[arcs[v][next[v]].id]) ++next[v];
    if (next[v] == arcs[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const Arc a = arcs[v][next[v]];
      used[a.id] = 1;
      stack.push_back(a.to);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  ParametrizationResult result;
  double total = 0.0;
  for (size_t i = 1; i < circuit.size(); ++i)
    total += dist(g.vertices[circuit[i - 1]], g.vertices[circuit[i]]);
  double acc = 0.0;
  for (size_t i = 0; i < circuit.size(); ++i) {
    if (i > 0)
      acc += dist(g.vertices[circuit[i - 1]], g.vertices[circuit[i]]);
    result.path.breakpoints.push_back({acc / total, g.vertices[circuit[i]]});
  }
  result.path.breakpoints.front().t = 0.0;
  result.path.breakpoints.back().t = 1.0;
  result.iterations = 1;
  result.ledger = edge_multiplicity(result.path, g);
  return result;
}

FarthestPoint farthest_uncovered_point(const EmbeddedGraph& g,
                                       const Coverage& cov) {
  if (cov.complete(g))
    throw std::invalid_argument("farthest_uncovered_point: nothing uncovered");
  if (cov.empty())
    throw std::invalid_argument("farthest_uncovered_point: nothing covered yet");
  SplitGraph sg = coverage_split_graph(g, cov);
  auto dij = sg.dijkstra(covered_nodes(sg, cov));
  Farthest far = farthest_over(sg, cov, dij, true);
  return {far.point, far.distance};
}

FarthestPoint farthest_uncovered_point(const EmbeddedGraph& g,
                                       const TraversalLedger& ledger) {
  Coverage cov(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (ledger.multiplicity(static_cast<int>(e)) > 0)
      cov.add(static_cast<int>(e), 0.0, 1.0);
  return farthest_uncovered_point(g, cov);
}

}  // namespace contmeas
