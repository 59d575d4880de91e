#include "contmeas/golab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "contmeas/chain.hpp"

namespace contmeas {

namespace {

EmbeddedGraph segment(Point a, Point b) {
  EmbeddedGraph g;
  g.vertices = {std::move(a), std::move(b)};
  g.edges = {{0, 1}};
  return g;
}

EmbeddedGraph staircase(int n) {
  EmbeddedGraph g;
  g.vertices.push_back({0.0, 0.0});
  for (int k = 1; k <= n; ++k) {
    g.vertices.push_back({static_cast<double>(k) / n,
                          static_cast<double>(k - 1) / n});
    g.vertices.push_back({static_cast<double>(k) / n,
                          static_cast<double>(k) / n});
  }
  for (int i = 0; i + 1 < static_cast<int>(g.vertices.size()); ++i)
    g.edges.emplace_back(i, i + 1);
  return g;
}

EmbeddedGraph comb(int n) {
  // Base split at the teeth feet so junctions are registered vertices.
  EmbeddedGraph g;
  const double h = 1.0 / std::sqrt(static_cast<double>(n));
  g.vertices.push_back({0.0, 0.0});
  for (int k = 1; k <= n; ++k)
    g.vertices.push_back({(2.0 * k - 1.0) / (2.0 * n), 0.0});
  g.vertices.push_back({1.0, 0.0});
  for (int i = 0; i <= n; ++i) g.edges.emplace_back(i, i + 1);
  for (int k = 1; k <= n; ++k) {
    g.vertices.push_back({(2.0 * k - 1.0) / (2.0 * n), h});
    g.edges.emplace_back(k, static_cast<int>(g.vertices.size()) - 1);
  }
  return g;
}

EmbeddedGraph polygon(int n) {
  EmbeddedGraph g;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * M_PI * k / n;
    g.vertices.push_back({std::cos(a), std::sin(a)});
  }
  for (int k = 0; k < n; ++k) g.edges.emplace_back(k, (k + 1) % n);
  return g;
}

EmbeddedGraph dust(int n) {
  EmbeddedGraph g;
  if (n == 1) {
    g.vertices.push_back({0.5, 0.5});
    return g;
  }
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / (n - 1);
    g.vertices.push_back({t, t});
  }
  return g;
}

EmbeddedGraph twocomp(int n) {
  // Total length 1 at every n; the gap 1/n closes in the limit.
  EmbeddedGraph g;
  const double gap = 1.0 / n;
  g.vertices = {{0.0, 0.0}, {0.5, 0.0}, {0.5 + gap, 0.0}, {1.0 + gap, 0.0}};
  g.edges = {{0, 1}, {2, 3}};
  return g;
}

}  // namespace

Scenario make_scenario(const std::string& name) {
  Scenario s;
  s.name = name;
  if (name == "staircase") {
    s.generator = staircase;
    s.limit = segment({0.0, 0.0}, {1.0, 1.0});
    s.component_bound = 1;
  } else if (name == "comb") {
    s.generator = comb;
    s.limit = segment({0.0, 0.0}, {1.0, 0.0});
    s.component_bound = 1;
  } else if (name == "polygon") {
    s.generator = polygon;
    s.limit = polygon(256);
    s.component_bound = 1;
  } else if (name == "dust") {
    s.generator = dust;
    s.limit = segment({0.0, 0.0}, {1.0, 1.0});
    s.component_bound = -1;
  } else if (name == "twocomp") {
    s.generator = twocomp;
    s.limit = segment({0.0, 0.0}, {1.0, 0.0});
    s.component_bound = 2;
  } else {
    throw std::invalid_argument("unknown scenario: " + name);
  }
  return s;
}

EmbeddedGraph scenario_graph(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("scenario: n must be >= 1");
  return make_scenario(name).generator(n);
}

SemicontinuityReport semicontinuity_report(const Scenario& s,
                                           const std::vector<int>& n_list,
                                           double eps, double tolerance) {
  if (n_list.empty())
    throw std::invalid_argument("semicontinuity_report: empty n list");
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw std::invalid_argument("semicontinuity_report: n list must increase");
  if (!(eps > 0))
    throw std::invalid_argument("semicontinuity_report: eps must be > 0");

  SemicontinuityReport rep;
  rep.net_eps = eps;
  rep.tolerance = tolerance;
  rep.h1_limit = h1(s.limit);
  const PointSet limit_net = epsilon_net(s.limit, eps).coords();
  for (int n : n_list) {
    EmbeddedGraph g = s.generator(n);
    require_valid(g);
    SemicontinuityRow row;
    row.n = n;
    row.d_hausdorff = hausdorff_distance(epsilon_net(g, eps).coords(), limit_net);
    row.h1_value = h1(g);
    rep.rows.push_back(row);
  }
  rep.liminf_estimate = kInf;
  for (size_t i = rep.rows.size() / 2; i < rep.rows.size(); ++i)
    rep.liminf_estimate = std::min(rep.liminf_estimate, rep.rows[i].h1_value);
  rep.holds = rep.liminf_estimate >= rep.h1_limit - tolerance;
  return rep;
}

ChainBoundResult chain_bound_check(const EmbeddedGraph& g, double delta,
                                   double eps) {
  if (!is_connected(g))
    throw std::invalid_argument("chain_bound_check: graph not connected");
  if (!(eps > 0) || eps > delta)
    throw std::invalid_argument("chain_bound_check: need 0 < eps <= delta");
  EpsilonNet net = epsilon_net(g, eps);
  auto lengths = all_pairs_chain_lengths(net, delta);
  const double bound = 4.0 * h1(g);
  double worst = 0.0;
  for (const auto& row : lengths)
    for (double v : row)
      if (std::isfinite(v)) worst = std::max(worst, v);
  ChainBoundResult res;
  res.worst_ratio = bound > 0 ? worst / bound : 0.0;
  res.ok = worst <= bound + 1e-12;
  return res;
}

namespace {

bool points_delta_connected(const PointSet& pts, double delta) {
  if (pts.size() <= 1) return true;
  std::vector<int> p(pts.size());
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return p[x] == x ? x : p[x] = find(p[x]);
  };
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (dist(pts[i], pts[j]) <= delta + 1e-12) p[find(i)] = find(j);
  for (size_t i = 1; i < pts.size(); ++i)
    if (find(0) != find(static_cast<int>(i))) return false;
  return true;
}

}  // namespace

bool diameter_chain_bound_check(const EmbeddedGraph& k,
                                const PointSet& sub_sample, double delta,
                                int m) {
  if (sub_sample.empty())
    throw std::invalid_argument("diameter_chain_bound_check: empty sub-sample");
  if (!points_delta_connected(sub_sample, delta))
    throw std::invalid_argument(
        "diameter_chain_bound_check: sub-sample not delta-connected");
  return h1(k) >= diam(sub_sample) - m * delta - 1e-12;
}

bool localized_bound_check(const EmbeddedGraph& k, const PointSet& sub_sample,
                           const Coverage& region, double r, double delta,
                           int m) {
  if (!(r > 0)) throw std::invalid_argument("localized_bound_check: r must be > 0");
  if (sub_sample.empty())
    throw std::invalid_argument("localized_bound_check: empty sub-sample");
  if (region.intervals.size() != k.edges.size())
    throw std::invalid_argument("localized_bound_check: region size mismatch");

  // Boundary of the region: interval endpoints interior to an edge, plus
  // vertices where some incident edge end is covered and another is not.
  PointSet boundary;
  const int nv = static_cast<int>(k.vertices.size());
  std::vector<char> has_covered(nv, 0), has_uncovered(nv, 0);
  for (size_t e = 0; e < k.edges.size(); ++e) {
    for (auto [a, b] : region.intervals[e]) {
      if (a > 1e-12)
        boundary.push_back(point_at(k, {static_cast<int>(e), a}));
      if (b < 1.0 - 1e-12)
        boundary.push_back(point_at(k, {static_cast<int>(e), b}));
    }
    auto mark = [&](int v, double end) {
      if (region.contains(static_cast<int>(e), end))
        has_covered[v] = 1;
      else
        has_uncovered[v] = 1;
    };
    mark(k.edges[e].first, 0.0);
    mark(k.edges[e].second, 1.0);
  }
  for (int v = 0; v < nv; ++v)
    if (has_covered[v] && has_uncovered[v]) boundary.push_back(k.vertices[v]);

  double margin = kInf;
  for (const Point& p : sub_sample)
    for (const Point& b : boundary) margin = std::min(margin, dist(p, b));
  if (margin < r - 1e-12)
    throw std::invalid_argument(
        "localized_bound_check: sub-sample closer than r to region boundary");

  double measure = 0.0;
  for (size_t e = 0; e < k.edges.size(); ++e) {
    const double len = k.edge_length(static_cast<int>(e));
    for (auto [a, b] : region.intervals[e]) measure += (b - a) * len;
  }
  const double factor = boundary.empty() ? 1.0 : 1.0 - delta / r;
  return measure >= factor * diam(sub_sample) - m * delta - 1e-12;
}

EmbeddedGraph random_tree(int n_vertices, unsigned seed) {
  if (n_vertices < 2)
    throw std::invalid_argument("random_tree: need at least 2 vertices");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EmbeddedGraph g;
  g.vertices.push_back({unit(rng), unit(rng)});
  const double clearance = 1e-3;
  while (static_cast<int>(g.vertices.size()) < n_vertices) {
    double scale = 1.0;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 0 && attempt % 50 == 0) scale *= 0.8;
      const int parent = static_cast<int>(rng() % g.vertices.size());
      const Point& p = g.vertices[parent];
      const double ang = 2.0 * M_PI * unit(rng);
      const double len = scale * (0.3 + 0.5 * unit(rng));
      const Point q = {p[0] + len * std::cos(ang), p[1] + len * std::sin(ang)};
      bool ok = true;
      for (size_t w = 0; w < g.vertices.size() && ok; ++w) {
        if (static_cast<int>(w) == parent) continue;
        if (point_segment_distance(g.vertices[w], p, q) < clearance) ok = false;
      }
      for (size_t e = 0; e < g.edges.size() && ok; ++e) {
        auto [i, j] = g.edges[e];
        if (i == parent || j == parent) {
          // incident edge: compare unit directions away from the parent
          const Point& o = g.vertices[i == parent ? j : i];
          const double lo = dist(p, o);
          double dd = 0.0;
          for (int c = 0; c < 2; ++c) {
            const double u = (o[c] - p[c]) / lo - (q[c] - p[c]) / len;
            dd += u * u;
          }
          if (std::sqrt(dd) < 0.05) ok = false;
        } else if (segment_segment_distance(p, q, g.vertices[i],
                                            g.vertices[j]) < clearance) {
          ok = false;
        }
      }
      if (ok) {
        g.vertices.push_back(q);
        g.edges.emplace_back(parent, static_cast<int>(g.vertices.size()) - 1);
        break;
      }
    }
  }
  require_valid(g);
  return g;
}

}  // namespace contmeas
