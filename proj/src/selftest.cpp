#include "contmeas/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "contmeas/chain.hpp"
#include "contmeas/geometry.hpp"
#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"
#include "contmeas/graph_io.hpp"
#include "contmeas/parametrize.hpp"
#include "contmeas/partition.hpp"
#include "contmeas/path.hpp"

namespace contmeas {

namespace {

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.12g", v);
  return b;
}

EmbeddedGraph unit_segment() {
  EmbeddedGraph g;
  g.vertices = {{0.0, 0.0}, {1.0, 0.0}};
  g.edges = {{0, 1}};
  return g;
}

// Legs along the axes so every leg length is exactly 1.
EmbeddedGraph tripod() {
  EmbeddedGraph g;
  g.vertices = {{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}};
  g.edges = {{0, 1}, {0, 2}, {0, 3}};
  return g;
}

// Two vertices joined by a straight bar and two polyline arcs.
EmbeddedGraph theta_graph() {
  EmbeddedGraph g;
  g.vertices.push_back({-1.0, 0.0});
  g.vertices.push_back({1.0, 0.0});
  g.edges.emplace_back(0, 1);
  for (int sign : {1, -1}) {
    int prev = 0;
    for (int k = 1; k < 8; ++k) {
      const double a = M_PI * (8 - k) / 8.0;
      g.vertices.push_back({std::cos(a), sign * std::sin(a)});
      const int id = static_cast<int>(g.vertices.size()) - 1;
      g.edges.emplace_back(prev, id);
      prev = id;
    }
    g.edges.emplace_back(prev, 1);
  }
  return g;
}

GraphPoint vertex_point(const EmbeddedGraph& g, int v) {
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].first == v) return {static_cast<int>(e), 0.0};
    if (g.edges[e].second == v) return {static_cast<int>(e), 1.0};
  }
  throw std::invalid_argument("vertex has no incident edge");
}

PolylinePath vertex_walk_path(const EmbeddedGraph& g,
                              const std::vector<int>& walk) {
  std::vector<Point> pts;
  for (int v : walk) pts.push_back(g.vertices[v]);
  double total = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
  PolylinePath p;
  double acc = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) acc += dist(pts[i - 1], pts[i]);
    p.breakpoints.push_back({acc / total, pts[i]});
  }
  p.breakpoints.front().t = 0.0;
  p.breakpoints.back().t = 1.0;
  return p;
}

bool constant_speed_ok(const PolylinePath& p, double tol) {
  const double len = path_length(p);
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    const auto& a = p.breakpoints[i];
    const auto& b = p.breakpoints[i + 1];
    const double speed = dist(a.p, b.p) / (b.t - a.t);
    if (std::abs(speed - len) > tol * std::max(1.0, len)) return false;
  }
  return true;
}

template <class F>
CriterionResult run_criterion(int id, const char* name, F body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.passed = true;
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("error: ") + ex.what();
  }
  return r;
}

struct Gallery {
  EmbeddedGraph seg = unit_segment();
  EmbeddedGraph tri = tripod();
  EmbeddedGraph gon64 = scenario_graph("polygon", 64);
  EmbeddedGraph theta = theta_graph();

  // canonical parametrizations shared by several criteria
  std::vector<std::pair<const EmbeddedGraph*, ParametrizationResult>> canon;
  std::string canon_error;
};

void build_canon(Gallery& gal) {
  try {
    for (const EmbeddedGraph* g : {&gal.seg, &gal.tri, &gal.gon64, &gal.theta})
      gal.canon.emplace_back(g, canonical_parametrization(*g));
  } catch (const std::exception& ex) {
    gal.canon_error = ex.what();
  }
}

}  // namespace

SelftestReport run_selftest(uint64_t seed) {
  SelftestReport rep;
  rep.seed = seed;
  const unsigned s32 = static_cast<unsigned>(seed & 0xffffffffu);
  Gallery gal;
  build_canon(gal);

  rep.criteria.push_back(run_criterion(1, "exact-length", [&](CriterionResult& r) {
    const double target = 2.0 * 64.0 * std::sin(M_PI / 64.0);
    const double got = h1(gal.gon64);
    r.passed = h1(gal.seg) == 1.0 && h1(gal.tri) == 3.0 &&
               std::abs(got - target) <= 1e-12;
    r.detail = "64-gon h1=" + fmt(got) + " target=" + fmt(target);
  }));

  rep.criteria.push_back(run_criterion(2, "partition-convergence", [&](CriterionResult& r) {
    std::vector<EmbeddedGraph> graphs{gal.seg, gal.tri,
                                      scenario_graph("polygon", 256)};
    for (int i = 0; i < 3; ++i) graphs.push_back(random_tree(8 + 2 * i, s32 + i));
    std::string ks;
    for (const auto& g : graphs) {
      const double h = h1(g);
      int reached = -1;
      for (int k = 1; k <= 10; ++k) {
        const double d = h / std::pow(2.0, k);
        const double sum = diameter_sum(delta_partition(g, d));
        if (sum > h + 1e-9) {
          r.passed = false;
          r.detail = "diameter sum exceeds h1";
          return;
        }
        if (sum >= 0.99 * h) {
          reached = k;
          break;
        }
      }
      if (reached < 0) {
        r.passed = false;
        r.detail = "0.99*h1 not reached by k=10";
        return;
      }
      ks += (ks.empty() ? "" : ",") + std::to_string(reached);
    }
    r.detail = "k=" + ks;
  }));

  rep.criteria.push_back(run_criterion(3, "oracle-agreement", [&](CriterionResult& r) {
    struct Case {
      const EmbeddedGraph* g;
      double delta;
      int res;
    };
    std::string vals;
    for (const Case& c : {Case{&gal.seg, 0.5, 16}, Case{&gal.tri, 1.0, 8}}) {
      const double h = h1(*c.g);
      const double greedy = l_delta_lower_bound(*c.g, c.delta);
      const double o1 = l_delta_bruteforce(*c.g, c.delta, c.res);
      const double o2 = l_delta_bruteforce(*c.g, c.delta, 2 * c.res);
      if (!(o1 >= greedy - 1e-12 && o2 >= o1 - 1e-12 && o1 <= h + 1e-12 &&
            o2 <= h + 1e-12)) {
        r.passed = false;
        r.detail = "oracle=" + fmt(o1) + "/" + fmt(o2) + " greedy=" + fmt(greedy);
        return;
      }
      vals += (vals.empty() ? "" : " ") + fmt(o2);
    }
    r.detail = "oracle values " + vals;
  }));

  rep.criteria.push_back(run_criterion(4, "chain-bound", [&](CriterionResult& r) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      EmbeddedGraph tree = random_tree(4 + i % 7, s32 + 100 + i);
      for (double d : {0.2, 0.1}) {
        auto res = chain_bound_check(tree, d, d);
        worst = std::max(worst, res.worst_ratio);
        if (!res.ok) {
          r.passed = false;
          r.detail = "ratio=" + fmt(res.worst_ratio);
          return;
        }
      }
    }
    r.detail = "worst ratio " + fmt(worst);
  }));

  rep.criteria.push_back(run_criterion(5, "geodesics", [&](CriterionResult& r) {
    PolylinePath leaf2leaf = geodesic(gal.tri, {0, 1.0}, {1, 1.0});
    if (std::abs(path_length(leaf2leaf) - 2.0) > 1e-12) {
      r.passed = false;
      r.detail = "tripod geodesic length " + fmt(path_length(leaf2leaf));
      return;
    }
    std::mt19937 rng(s32 + 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      EmbeddedGraph tree = random_tree(5 + i % 6, s32 + 200 + i);
      const int ne = static_cast<int>(tree.edges.size());
      GraphPoint p{static_cast<int>(rng() % ne), unit(rng)};
      GraphPoint q{static_cast<int>(rng() % ne), unit(rng)};
      if (p.edge == q.edge && std::abs(p.s - q.s) < 1e-9) continue;
      PolylinePath geo = geodesic(tree, p, q);
      const double len = path_length(geo);
      if (std::abs(len - intrinsic_distance(tree, p, q)) > 1e-9 ||
          !constant_speed_ok(geo, 1e-9)) {
        r.passed = false;
        r.detail = "length or speed invariant failed";
        return;
      }
      for (size_t a = 0; a + 1 < geo.breakpoints.size(); ++a)
        for (size_t b = a + 2; b + 1 < geo.breakpoints.size(); ++b)
          if (segment_segment_distance(geo.breakpoints[a].p,
                                       geo.breakpoints[a + 1].p,
                                       geo.breakpoints[b].p,
                                       geo.breakpoints[b + 1].p) < 1e-9) {
            r.passed = false;
            r.detail = "geodesic self-intersects";
            return;
          }
    }
    std::string gaps;
    for (double eps : {0.2, 0.1, 0.05}) {
      EpsilonNet net = epsilon_net(gal.tri, eps);
      DeltaChain chain = shortest_delta_chain(net, 1, 2, eps);
      const double gap = std::abs(chain_length(chain) - 2.0);
      if (gap > 2.0 * eps) {
        r.passed = false;
        r.detail = "chain gap " + fmt(gap) + " at eps " + fmt(eps);
        return;
      }
      gaps += (gaps.empty() ? "" : ",") + fmt(gap);
    }
    r.detail = "chain gaps " + gaps;
  }));

  rep.criteria.push_back(run_criterion(6, "area-formula", [&](CriterionResult& r) {
    auto check = [&](const PolylinePath& p, const EmbeddedGraph& g) {
      auto [lhs, rhs] = area_formula_check(p, g);
      return std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, lhs);
    };
    PolylinePath doubled;
    doubled.breakpoints = {{0.0, {0.0, 0.0}}, {0.5, {1.0, 0.0}}, {1.0, {0.0, 0.0}}};
    if (!check(doubled, gal.seg)) {
      r.passed = false;
      r.detail = "doubled segment";
      return;
    }
    std::mt19937 rng(s32 + 6);
    for (int i = 0; i < 20; ++i) {
      EmbeddedGraph tree = random_tree(6, s32 + 300 + i);
      std::vector<std::vector<std::pair<int, int>>> adj(tree.vertices.size());
      for (size_t e = 0; e < tree.edges.size(); ++e) {
        adj[tree.edges[e].first].push_back({tree.edges[e].second, static_cast<int>(e)});
        adj[tree.edges[e].second].push_back({tree.edges[e].first, static_cast<int>(e)});
      }
      std::vector<int> walk{static_cast<int>(rng() % tree.vertices.size())};
      for (int step = 0; step < 7; ++step) {
        const auto& nb = adj[walk.back()];
        walk.push_back(nb[rng() % nb.size()].first);
      }
      if (!check(vertex_walk_path(tree, walk), tree)) {
        r.passed = false;
        r.detail = "random walk instance " + std::to_string(i);
        return;
      }
    }
    if (!gal.canon_error.empty()) {
      r.passed = false;
      r.detail = "parametrization failed: " + gal.canon_error;
      return;
    }
    for (const auto& [g, res] : gal.canon)
      if (!check(res.path, *g)) {
        r.passed = false;
        r.detail = "canonical parametrization";
        return;
      }
    r.detail = "all instances within 1e-9";
  }));

  rep.criteria.push_back(run_criterion(7, "double-cover", [&](CriterionResult& r) {
    if (!gal.canon_error.empty()) {
      r.passed = false;
      r.detail = "parametrization failed: " + gal.canon_error;
      return;
    }
    auto check = [&](const EmbeddedGraph& g, const ParametrizationResult& res,
                     std::string& why) {
      const double target = 2.0 * h1(g);
      if (std::abs(path_length(res.path) - target) > 1e-9 * std::max(1.0, target)) {
        why = "length";
        return false;
      }
      for (size_t e = 0; e < g.edges.size(); ++e)
        if (res.ledger.forward[e] != 1 || res.ledger.backward[e] != 1) {
          why = "ledger";
          return false;
        }
      if (!degree_zero_test(res.path, 7, 1e-9).zero) {
        why = "degree";
        return false;
      }
      if (!constant_speed_ok(res.path, 1e-9)) {
        why = "speed";
        return false;
      }
      ParametrizationResult euler = double_cover_euler(g);
      if (std::abs(path_length(euler.path) - path_length(res.path)) > 1e-9) {
        why = "oracle length";
        return false;
      }
      for (size_t e = 0; e < g.edges.size(); ++e)
        if (euler.ledger.multiplicity(static_cast<int>(e)) !=
            res.ledger.multiplicity(static_cast<int>(e))) {
          why = "oracle ledger";
          return false;
        }
      return true;
    };
    std::string why;
    for (const auto& [g, res] : gal.canon)
      if (!check(*g, res, why)) {
        r.passed = false;
        r.detail = why + " invariant failed on gallery graph";
        return;
      }
    for (int i = 0; i < 10; ++i) {
      EmbeddedGraph tree = random_tree(5 + i % 5, s32 + 400 + i);
      if (!check(tree, canonical_parametrization(tree), why)) {
        r.passed = false;
        r.detail = why + " invariant failed on random tree " + std::to_string(i);
        return;
      }
    }
    r.detail = "gallery + 10 random trees";
  }));

  rep.criteria.push_back(run_criterion(8, "degree-parity", [&](CriterionResult& r) {
    if (!gal.canon_error.empty()) {
      r.passed = false;
      r.detail = "parametrization failed: " + gal.canon_error;
      return;
    }
    PolylinePath doubled;
    doubled.breakpoints = {{0.0, {0.0, 0.0}}, {0.5, {1.0, 0.0}}, {1.0, {0.0, 0.0}}};
    double worst_even = degree_zero_test(doubled, 8, 1e-9).worst_residual;
    for (const auto& [g, res] : gal.canon) {
      auto dz = degree_zero_test(res.path, 8, 1e-9);
      worst_even = std::max(worst_even, dz.worst_residual);
      if (!dz.zero) {
        r.passed = false;
        r.detail = "even path failed, residual " + fmt(dz.worst_residual);
        return;
      }
    }
    // odd witnesses: one-way traversals, tested on the coordinate family
    std::vector<TestPair> coords;
    for (size_t j = 0; j < 2; ++j)
      coords.emplace_back(ScalarField::constant(1.0, 2), ScalarField::coordinate(j, 2));
    PolylinePath one_way;
    one_way.breakpoints = {{0.0, {0.0, 0.0}}, {1.0, {1.0, 0.0}}};
    PolylinePath leaf_pass;
    leaf_pass.breakpoints = {{0.0, {1.0, 0.0}}, {0.5, {0.0, 0.0}}, {1.0, {-1.0, 0.0}}};
    double worst_odd = kInf;
    for (const PolylinePath* p : {&one_way, &leaf_pass}) {
      auto dz = degree_zero_test(*p, coords, 1e-9);
      worst_odd = std::min(worst_odd, dz.worst_residual);
      if (dz.zero || dz.worst_residual < 0.5) {
        r.passed = false;
        r.detail = "odd witness residual " + fmt(dz.worst_residual);
        return;
      }
    }
    r.detail = "even<=" + fmt(worst_even) + " odd>=" + fmt(worst_odd);
  }));

  rep.criteria.push_back(run_criterion(9, "semicontinuity", [&](CriterionResult& r) {
    auto stair = semicontinuity_report(make_scenario("staircase"),
                                       {2, 4, 8, 16, 32}, 0.02);
    const double gap = stair.liminf_estimate - stair.h1_limit;
    if (!stair.holds || std::abs(gap - (2.0 - std::sqrt(2.0))) > 1e-9) {
      r.passed = false;
      r.detail = "staircase gap " + fmt(gap);
      return;
    }
    auto combrep = semicontinuity_report(make_scenario("comb"), {4, 16, 64}, 0.02);
    if (!combrep.holds) {
      r.passed = false;
      r.detail = "comb verdict";
      return;
    }
    for (const auto& row : combrep.rows)
      if (std::abs(row.h1_value - (1.0 + std::sqrt(static_cast<double>(row.n)))) >
          1e-12) {
        r.passed = false;
        r.detail = "comb h1 at n=" + std::to_string(row.n);
        return;
      }
    auto poly = semicontinuity_report(make_scenario("polygon"), {8, 16, 32, 64}, 0.02);
    if (!poly.holds) {
      r.passed = false;
      r.detail = "polygon verdict";
      return;
    }
    auto dustrep = semicontinuity_report(make_scenario("dust"), {10, 100}, 0.02);
    if (dustrep.holds) {
      r.passed = false;
      r.detail = "dust verdict should be violated";
      return;
    }
    r.detail = "staircase gap " + fmt(gap) + ", polygon slack " +
               fmt(poly.liminf_estimate - poly.h1_limit) + ", dust violated";
  }));

  rep.criteria.push_back(run_criterion(10, "quantitative-bounds", [&](CriterionResult& r) {
    for (int i = 0; i < 100; ++i) {
      EmbeddedGraph tree = random_tree(5 + i % 5, s32 + 500 + i);
      const PointSet net = epsilon_net(tree, 0.05).coords();
      if (!diameter_chain_bound_check(tree, net, 0.1, 1)) {
        r.passed = false;
        r.detail = "diameter bound, instance " + std::to_string(i);
        return;
      }
      // whole graph as region: empty boundary, margin hypothesis vacuous
      Coverage whole(tree.edges.size());
      for (size_t e = 0; e < tree.edges.size(); ++e)
        whole.add(static_cast<int>(e), 0.0, 1.0);
      if (!localized_bound_check(tree, net, whole, 0.3, 0.1, 1)) {
        r.passed = false;
        r.detail = "empty-boundary bound, instance " + std::to_string(i);
        return;
      }
      // localized to the middle of edge 0
      const double len0 = tree.edge_length(0);
      Coverage edge0(tree.edges.size());
      edge0.add(0, 0.0, 1.0);
      PointSet mid;
      for (double s = 0.35; s <= 0.651; s += 0.05)
        mid.push_back(point_at(tree, {0, s}));
      if (!localized_bound_check(tree, mid, edge0, 0.3 * len0, 0.05 * len0, 1)) {
        r.passed = false;
        r.detail = "localized bound, instance " + std::to_string(i);
        return;
      }
      if (i == 0 && !localized_bound_check(tree, {mid.front()}, edge0,
                                           0.3 * len0, 0.05 * len0, 1)) {
        r.passed = false;
        r.detail = "degenerate diameter case";
        return;
      }
    }
    r.detail = "100 instances";
  }));

  rep.criteria.push_back(run_criterion(11, "reproducibility", [&](CriterionResult& r) {
    auto render = [&]() {
      std::ostringstream os;
      os << serialize_graph(random_tree(8, s32 + 600));
      auto stair = semicontinuity_report(make_scenario("staircase"), {2, 4, 8}, 0.05);
      for (const auto& row : stair.rows)
        os << row.n << "," << fmt(row.d_hausdorff) << "," << fmt(row.h1_value) << "\n";
      os << fmt(chain_bound_check(gal.tri, 0.2, 0.2).worst_ratio) << "\n";
      os << fmt(degree_zero_test(canonical_parametrization(gal.tri).path, seed, 1e-9)
                    .worst_residual)
         << "\n";
      return os.str();
    };
    const std::string a = render(), b = render();
    r.passed = a == b;
    r.detail = r.passed ? "byte-identical" : "reports differ";
  }));

  rep.all_passed = true;
  for (const auto& c : rep.criteria) rep.all_passed = rep.all_passed && c.passed;
  return rep;
}

std::string format_selftest(const SelftestReport& r) {
  std::ostringstream os;
  os << "selftest seed=" << r.seed << "\n";
  for (const auto& c : r.criteria)
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  "
       << c.detail << "\n";
  os << (r.all_passed ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace contmeas
