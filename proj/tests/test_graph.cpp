#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"
#include "contmeas/graph_io.hpp"
#include "doctest.h"

using namespace contmeas;

namespace {

EmbeddedGraph unit_segment() {
  return {{{0.0, 0.0}, {1.0, 0.0}}, {{0, 1}}};
}

EmbeddedGraph tripod() {
  return {{{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}},
          {{0, 1}, {0, 2}, {0, 3}}};
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(unit_segment()).empty());

  // crossing diagonals without a registered center vertex
  EmbeddedGraph x{{{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}},
                  {{0, 1}, {2, 3}}};
  auto v = validate(x);
  REQUIRE(v.size() == 1);
  CHECK(v.front().message == "interior intersection");

  // same shape with the center vertex registered
  EmbeddedGraph plus{{{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}, {0.5, 0.5}},
                     {{0, 4}, {4, 1}, {2, 4}, {4, 3}}};
  CHECK(validate(plus).empty());

  EmbeddedGraph bad = unit_segment();
  bad.edges.push_back({0, 5});
  CHECK_FALSE(validate(bad).empty());

  EmbeddedGraph dup = unit_segment();
  dup.edges.push_back({1, 0});
  CHECK(validate(dup).front().message == "duplicate edge");

  // collinear overlap from a shared vertex
  EmbeddedGraph overlap{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}},
                        {{0, 2}, {0, 1}}};
  bool found = false;
  for (const auto& viol : validate(overlap))
    found = found || viol.message == "overlapping collinear edges";
  CHECK(found);
}

TEST_CASE("h1 exact values and additivity") {
  CHECK(h1(unit_segment()) == 1.0);
  CHECK(h1(tripod()) == 3.0);
  EmbeddedGraph gon = scenario_graph("polygon", 64);
  CHECK(std::abs(h1(gon) - 2.0 * 64.0 * std::sin(M_PI / 64.0)) <= 1e-12);

  EmbeddedGraph two{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {1.0, 2.0}},
                    {{0, 1}, {2, 3}}};
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(h1(comps[0]) + h1(comps[1]) == h1(two));
  CHECK(components(tripod()).size() == 1);
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("intrinsic distance") {
  CHECK(intrinsic_distance(unit_segment(), {0, 0.0}, {0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(intrinsic_distance(tripod(), {0, 1.0}, {2, 1.0}) ==
        doctest::Approx(2.0).epsilon(1e-15));
  EmbeddedGraph two{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {1.0, 2.0}},
                    {{0, 1}, {2, 3}}};
  CHECK(intrinsic_distance(two, {0, 0.5}, {1, 0.5}) == kInf);
  CHECK_THROWS(intrinsic_distance(unit_segment(), {3, 0.5}, {0, 0.0}));

  // metric axioms and the Euclidean lower bound on random sample pairs
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EmbeddedGraph tree = random_tree(7, 99);
  for (int it = 0; it < 30; ++it) {
    const int ne = static_cast<int>(tree.edges.size());
    GraphPoint p{static_cast<int>(rng() % ne), unit(rng)};
    GraphPoint q{static_cast<int>(rng() % ne), unit(rng)};
    GraphPoint r{static_cast<int>(rng() % ne), unit(rng)};
    const double pq = intrinsic_distance(tree, p, q);
    CHECK(pq == doctest::Approx(intrinsic_distance(tree, q, p)).epsilon(1e-12));
    CHECK(pq + 1e-12 >= dist(point_at(tree, p), point_at(tree, q)));
    CHECK(pq <= intrinsic_distance(tree, p, r) + intrinsic_distance(tree, r, q) +
                    1e-12);
  }
}

TEST_CASE("h1 >= diameter for connected graphs") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    EmbeddedGraph tree = random_tree(6, seed);
    CHECK(h1(tree) + 1e-12 >= diam(tree.vertices));
  }
}

TEST_CASE("intrinsic ball measure") {
  // ball of radius r around the tripod center meets all three legs
  CHECK(intrinsic_ball_measure(tripod(), 0, 0.5) == doctest::Approx(1.5));
  CHECK(intrinsic_ball_measure(tripod(), 0, 2.0) == doctest::Approx(3.0));
  for (unsigned seed = 0; seed < 10; ++seed) {
    EmbeddedGraph tree = random_tree(6, 100 + seed);
    auto d = vertex_distances(tree, 0);
    const double dmax = *std::max_element(d.begin(), d.end());
    const double r = 0.5 * dmax;
    CHECK(intrinsic_ball_measure(tree, 0, r) + 1e-12 >= r);
  }
}

TEST_CASE("epsilon nets") {
  EpsilonNet net = epsilon_net(unit_segment(), 0.25);
  CHECK(net.samples.size() == 5);
  net = epsilon_net(unit_segment(), 2.0);
  CHECK(net.samples.size() == 2);
  net = epsilon_net(tripod(), 0.5);
  CHECK(net.samples.size() == 7);
  CHECK_THROWS(epsilon_net(tripod(), 0.0));

  // spacing invariant: every sampled midpoint is near some sample
  net = epsilon_net(tripod(), 0.3);
  PointSet coords = net.coords();
  for (size_t e = 0; e < tripod().edges.size(); ++e)
    for (double s = 0.05; s < 1.0; s += 0.1) {
      const Point p = point_at(tripod(), {static_cast<int>(e), s});
      double best = kInf;
      for (const auto& c : coords) best = std::min(best, dist(p, c));
      CHECK(best <= 0.3);
    }
}

TEST_CASE("graph io round trip") {
  EmbeddedGraph g = parse_graph("v 0 0\nv 1 0\ne 0 1\n");
  CHECK(h1(g) == 1.0);
  CHECK_THROWS_AS(parse_graph("e 0 5\n"), ParseError);
  try {
    parse_graph("e 0 5\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at line 1") != std::string::npos);
  }
  // crossing segments are rejected with the offending edges named
  CHECK_THROWS(parse_graph("v 0 0\nv 1 1\nv 0 1\nv 1 0\ne 0 1\ne 2 3\n"));

  for (unsigned seed = 0; seed < 5; ++seed) {
    EmbeddedGraph tree = random_tree(8, 200 + seed);
    EmbeddedGraph back = parse_graph(serialize_graph(tree));
    REQUIRE(back.vertices.size() == tree.vertices.size());
    REQUIRE(back.edges == tree.edges);
    for (size_t v = 0; v < tree.vertices.size(); ++v)
      CHECK(back.vertices[v] == tree.vertices[v]);
  }
}
