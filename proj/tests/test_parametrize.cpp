#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"
#include "contmeas/parametrize.hpp"
#include "contmeas/path.hpp"
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

EmbeddedGraph theta_graph() {
  // straight bar plus two polygonal arcs between the same endpoints
  std::vector<Point> v{{-1.0, 0.0}, {1.0, 0.0}};
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int sign : {1, -1}) {
    int prev = 0;
    for (int k = 1; k < 8; ++k) {
      const double a = M_PI * (1.0 - k / 8.0);
      v.push_back({std::cos(a), sign * std::sin(a)});
      e.push_back({prev, static_cast<int>(v.size()) - 1});
      prev = static_cast<int>(v.size()) - 1;
    }
    e.push_back({prev, 1});
  }
  return {v, e};
}

void check_canonical(const EmbeddedGraph& g, const ParametrizationResult& r) {
  CHECK(r.path.closed());
  CHECK(path_length(r.path) == doctest::Approx(2.0 * h1(g)).epsilon(1e-9));
  REQUIRE(r.ledger.forward.size() == g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(r.ledger.forward[e] == 1);
    CHECK(r.ledger.backward[e] == 1);
  }
  CHECK(degree_zero_test(r.path, 17, 1e-9).zero);
  // constant speed on dyadic subintervals
  const double len = path_length(r.path);
  for (int k = 0; k < 8; ++k) {
    const double t0 = k / 8.0, t1 = (k + 1) / 8.0;
    CHECK(path_length(r.path, t0, t1) ==
          doctest::Approx(len / 8.0).epsilon(1e-8));
  }
}

}  // namespace

TEST_CASE("coverage bookkeeping") {
  Coverage cov(2);
  CHECK(cov.empty());
  cov.add(0, 0.2, 0.4);
  cov.add(0, 0.6, 0.8);
  CHECK(cov.intervals[0].size() == 2);
  cov.add(0, 0.4, 0.6);  // merges the three into one
  REQUIRE(cov.intervals[0].size() == 1);
  CHECK(cov.intervals[0][0].first == doctest::Approx(0.2));
  CHECK(cov.intervals[0][0].second == doctest::Approx(0.8));
  CHECK(cov.contains(0, 0.5));
  CHECK_FALSE(cov.contains(0, 0.1));
  CHECK(cov.uncovered_measure(0, 1.0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(cov.uncovered_measure(1, 3.0) == doctest::Approx(3.0));
  CHECK_FALSE(cov.empty());

  EmbeddedGraph two{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(cov.complete(two));
  cov.add(0, 0.0, 1.0);
  cov.add(1, 0.0, 1.0);
  CHECK(cov.complete(two));
}

TEST_CASE("canonical parametrization on a segment") {
  auto r = canonical_parametrization(unit_segment());
  CHECK(r.iterations == 1);
  CHECK(path_length(r.path) == doctest::Approx(2.0).epsilon(1e-12));
  check_canonical(unit_segment(), r);
  // the doubled geodesic visits the far endpoint at the midpoint time
  CHECK(dist(r.path.eval(0.5), {1.0, 0.0}) <= 1e-9);
}

TEST_CASE("canonical parametrization on a tripod") {
  auto r = canonical_parametrization(tripod());
  CHECK(r.iterations <= 3);
  CHECK(path_length(r.path) == doctest::Approx(6.0).epsilon(1e-12));
  check_canonical(tripod(), r);
}

TEST_CASE("canonical parametrization on cycles") {
  EmbeddedGraph gon = scenario_graph("polygon", 64);
  auto r = canonical_parametrization(gon);
  check_canonical(gon, r);

  EmbeddedGraph theta = theta_graph();
  auto t = canonical_parametrization(theta);
  check_canonical(theta, t);
}

TEST_CASE("canonical parametrization on random trees") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    EmbeddedGraph tree = random_tree(5 + seed % 5, 400 + seed);
    auto r = canonical_parametrization(tree);
    check_canonical(tree, r);
    // every spur after the first attaches to already covered ground
    CHECK(r.iterations == static_cast<int>(r.spur_lengths.size()));
  }
}

TEST_CASE("canonical parametrization input validation") {
  EmbeddedGraph two{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {1.0, 2.0}},
                    {{0, 1}, {2, 3}}};
  CHECK_THROWS(canonical_parametrization(two));
  EmbeddedGraph empty;
  CHECK_THROWS(canonical_parametrization(empty));
}

TEST_CASE("euler tour oracle") {
  for (const EmbeddedGraph& g :
       {unit_segment(), tripod(), scenario_graph("polygon", 16), theta_graph()}) {
    auto oracle = double_cover_euler(g);
    auto canon = canonical_parametrization(g);
    CHECK(path_length(oracle.path) ==
          doctest::Approx(path_length(canon.path)).epsilon(1e-9));
    REQUIRE(oracle.ledger.forward.size() == g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e)
      CHECK(oracle.ledger.multiplicity(static_cast<int>(e)) ==
            canon.ledger.multiplicity(static_cast<int>(e)));
    CHECK(oracle.path.closed());
  }
}

TEST_CASE("farthest uncovered point") {
  // tripod with one leg covered: both other leg tips are at distance 1
  Coverage cov(3);
  cov.add(0, 0.0, 1.0);
  FarthestPoint far = farthest_uncovered_point(tripod(), cov);
  CHECK(far.distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((far.point.edge == 1 || far.point.edge == 2));
  CHECK(far.point.s == doctest::Approx(1.0));

  // path A-B-C with A-B covered: farthest is C at distance 1
  EmbeddedGraph abc{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, {{0, 1}, {1, 2}}};
  Coverage cov2(2);
  cov2.add(0, 0.0, 1.0);
  far = farthest_uncovered_point(abc, cov2);
  CHECK(far.distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(far.point.edge == 1);
  CHECK(far.point.s == doctest::Approx(1.0));

  // interior gap: the midpoint of the gap is the farthest point
  Coverage cov3(2);
  cov3.add(0, 0.0, 1.0);
  cov3.add(1, 0.5, 1.0);
  far = farthest_uncovered_point(abc, cov3);
  CHECK(far.distance == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(far.point.edge == 1);
  CHECK(far.point.s == doctest::Approx(0.25));

  // ledger view: covered edges count wholesale
  TraversalLedger ledger;
  ledger.forward = {1, 0};
  ledger.backward = {1, 0};
  far = farthest_uncovered_point(abc, ledger);
  CHECK(far.distance == doctest::Approx(1.0).epsilon(1e-12));

  Coverage full(2);
  full.add(0, 0.0, 1.0);
  full.add(1, 0.0, 1.0);
  CHECK_THROWS_WITH(farthest_uncovered_point(abc, full),
                    "farthest_uncovered_point: nothing uncovered");
  CHECK_THROWS_WITH(farthest_uncovered_point(abc, Coverage(2)),
                    "farthest_uncovered_point: nothing covered yet");
}
