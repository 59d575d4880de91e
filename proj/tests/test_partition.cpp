#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"
#include "contmeas/partition.hpp"
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

double piece_measure_sum(const DeltaPartition& p) {
  double s = 0.0;
  for (const auto& piece : p.pieces) s += piece.measure;
  return s;
}

}  // namespace

TEST_CASE("delta partition on a segment") {
  auto p = delta_partition(unit_segment(), 0.25);
  CHECK(diameter_sum(p) == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& piece : p.pieces) CHECK(piece.diameter <= 0.25 + 1e-12);
  CHECK(piece_measure_sum(p) == doctest::Approx(1.0).epsilon(1e-12));

  p = delta_partition(unit_segment(), 2.0);
  CHECK(p.pieces.size() == 1);
  CHECK(diameter_sum(p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta partition covers and respects delta") {
  EmbeddedGraph gon = scenario_graph("polygon", 64);
  auto p = delta_partition(gon, 0.15);
  const double sum = diameter_sum(p);
  CHECK(sum >= 6.21);
  CHECK(sum <= h1(gon) + 1e-12);
  CHECK(piece_measure_sum(p) == doctest::Approx(h1(gon)).epsilon(1e-9));
  for (const auto& piece : p.pieces) CHECK(piece.diameter <= 0.15 + 1e-12);

  CHECK_THROWS(delta_partition(unit_segment(), 0.0));
  EmbeddedGraph two{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {1.0, 2.0}},
                    {{0, 1}, {2, 3}}};
  CHECK_THROWS_WITH(delta_partition(two, 0.5), "delta_partition: apply per component");
}

TEST_CASE("lower bound examples") {
  CHECK(l_delta_lower_bound(unit_segment(), 0.25) ==
        doctest::Approx(1.0).epsilon(1e-9));
  const double tri = l_delta_lower_bound(tripod(), 0.5);
  CHECK(tri >= 2.9);
  CHECK(tri <= 3.0 + 1e-12);

  EmbeddedGraph ell{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}, {{0, 1}, {1, 2}}};
  CHECK(l_delta_lower_bound(ell, 0.5) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("bruteforce oracle") {
  CHECK(l_delta_bruteforce(unit_segment(), 0.5, 4) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // two straight pieces beat one bent piece
  const double th = 0.2;
  EmbeddedGraph v{{{-1.0, 0.0}, {0.0, 0.0}, {std::cos(th), std::sin(th)}},
                  {{0, 1}, {1, 2}}};
  CHECK(l_delta_bruteforce(v, 2.1, 8) == doctest::Approx(2.0).epsilon(1e-9));

  EmbeddedGraph dust_pts = scenario_graph("dust", 2);
  CHECK(l_delta_bruteforce(dust_pts, 0.5, 4) == 0.0);

  CHECK_THROWS_WITH(l_delta_bruteforce(tripod(), 0.5, 30),
                    "l_delta_bruteforce: oracle limited to desk scale");
}

TEST_CASE("oracle sandwich and resolution monotonicity") {
  for (const auto& [g, delta, res] :
       {std::tuple<EmbeddedGraph, double, int>{unit_segment(), 0.5, 8},
        std::tuple<EmbeddedGraph, double, int>{tripod(), 1.0, 8}}) {
    const double greedy = l_delta_lower_bound(g, delta);
    const double o1 = l_delta_bruteforce(g, delta, res);
    const double o2 = l_delta_bruteforce(g, delta, 2 * res);
    CHECK(o1 + 1e-12 >= greedy);
    CHECK(o2 + 1e-12 >= o1);
    CHECK(o2 <= h1(g) + 1e-12);
  }
}

TEST_CASE("diameter sum converges to h1") {
  for (const EmbeddedGraph& g : {unit_segment(), tripod()}) {
    const double h = h1(g);
    bool reached = false;
    for (int k = 1; k <= 10 && !reached; ++k) {
      const double sum = diameter_sum(delta_partition(g, h / std::pow(2.0, k)));
      CHECK(sum <= h + 1e-9);
      reached = sum >= 0.99 * h;
    }
    CHECK(reached);
  }
}
