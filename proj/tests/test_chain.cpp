#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "contmeas/chain.hpp"
#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"
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

EmbeddedGraph two_segments(double gap) {
  return {{{0.0, 0.0}, {1.0, 0.0}, {1.0 + gap, 0.0}, {2.0 + gap, 0.0}},
          {{0, 1}, {2, 3}}};
}

}  // namespace

TEST_CASE("chain length") {
  CHECK(chain_length({{{0.0, 0.0}}, 1.0}) == 0.0);
  CHECK(chain_length({{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}, 1.0}) ==
        doctest::Approx(2.0));
  DeltaChain c;
  c.delta = 0.1;
  for (int k = 0; k <= 10; ++k) c.points.push_back({k / 10.0, 0.0});
  CHECK(chain_length(c) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta connectivity") {
  CHECK(is_delta_connected(epsilon_net(tripod(), 0.2), 0.2));
  CHECK_FALSE(is_delta_connected(epsilon_net(two_segments(0.5), 0.25), 0.4));
  CHECK(is_delta_connected(epsilon_net(two_segments(0.5), 0.25), 0.6));
}

TEST_CASE("shortest delta chains") {
  // vertices come first in the net, so sample index = vertex index
  EpsilonNet net = epsilon_net(unit_segment(), 0.25);
  CHECK(chain_length(shortest_delta_chain(net, 0, 1, 0.25)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  net = epsilon_net(tripod(), 0.25);
  CHECK(chain_length(shortest_delta_chain(net, 1, 2, 0.25)) ==
        doctest::Approx(2.0).epsilon(1e-9));

  EmbeddedGraph square{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                       {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  net = epsilon_net(square, 0.5);
  CHECK(chain_length(shortest_delta_chain(net, 0, 2, 1.5)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  net = epsilon_net(two_segments(0.5), 0.25);
  CHECK_THROWS_WITH(shortest_delta_chain(net, 0, 3, 0.4),
                    "shortest_delta_chain: no delta-chain");
}

TEST_CASE("parallel all-pairs matches serial") {
  EmbeddedGraph tree = random_tree(8, 5);
  EpsilonNet net = epsilon_net(tree, 0.1);
  auto par = all_pairs_chain_lengths(net, 0.2);
  auto ser = all_pairs_chain_lengths_serial(net, 0.2);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i)
    for (size_t j = 0; j < par[i].size(); ++j)
      CHECK(par[i][j] == doctest::Approx(ser[i][j]).epsilon(1e-15));
}

TEST_CASE("chain bound factor four") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    EmbeddedGraph tree = random_tree(4 + seed % 6, 300 + seed);
    auto res = chain_bound_check(tree, 0.2, 0.2);
    CHECK(res.ok);
    CHECK(res.worst_ratio <= 1.0 + 1e-12);
  }
}

TEST_CASE("geodesics") {
  PolylinePath p = geodesic(unit_segment(), {0, 0.0}, {0, 1.0});
  CHECK(path_length(p) == doctest::Approx(1.0).epsilon(1e-15));

  p = geodesic(tripod(), {0, 1.0}, {2, 1.0});
  CHECK(path_length(p) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(path_length(p) <= h1(tripod()));

  EmbeddedGraph square{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                       {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  p = geodesic(square, {0, 0.0}, {1, 1.0});
  CHECK(path_length(p) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS(geodesic(tripod(), {0, 0.5}, {0, 0.5}));
  CHECK_THROWS(geodesic(two_segments(0.5), {0, 0.5}, {1, 0.5}));
}

TEST_CASE("geodesic constant speed on subintervals") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PolylinePath p = geodesic(tripod(), {0, 0.7}, {1, 0.4});
  const double len = path_length(p);
  for (int it = 0; it < 40; ++it) {
    double t0 = unit(rng), t1 = unit(rng);
    if (t0 > t1) std::swap(t0, t1);
    CHECK(path_length(p, t0, t1) ==
          doctest::Approx(len * (t1 - t0)).epsilon(1e-10));
  }
}

TEST_CASE("chain lengths converge to geodesic length") {
  double prev_gap = kInf;
  for (double eps : {0.2, 0.1, 0.05}) {
    EpsilonNet net = epsilon_net(tripod(), eps);
    const double len = chain_length(shortest_delta_chain(net, 1, 2, eps));
    const double gap = std::abs(len - 2.0);
    CHECK(gap <= 2.0 * eps);
    CHECK(gap <= prev_gap + 1e-12);
    prev_gap = gap;
  }
}
