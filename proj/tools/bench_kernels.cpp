// Compares the parallel kernels against their serial references:
// Hausdorff distance between large nets and all-pairs chain lengths.
#include <chrono>
#include <cstdio>
#include <random>

#include "contmeas/chain.hpp"
#include "contmeas/geometry.hpp"
#include "contmeas/golab.hpp"
#include "contmeas/graph.hpp"

using namespace contmeas;

namespace {

template <class F>
double time_ms(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

PointSet random_points(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointSet pts;
  for (int i = 0; i < n; ++i) pts.push_back({unit(rng), unit(rng)});
  return pts;
}

}  // namespace

int main() {
  {
    const PointSet a = random_points(4000, 1), b = random_points(4000, 2);
    double dp = 0, ds = 0;
    const double tp = time_ms([&] { dp = hausdorff_distance(a, b); });
    const double ts = time_ms([&] { ds = hausdorff_distance_serial(a, b); });
    std::printf("hausdorff 4000x4000: parallel %.1f ms, serial %.1f ms, |diff| %.3g\n",
                tp, ts, std::abs(dp - ds));
  }
  {
    EmbeddedGraph tree = random_tree(40, 7);
    EpsilonNet net = epsilon_net(tree, 0.02);
    std::vector<std::vector<double>> lp, ls;
    const double tp = time_ms([&] { lp = all_pairs_chain_lengths(net, 0.05); });
    const double ts = time_ms([&] { ls = all_pairs_chain_lengths_serial(net, 0.05); });
    double worst = 0.0;
    for (size_t i = 0; i < lp.size(); ++i)
      for (size_t j = 0; j < lp[i].size(); ++j)
        if (std::isfinite(lp[i][j]) || std::isfinite(ls[i][j]))
          worst = std::max(worst, std::abs(lp[i][j] - ls[i][j]));
    std::printf("chains %zu samples: parallel %.1f ms, serial %.1f ms, |diff| %.3g\n",
                net.samples.size(), tp, ts, worst);
  }
  return 0;
}
