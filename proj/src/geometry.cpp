#include "contmeas/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace contmeas {

double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

double diam(const PointSet& s) {
  double best = 0.0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      best = std::max(best, dist2(s[i], s[j]));
  return std::sqrt(best);
}

double set_distance(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) return kInf;
  double best = kInf;
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, dist2(p, q));
  return std::sqrt(best);
}

static double nearest2(const Point& p, const PointSet& s) {
  double best = kInf;
  for (const auto& q : s) best = std::min(best, dist2(p, q));
  return best;
}

double directed_deviation(const PointSet& a, const PointSet& b) {
  double worst = 0.0;
#ifdef CONTMEAS_OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
  for (long i = 0; i < static_cast<long>(a.size()); ++i)
    worst = std::max(worst, nearest2(a[i], b));
  return std::sqrt(worst);
}

double hausdorff_distance(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hausdorff_distance: undefined for empty set");
  return std::max(directed_deviation(a, b), directed_deviation(b, a));
}

double hausdorff_distance_serial(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hausdorff_distance: undefined for empty set");
  double worst = 0.0;
  for (const auto& p : a) worst = std::max(worst, nearest2(p, b));
  for (const auto& q : b) worst = std::max(worst, nearest2(q, a));
  return std::sqrt(worst);
}

double point_segment_distance(const Point& p, const Point& u, const Point& v) {
  const size_t d = p.size();
  double uv2 = 0.0, t = 0.0;
  for (size_t i = 0; i < d; ++i) {
    const double e = v[i] - u[i];
    uv2 += e * e;
    t += (p[i] - u[i]) * e;
  }
  t = uv2 > 0.0 ? std::clamp(t / uv2, 0.0, 1.0) : 0.0;
  double s = 0.0;
  for (size_t i = 0; i < d; ++i) {
    const double e = u[i] + t * (v[i] - u[i]) - p[i];
    s += e * e;
  }
  return std::sqrt(s);
}

double segment_segment_distance(const Point& a0, const Point& a1,
                                const Point& b0, const Point& b1) {
  // Closest points of two segments, via the standard clamped quadratic.
  const size_t n = a0.size();
  std::vector<double> u(n), v(n), w(n);
  for (size_t i = 0; i < n; ++i) {
    u[i] = a1[i] - a0[i];
    v[i] = b1[i] - b0[i];
    w[i] = a0[i] - b0[i];
  }
  double A = 0, B = 0, C = 0, D = 0, E = 0;
  for (size_t i = 0; i < n; ++i) {
    A += u[i] * u[i];
    B += u[i] * v[i];
    C += v[i] * v[i];
    D += u[i] * w[i];
    E += v[i] * w[i];
  }
  const double den = A * C - B * B;
  double s, t;
  if (den > 1e-30) {
    s = std::clamp((B * E - C * D) / den, 0.0, 1.0);
  } else {
    s = 0.0;  // near-parallel; endpoints below cover the rest
  }
  t = C > 0 ? std::clamp((B * s + E) / C, 0.0, 1.0) : 0.0;
  if (A > 0) s = std::clamp((B * t - D) / A, 0.0, 1.0);
  double best = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double e = (a0[i] + s * u[i]) - (b0[i] + t * v[i]);
    best += e * e;
  }
  best = std::sqrt(best);
  // Endpoint-to-segment checks guard the degenerate branches.
  best = std::min(best, point_segment_distance(a0, b0, b1));
  best = std::min(best, point_segment_distance(a1, b0, b1));
  best = std::min(best, point_segment_distance(b0, a0, a1));
  best = std::min(best, point_segment_distance(b1, a0, a1));
  return best;
}

}  // namespace contmeas
