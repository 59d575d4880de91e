#include "contmeas/path.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace contmeas {

namespace {
constexpr double kOnGraphTol = 1e-9;
}

Point PolylinePath::eval(double t) const {
  if (breakpoints.empty()) throw std::logic_error("empty polyline");
  if (t <= breakpoints.front().t) return breakpoints.front().p;
  if (t >= breakpoints.back().t) return breakpoints.back().p;
  size_t lo = 0, hi = breakpoints.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    (breakpoints[mid].t <= t ? lo : hi) = mid;
  }
  const auto& a = breakpoints[lo];
  const auto& b = breakpoints[hi];
  const double u = (t - a.t) / (b.t - a.t);
  Point out(a.p.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.p[i] + u * (b.p[i] - a.p[i]);
  return out;
}

bool PolylinePath::closed(double tol) const {
  return !breakpoints.empty() &&
         dist(breakpoints.front().p, breakpoints.back().p) <= tol;
}

void check_polyline(const PolylinePath& p) {
  if (p.breakpoints.size() < 2)
    throw std::invalid_argument("polyline needs at least 2 breakpoints");
  if (p.breakpoints.front().t != 0.0 || p.breakpoints.back().t != 1.0)
    throw std::invalid_argument("polyline parameters must span [0,1]");
  for (size_t i = 0; i < p.breakpoints.size(); ++i) {
    for (double c : p.breakpoints[i].p)
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite breakpoint");
    if (i > 0 && !(p.breakpoints[i].t > p.breakpoints[i - 1].t))
      throw std::invalid_argument("polyline parameters must be strictly increasing");
  }
}

LengthMeasure length_measure(const PolylinePath& p) {
  LengthMeasure m;
  m.path = &p;
  m.cumulative.resize(p.breakpoints.size());
  double acc = 0.0;
  for (size_t i = 0; i < p.breakpoints.size(); ++i) {
    if (i > 0) acc += dist(p.breakpoints[i - 1].p, p.breakpoints[i].p);
    m.cumulative[i] = acc;
  }
  return m;
}

double LengthMeasure::mass(double t0, double t1) const {
  if (t0 > t1) throw std::invalid_argument("mass: t0 > t1");
  const auto& bp = path->breakpoints;
  auto at = [&](double t) {
    if (t <= bp.front().t) return 0.0;
    if (t >= bp.back().t) return cumulative.back();
    size_t lo = 0, hi = bp.size() - 1;
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      (bp[mid].t <= t ? lo : hi) = mid;
    }
    const double u = (t - bp[lo].t) / (bp[hi].t - bp[lo].t);
    return cumulative[lo] + u * (cumulative[hi] - cumulative[lo]);
  };
  return at(t1) - at(t0);
}

double path_length(const PolylinePath& p, double t0, double t1) {
  return length_measure(p).mass(t0, t1);
}

PolylinePath constant_speed_reparam(const PolylinePath& p) {
  check_polyline(p);
  auto m = length_measure(p);
  const double total = m.total();
  if (total < 1e-12)
    throw std::invalid_argument("constant_speed_reparam: degenerate path");
  PolylinePath out;
  for (size_t i = 0; i < p.breakpoints.size(); ++i) {
    double t = m.cumulative[i] / total;
    if (!out.breakpoints.empty() && t <= out.breakpoints.back().t) continue;
    out.breakpoints.push_back({t, p.breakpoints[i].p});
  }
  out.breakpoints.front().t = 0.0;
  out.breakpoints.back().t = 1.0;
  return out;
}

bool TraversalLedger::even() const {
  for (size_t e = 0; e < forward.size(); ++e)
    if ((forward[e] + backward[e]) % 2 != 0) return false;
  return true;
}

bool TraversalLedger::covers_all() const {
  for (size_t e = 0; e < forward.size(); ++e)
    if (forward[e] + backward[e] == 0) return false;
  return true;
}

namespace {

struct DirInterval {
  double lo, hi;
  bool fwd;
};

// Constant coverage count of [0,1] by the given intervals, with endpoint
// clustering at tolerance tol. Returns -1 if the count is not constant.
int constant_cover_count(std::vector<std::pair<double, double>> iv, double tol) {
  std::vector<double> cuts{0.0, 1.0};
  for (auto& [a, b] : iv) {
    cuts.push_back(a);
    cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> reps;
  for (double c : cuts)
    if (reps.empty() || c - reps.back() > tol) reps.push_back(c);
  int count = -1;
  for (size_t i = 0; i + 1 < reps.size(); ++i) {
    const double mid = 0.5 * (reps[i] + reps[i + 1]);
    int k = 0;
    for (auto& [a, b] : iv)
      if (a - tol <= mid && mid <= b + tol) ++k;
    if (count < 0)
      count = k;
    else if (count != k)
      return -1;
  }
  return std::max(count, 0);
}

double clamped_offset(const Point& x, const Point& a, const Point& b) {
  double num = 0, den = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - a[i]) * (b[i] - a[i]);
    den += (b[i] - a[i]) * (b[i] - a[i]);
  }
  return den > 0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
}

}  // namespace

TraversalLedger edge_multiplicity(const PolylinePath& p, const EmbeddedGraph& g) {
  check_polyline(p);
  const int ne = static_cast<int>(g.edges.size());
  std::vector<std::vector<DirInterval>> per_edge(ne);

  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    Point a = p.breakpoints[i].p;
    Point b = p.breakpoints[i + 1].p;
    if (dist(a, b) < 1e-12) continue;
    // Split at graph vertices lying inside the segment, so every piece
    // stays within one edge.
    std::vector<std::pair<double, Point>> stops{{0.0, a}, {1.0, b}};
    for (const auto& v : g.vertices) {
      if (point_segment_distance(v, a, b) < kOnGraphTol) {
        const double u = clamped_offset(v, a, b);
        if (u > 1e-9 && u < 1.0 - 1e-9) stops.emplace_back(u, v);
      }
    }
    std::sort(stops.begin(), stops.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t k = 0; k + 1 < stops.size(); ++k) {
      const Point& sa = stops[k].second;
      const Point& sb = stops[k + 1].second;
      if (dist(sa, sb) < 1e-12) continue;
      bool mapped = false;
      for (int e = 0; e < ne && !mapped; ++e) {
        const Point& ea = g.edge_a(e);
        const Point& eb = g.edge_b(e);
        if (point_segment_distance(sa, ea, eb) > kOnGraphTol) continue;
        if (point_segment_distance(sb, ea, eb) > kOnGraphTol) continue;
        const double oa = clamped_offset(sa, ea, eb);
        const double ob = clamped_offset(sb, ea, eb);
        if (std::abs(oa - ob) * g.edge_length(e) < 1e-12) continue;
        per_edge[e].push_back({std::min(oa, ob), std::max(oa, ob), ob > oa});
        mapped = true;
      }
      if (!mapped)
        throw std::invalid_argument("edge_multiplicity: path not on graph");
    }
  }

  TraversalLedger ledger;
  ledger.forward.assign(ne, 0);
  ledger.backward.assign(ne, 0);
  for (int e = 0; e < ne; ++e) {
    const double tol = kOnGraphTol / std::max(g.edge_length(e), 1e-12);
    std::vector<std::pair<double, double>> fwd, bwd;
    for (const auto& iv : per_edge[e])
      (iv.fwd ? fwd : bwd).push_back({iv.lo, iv.hi});
    const int cf = constant_cover_count(fwd, tol);
    const int cb = constant_cover_count(bwd, tol);
    if (cf < 0 || cb < 0)
      throw std::runtime_error(
          "edge_multiplicity: multiplicity not constant on edge " +
          std::to_string(e));
    ledger.forward[e] = cf;
    ledger.backward[e] = cb;
  }
  return ledger;
}

std::pair<double, double> area_formula_check(const PolylinePath& p,
                                             const EmbeddedGraph& g) {
  const double lhs = path_length(p);
  const TraversalLedger ledger = edge_multiplicity(p, g);
  double rhs = 0.0;
  for (size_t e = 0; e < g.edges.size(); ++e)
    rhs += ledger.multiplicity(static_cast<int>(e)) *
           g.edge_length(static_cast<int>(e));
  return {lhs, rhs};
}

ScalarField ScalarField::constant(double c, size_t) {
  ScalarField f;
  f.value = [c](const Point&) { return c; };
  f.lipschitz = 0.0;
  f.affine = true;
  return f;
}

ScalarField ScalarField::coordinate(size_t i, size_t) {
  ScalarField f;
  f.value = [i](const Point& x) { return x[i]; };
  f.gradient = [i](const Point& x) {
    Point g(x.size(), 0.0);
    g[i] = 1.0;
    return g;
  };
  f.lipschitz = 1.0;
  f.affine = true;
  return f;
}

ScalarField ScalarField::distance_to(Point center) {
  ScalarField f;
  f.value = [center](const Point& x) { return dist(x, center); };
  f.gradient = [center](const Point& x) {
    const double d = dist(x, center);
    Point g(x.size(), 0.0);
    if (d > 1e-15)
      for (size_t i = 0; i < x.size(); ++i) g[i] = (x[i] - center[i]) / d;
    return g;
  };
  f.lipschitz = 1.0;
  f.affine = false;
  return f;
}

ScalarField ScalarField::bump(Point center, double radius) {
  ScalarField f;
  f.value = [center, radius](const Point& x) {
    return std::max(0.0, 1.0 - dist(x, center) / radius);
  };
  f.lipschitz = 1.0 / radius;
  f.affine = false;
  return f;
}

namespace {

// 8-node Gauss-Legendre on [0,1].
constexpr double kGX[8] = {0.01985507175123188, 0.10166676129318664,
                           0.2372337950418355,  0.40828267875217505,
                           0.5917173212478249,  0.7627662049581645,
                           0.8983332387068134,  0.9801449282487681};
constexpr double kGW[8] = {0.05061426814518813, 0.11119051722668724,
                           0.15685332293894363, 0.18134189168918097,
                           0.18134189168918097, 0.15685332293894363,
                           0.11119051722668724, 0.05061426814518813};

double segment_integral(const Point& a, const Point& b, const ScalarField& f,
                        const ScalarField& g) {
  const size_t d = a.size();
  Point dirvec(d);
  for (size_t i = 0; i < d; ++i) dirvec[i] = b[i] - a[i];
  if (f.affine && g.affine) {
    const double val = 0.5 * (f.value(a) + f.value(b)) * (g.value(b) - g.value(a));
    if (!std::isfinite(val))
      throw std::invalid_argument("line_integral: non-finite field value");
    return val;
  }
  if (!g.affine && !g.gradient)
    throw std::invalid_argument(
        "line_integral: non-affine integrator needs a gradient");
  const double gb_ga = g.affine ? g.value(b) - g.value(a) : 0.0;
  auto phi = [&](double u) {
    Point x(d);
    for (size_t i = 0; i < d; ++i) x[i] = a[i] + u * dirvec[i];
    const double fv = f.value(x);
    double dg;
    if (g.affine) {
      dg = gb_ga;
    } else {
      const Point grad = g.gradient(x);
      dg = 0.0;
      for (size_t i = 0; i < d; ++i) dg += grad[i] * dirvec[i];
    }
    const double v = fv * dg;
    if (!std::isfinite(v))
      throw std::invalid_argument("line_integral: non-finite field value");
    return v;
  };
  auto composite = [&](int panels) {
    double s = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
      const double u0 = static_cast<double>(pnl) / panels;
      const double h = 1.0 / panels;
      for (int k = 0; k < 8; ++k) s += kGW[k] * phi(u0 + h * kGX[k]) * h;
    }
    return s;
  };
  double prev = composite(1);
  for (int panels = 2; panels <= 512; panels *= 2) {
    const double cur = composite(panels);
    if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

double line_integral(const PolylinePath& p, const ScalarField& f,
                     const ScalarField& g) {
  check_polyline(p);
  double total = 0.0;
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    const Point& a = p.breakpoints[i].p;
    const Point& b = p.breakpoints[i + 1].p;
    if (dist(a, b) < 1e-15) continue;
    total += segment_integral(a, b, f, g);
  }
  return total;
}

std::vector<TestPair> default_test_family(size_t dim, const PointSet& box_hint,
                                          uint64_t seed, int n_random) {
  std::vector<TestPair> family;
  for (size_t j = 0; j < dim; ++j) {
    family.push_back({ScalarField::constant(1.0, dim), ScalarField::coordinate(j, dim)});
    for (size_t i = 0; i < dim; ++i)
      family.push_back(
          {ScalarField::coordinate(i, dim), ScalarField::coordinate(j, dim)});
  }
  Point lo(dim, 0.0), hi(dim, 1.0);
  if (!box_hint.empty()) {
    lo.assign(dim, kInf);
    hi.assign(dim, -kInf);
    for (const auto& p : box_hint)
      for (size_t i = 0; i < dim; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < n_random; ++k) {
    Point cf(dim), cg(dim);
    for (size_t i = 0; i < dim; ++i) {
      const double pad = 0.5 * std::max(1.0, hi[i] - lo[i]);
      cf[i] = lo[i] - pad + (hi[i] - lo[i] + 2 * pad) * unit(rng);
      cg[i] = lo[i] - pad + (hi[i] - lo[i] + 2 * pad) * unit(rng);
    }
    const double radius = 0.2 + 0.5 * unit(rng);
    family.push_back({ScalarField::bump(cf, radius), ScalarField::distance_to(cg)});
  }
  return family;
}

namespace {

// Splits every segment at all other breakpoints lying on it, so opposite
// traversals of the same ground integrate over mirrored sub-segments and
// their quadrature truncation errors cancel.
PolylinePath split_at_shared_points(const PolylinePath& p) {
  PolylinePath out;
  out.breakpoints.push_back(p.breakpoints.front());
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    const auto& a = p.breakpoints[i];
    const auto& b = p.breakpoints[i + 1];
    std::vector<std::pair<double, Point>> mids;
    for (const auto& k : p.breakpoints) {
      if (point_segment_distance(k.p, a.p, b.p) > 1e-12) continue;
      const double u = clamped_offset(k.p, a.p, b.p);
      if (u > 1e-9 && u < 1.0 - 1e-9) mids.emplace_back(u, k.p);
    }
    std::sort(mids.begin(), mids.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [u, x] : mids)
      if (dist(x, out.breakpoints.back().p) > 1e-15)
        out.breakpoints.push_back({a.t + u * (b.t - a.t), x});
    if (dist(b.p, out.breakpoints.back().p) > 1e-15 ||
        i + 2 == p.breakpoints.size())
      out.breakpoints.push_back(b);
  }
  return out;
}

}  // namespace

DegreeZeroResult degree_zero_test(const PolylinePath& path,
                                  const std::vector<TestPair>& family,
                                  double tol) {
  const PolylinePath p = split_at_shared_points(path);
  const double len = path_length(p);
  DegreeZeroResult out;
  out.zero = true;
  for (const auto& [f, g] : family) {
    double supf = 0.0;
    for (size_t i = 0; i < p.breakpoints.size(); ++i) {
      supf = std::max(supf, std::abs(f.value(p.breakpoints[i].p)));
      if (i + 1 < p.breakpoints.size()) {
        Point mid(p.dim());
        for (size_t k = 0; k < mid.size(); ++k)
          mid[k] = 0.5 * (p.breakpoints[i].p[k] + p.breakpoints[i + 1].p[k]);
        supf = std::max(supf, std::abs(f.value(mid)));
      }
    }
    const double integral = line_integral(p, f, g);
    // The floor at 1 keeps quadrature noise harmless when the test field
    // barely grazes the path and supf underestimates the true supremum.
    const double denom = std::max(g.lipschitz * len * supf, 1.0);
    const double residual = std::abs(integral) / denom;
    out.worst_residual = std::max(out.worst_residual, residual);
    if (residual > tol) out.zero = false;
  }
  return out;
}

DegreeZeroResult degree_zero_test(const PolylinePath& p, uint64_t seed,
                                  double tol) {
  PointSet hint;
  for (const auto& k : p.breakpoints) hint.push_back(k.p);
  return degree_zero_test(p, default_test_family(p.dim(), hint, seed), tol);
}

PolylinePath join(const PolylinePath& loop, const PolylinePath& spur, double t0) {
  check_polyline(loop);
  check_polyline(spur);
  if (!loop.closed()) throw std::invalid_argument("join: first path must be closed");
  if (t0 < 0.0 || t0 > 1.0) throw std::invalid_argument("join: t0 out of range");
  const Point junction = loop.eval(t0);
  if (dist(junction, spur.breakpoints.front().p) > 1e-12)
    throw std::invalid_argument("join: join point mismatch");

  PolylinePath out;
  auto push = [&out](double t, const Point& p) {
    if (!out.breakpoints.empty() && t <= out.breakpoints.back().t + 1e-15) return;
    out.breakpoints.push_back({t, p});
  };
  out.breakpoints.push_back({0.0, loop.breakpoints.front().p});
  for (const auto& k : loop.breakpoints)
    if (k.t < t0) push(k.t / 3.0, k.p);
  push(t0 / 3.0, junction);
  for (const auto& k : spur.breakpoints) push((t0 + k.t) / 3.0, k.p);
  for (auto it = spur.breakpoints.rbegin(); it != spur.breakpoints.rend(); ++it)
    push((t0 + 2.0 - it->t) / 3.0, it->p);
  for (const auto& k : loop.breakpoints)
    if (k.t > t0) push((k.t + 2.0) / 3.0, k.p);
  if (out.breakpoints.back().t < 1.0)
    out.breakpoints.push_back({1.0, loop.breakpoints.back().p});
  else
    out.breakpoints.back().t = 1.0;
  return out;
}

}  // namespace contmeas
