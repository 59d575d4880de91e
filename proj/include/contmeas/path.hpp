#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "contmeas/graph.hpp"

namespace contmeas {

/// Piecewise-linear path [0,1] -> R^d, evaluated by linear interpolation.
struct PolylinePath {
  struct Knot {
    double t;
    Point p;
  };
  std::vector<Knot> breakpoints;  // t strictly increasing, t0 = 0, t_last = 1

  Point eval(double t) const;
  bool closed(double tol = 1e-12) const;
  size_t dim() const { return breakpoints.empty() ? 0 : breakpoints.front().p.size(); }
};

void check_polyline(const PolylinePath& p);

/// Cumulative-length table at breakpoints; mass of [t0,t1] equals the
/// arc length of the restriction.
struct LengthMeasure {
  const PolylinePath* path = nullptr;
  std::vector<double> cumulative;  // one entry per breakpoint

  double mass(double t0, double t1) const;
  double total() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

LengthMeasure length_measure(const PolylinePath& p);

/// Exact PL arc length over [t0,t1]; partial segments prorated.
double path_length(const PolylinePath& p, double t0 = 0.0, double t1 = 1.0);

/// Same image, constant speed; interior constant stretches are collapsed
/// first. Throws on zero-length paths.
PolylinePath constant_speed_reparam(const PolylinePath& p);

/// Per directed edge of a reference graph: number of path passes.
struct TraversalLedger {
  std::vector<int> forward;
  std::vector<int> backward;

  int multiplicity(int edge) const { return forward[edge] + backward[edge]; }
  bool even() const;
  bool covers_all() const;
};

/// Traversal counts of a path whose image lies on g. Each PL segment must
/// stay within one edge (segments through vertices are split internally);
/// the per-orientation count must be constant at generic edge points.
TraversalLedger edge_multiplicity(const PolylinePath& p, const EmbeddedGraph& g);

/// lhs = arc length, rhs = sum over edges of multiplicity * edge length.
std::pair<double, double> area_formula_check(const PolylinePath& p,
                                             const EmbeddedGraph& g);

/// Scalar field on R^d. Affine fields integrate in closed form; otherwise
/// a gradient is required when the field is used as integrator g.
struct ScalarField {
  std::function<double(const Point&)> value;
  std::function<Point(const Point&)> gradient;  // may be empty
  double lipschitz = 0.0;
  bool affine = false;

  static ScalarField constant(double c, size_t dim);
  static ScalarField coordinate(size_t i, size_t dim);
  static ScalarField distance_to(Point center);
  static ScalarField bump(Point center, double radius);
};

/// Line integral of f dg along p; closed form on affine fields, composite
/// 8-node Gauss-Legendre otherwise.
double line_integral(const PolylinePath& p, const ScalarField& f,
                     const ScalarField& g);

struct DegreeZeroResult {
  bool zero = false;
  double worst_residual = 0.0;  // normalized by Lip(g) * length * sup|f|
};

using TestPair = std::pair<ScalarField, ScalarField>;

/// Coordinate pairs (f = x_i or 1, g = x_j) plus seeded random bump /
/// distance pairs near the given box.
std::vector<TestPair> default_test_family(size_t dim, const PointSet& box_hint,
                                          uint64_t seed, int n_random = 20);

DegreeZeroResult degree_zero_test(const PolylinePath& p,
                                  const std::vector<TestPair>& family,
                                  double tol);

DegreeZeroResult degree_zero_test(const PolylinePath& p, uint64_t seed = 0,
                                  double tol = 1e-9);

/// The closed join of a closed path with a spur attached at parameter t0,
/// traversing the spur out and back.
PolylinePath join(const PolylinePath& loop, const PolylinePath& spur, double t0);

}  // namespace contmeas
