#pragma once

#include <limits>
#include <vector>

namespace contmeas {

/// A point of R^d, unitless Euclidean coordinates.
using Point = std::vector<double>;
using PointSet = std::vector<Point>;

constexpr double kInf = std::numeric_limits<double>::infinity();

double dist(const Point& a, const Point& b);
double dist2(const Point& a, const Point& b);

/// sup of pairwise distances; 0 for empty or singleton sets.
double diam(const PointSet& s);

/// inf of pairwise distances; +inf when either set is empty.
double set_distance(const PointSet& a, const PointSet& b);

/// Symmetric Hausdorff distance between finite nonempty sets.
/// Throws std::invalid_argument on empty input.
double hausdorff_distance(const PointSet& a, const PointSet& b);

/// Serial reference for the parallel kernel above.
double hausdorff_distance_serial(const PointSet& a, const PointSet& b);

/// max over x in a of min over y in b of d(x,y).
double directed_deviation(const PointSet& a, const PointSet& b);

/// Distance from a point to the closed segment [u,v].
double point_segment_distance(const Point& p, const Point& u, const Point& v);

/// Minimal distance between two closed segments.
double segment_segment_distance(const Point& a0, const Point& a1,
                                const Point& b0, const Point& b1);

}  // namespace contmeas
