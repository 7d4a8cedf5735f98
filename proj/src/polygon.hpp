#pragma once
#include <array>
#include <vector>

namespace ivm {

using P2 = std::array<double, 2>;

// Convex hull (Andrew's monotone chain), counter-clockwise, collinear points
// dropped.  Fewer than 3 distinct non-collinear points give a degenerate hull.
std::vector<P2> hull2d(std::vector<P2> pts);

// Shoelace area; counter-clockwise polygons come out positive.
double polygon_area(const std::vector<P2>& poly);

// Intersection of two convex polygons (Sutherland-Hodgman against each clip
// half-plane); both counter-clockwise.
std::vector<P2> clip_convex(const std::vector<P2>& subject, const std::vector<P2>& clip);

// Exact area of (convex CCW polygon) ∩ (disk of radius r at center);
// segment-circle tangencies within tol are treated as tangent.
double disk_polygon_intersection_area(const std::vector<P2>& poly, const P2& center,
                                      double r, double tol = 1e-12);

// Area of the symmetric difference between conv(pts) and the disk.
double disk_polygon_symdiff(const std::vector<P2>& pts, const P2& center, double r);

double disk_disk_intersection_area(const P2& c1, double r1, const P2& c2, double r2);

}  // namespace ivm
