#pragma once

#include <vector>

#include "pcone/cone.hpp"
#include "pcone/linalg.hpp"

namespace pcone {

// Internal untyped geometry of a polyhedral pseudo-cone. Unlike the public
// H/V forms, points may lie on bd C and halfspace normals on bd C-dual (e.g.
// the facets of K = p + C), so this is the representation behind support
// queries, min-norm, and export.
struct Halfspace {
  Vec a;     // unit normal
  double b;  // <a, x> <= b, with b <= 0 for pseudo-cones
};

struct PolyRep {
  int dim = 0;
  std::vector<Vec> points;           // extreme points (vertex candidates)
  std::vector<Halfspace> halfspaces; // full H-description incl. cone facets
};

// Facets of conv(points) + C through the lifted double description.
PolyRep polyrep_from_points(const std::vector<Vec>& points, const PolyhedralCone& C);
// Vertex enumeration over dim-subsets of the halfspaces.
PolyRep polyrep_from_halfspaces(int dim, std::vector<Halfspace> hs);

bool polyrep_contains(const PolyRep& P, const Vec& x, double tol);
double polyrep_support(const PolyRep& P, const Vec& u);  // max over points
double polyrep_min_norm(const PolyRep& P);               // distance from the origin

// Ordered polyline of bd K clipped to the ball of radius t (dim 2). Empty if
// K misses the ball.
std::vector<Vec> boundary_chain(const PolyRep& P, const PolyhedralCone& C, double t);

// Per-facet convex polygons of bd K clipped to the ball of radius t (dim 3);
// circle arcs are approximated by circle_segments chords.
std::vector<std::vector<Vec>> boundary_facet_polygons(const PolyRep& P, double t,
                                                      int circle_segments = 64);

// Dense point sample of bd K inside tB, for report-style set distances.
std::vector<Vec> boundary_samples(const PolyRep& P, const PolyhedralCone& C, double t);

}  // namespace pcone
