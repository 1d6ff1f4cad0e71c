#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcone/config.hpp"
#include "pcone/linalg.hpp"

namespace pcone {

enum class Cap { OmegaC, OmegaCdual };

const char* cap_name(Cap c);
Cap cap_from_name(const std::string& s);
inline Cap opposite(Cap c) { return c == Cap::OmegaC ? Cap::OmegaCdual : Cap::OmegaC; }

// Unit vector tagged with the open cap it claims to lie in. Membership is
// checked against a concrete cone wherever both are in scope.
struct Direction {
  Vec coords;
  Cap cap;
};

Direction make_direction(const Vec& coords, Cap cap, const Tolerances& tols = default_tols());

// Pointed, full-dimensional polyhedral cone, stored in both descriptions:
// cone = {nonneg combinations of generators} = {x : <n_i, x> <= 0 for all i}.
struct PolyhedralCone {
  int dim = 0;
  std::vector<Vec> generators;
  std::vector<Vec> facet_normals;
};

PolyhedralCone cone_from_generators(int dim, std::vector<Vec> generators,
                                    const Tolerances& tols = default_tols());
PolyhedralCone cone_from_descriptions(int dim, std::vector<Vec> generators,
                                      std::vector<Vec> facet_normals,
                                      const Tolerances& tols = default_tols());
// Polyhedral discretization of the circular cone around `axis` with the given
// half angle, using k generators.
PolyhedralCone circular_cone(const Vec& axis, double half_angle, int k = 32,
                             const Tolerances& tols = default_tols());

PolyhedralCone dual_cone(const PolyhedralCone& C, const Tolerances& tols = default_tols());

enum class Containment { Closed, Interior };

bool contains(const PolyhedralCone& C, const Vec& x, Containment mode,
              const Tolerances& tols = default_tols());

// min over the relevant normals of -<n, u>; positive inside the open cap.
double cap_margin(const PolyhedralCone& C, Cap cap, const Vec& u);
bool in_cap(const PolyhedralCone& C, Cap cap, const Vec& u, double eps_int);
void require_in_cap(const PolyhedralCone& C, const Direction& d,
                    const Tolerances& tols = default_tols());

// Angular interval (theta_lo, theta_hi) of a 2-D cone, width in (0, pi).
std::pair<double, double> cone_arc(const PolyhedralCone& C);

struct DiscreteMeasure {
  std::vector<Direction> atoms;
  std::vector<double> weights;
};

DiscreteMeasure make_discrete_measure(const PolyhedralCone& C, Cap cap,
                                      const std::vector<Vec>& atoms,
                                      std::vector<double> weights,
                                      const Tolerances& tols = default_tols());
void validate_measure(const PolyhedralCone& C, const DiscreteMeasure& m,
                      const Tolerances& tols = default_tols());

struct QuadratureMeasure {
  std::vector<Direction> nodes;
  std::vector<double> weights;
  std::string scheme;
};

// n=2: midpoint rule on the open arc. n=3,4: Halton low-discrepancy points on
// the sphere, rejection-restricted to the open cap, equal weights. seed != 0
// applies a Cranley-Patterson shift to the Halton stream.
QuadratureMeasure cap_quadrature(const PolyhedralCone& C, Cap cap, int resolution,
                                 const Tolerances& tols = default_tols(),
                                 std::uint64_t seed = 0);

}  // namespace pcone
