#include "pcone/cone.hpp"

#include <algorithm>
#include <cmath>

#include "pcone/detail/dd.hpp"
#include "pcone/error.hpp"
#include "pcone/log.hpp"
#include "pcone/rng.hpp"

namespace pcone {

using detail::near_duplicate;
using detail::polar_facets;
using detail::rank_of;

namespace {

constexpr int kMaxGenerators = 64;

// Radical-inverse (van der Corput) in the given base.
double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Vec sphere_point_s2(double a, double b) {
  double z = 1.0 - 2.0 * a;
  double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  double phi = 6.283185307179586 * b;
  return vec3(s * std::cos(phi), s * std::sin(phi), z);
}

Vec sphere_point_s3(double a, double b, double c) {
  double r1 = std::sqrt(std::max(0.0, 1.0 - a));
  double r2 = std::sqrt(a);
  double p = 6.283185307179586 * b, q = 6.283185307179586 * c;
  return vec4(r1 * std::cos(p), r1 * std::sin(p), r2 * std::cos(q), r2 * std::sin(q));
}

void validate_cone(const PolyhedralCone& C, const Tolerances& tols) {
  require(C.dim >= 2 && C.dim <= 4, Errc::UnsupportedDimension,
          "cone dimension must be 2, 3 or 4");
  require(!C.generators.empty() && !C.facet_normals.empty(), Errc::SchemaError,
          "cone needs generators and facet normals");
  require(rank_of(C.generators, C.dim) == C.dim, Errc::NotFullDimensional,
          "generators do not span the space");
  require(rank_of(C.facet_normals, C.dim) == C.dim, Errc::NotPointed,
          "facet normals do not span the space (cone contains a line)");
  for (const auto& g : C.generators)
    for (const auto& n : C.facet_normals)
      require(n.dot(g) <= tols.cone_consistency, Errc::SchemaError,
              "generator violates a facet halfspace");
  for (const auto& n : C.facet_normals) {
    std::vector<Vec> tight;
    for (const auto& g : C.generators)
      if (std::abs(n.dot(g)) <= tols.cone_tight) tight.push_back(g);
    require(rank_of(tight, C.dim) >= C.dim - 1, Errc::SchemaError,
            "facet normal not tight at n-1 independent generators");
  }
}

}  // namespace

const char* cap_name(Cap c) { return c == Cap::OmegaC ? "OmegaC" : "OmegaCdual"; }

Cap cap_from_name(const std::string& s) {
  if (s == "OmegaC") return Cap::OmegaC;
  if (s == "OmegaCdual") return Cap::OmegaCdual;
  fail(Errc::SchemaError, "unknown cap tag '" + s + "'");
}

Direction make_direction(const Vec& coords, Cap cap, const Tolerances& tols) {
  double n = coords.norm();
  require(n > 0.0 && std::abs(n - 1.0) <= 1e-6, Errc::SchemaError,
          "direction coordinates are not a unit vector");
  Direction d{coords / n, cap};
  (void)tols;
  return d;
}

PolyhedralCone cone_from_generators(int dim, std::vector<Vec> generators, const Tolerances& tols) {
  require(static_cast<int>(generators.size()) <= kMaxGenerators, Errc::SizeLimit,
          "more than 64 generators");
  for (auto& g : generators) {
    require(g.size() == dim, Errc::SchemaError, "generator has wrong dimension");
    double n = g.norm();
    require(n > 1e-12, Errc::SchemaError, "zero generator");
    g /= n;
  }
  require(rank_of(generators, dim) == dim, Errc::NotFullDimensional,
          "generators do not span the space");
  PolyhedralCone C;
  C.dim = dim;
  C.generators = std::move(generators);
  C.facet_normals = polar_facets(C.generators, dim);
  require(rank_of(C.facet_normals, dim) == dim, Errc::NotPointed, "cone contains a line");
  validate_cone(C, tols);
  return C;
}

PolyhedralCone cone_from_descriptions(int dim, std::vector<Vec> generators,
                                      std::vector<Vec> facet_normals, const Tolerances& tols) {
  for (auto& g : generators) g /= g.norm();
  for (auto& n : facet_normals) n /= n.norm();
  PolyhedralCone reference = cone_from_generators(dim, generators, tols);
  require(reference.facet_normals.size() == facet_normals.size(), Errc::SchemaError,
          "facet normals do not describe the cone spanned by the generators");
  for (const auto& n : facet_normals)
    require(near_duplicate(reference.facet_normals, n, 1e-9), Errc::SchemaError,
            "given facet normal is not a facet of the generated cone");
  PolyhedralCone C{dim, std::move(generators), std::move(facet_normals)};
  validate_cone(C, tols);
  return C;
}

PolyhedralCone circular_cone(const Vec& axis, double half_angle, int k, const Tolerances& tols) {
  int dim = static_cast<int>(axis.size());
  require(half_angle > 1e-6 && half_angle < 1.5707963267948966 - 1e-6, Errc::SchemaError,
          "half angle must lie strictly between 0 and pi/2");
  Vec a = normalized(axis);
  std::vector<Vec> gens;
  if (dim == 2) {
    double t = std::atan2(a[1], a[0]);
    gens.push_back(unit_from_angle(t - half_angle));
    gens.push_back(unit_from_angle(t + half_angle));
  } else {
    require(k >= dim && k <= kMaxGenerators, Errc::SchemaError, "bad facet count");
    // Orthonormal basis of the complement of the axis.
    Mat B = Mat::Identity(dim, dim) - a * a.transpose();
    Eigen::SelfAdjointEigenSolver<Mat> es(B);
    std::vector<Vec> comp;
    for (int i = 0; i < dim; ++i)
      if (es.eigenvalues()[i] > 0.5) comp.push_back(es.eigenvectors().col(i));
    double ca = std::cos(half_angle), sa = std::sin(half_angle);
    if (dim == 3) {
      for (int i = 0; i < k; ++i) {
        double phi = 6.283185307179586 * (static_cast<double>(i) + 0.5) / k;
        gens.push_back(ca * a + sa * (std::cos(phi) * comp[0] + std::sin(phi) * comp[1]));
      }
    } else {
      // Spiral points on the 2-sphere of the complement.
      double golden = 3.141592653589793 * (std::sqrt(5.0) + 1.0);
      for (int i = 0; i < k; ++i) {
        double z = -1.0 + 2.0 * (static_cast<double>(i) + 0.5) / k;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * static_cast<double>(i);
        Vec c = std::cos(phi) * r * comp[0] + std::sin(phi) * r * comp[1] + z * comp[2];
        gens.push_back(ca * a + sa * c);
      }
    }
  }
  return cone_from_generators(dim, std::move(gens), tols);
}

PolyhedralCone dual_cone(const PolyhedralCone& C, const Tolerances& tols) {
  require(rank_of(C.generators, C.dim) == C.dim, Errc::NotFullDimensional,
          "dual_cone: cone not full-dimensional");
  require(rank_of(C.facet_normals, C.dim) == C.dim, Errc::NotPointed,
          "dual_cone: cone not pointed");
  (void)tols;
  PolyhedralCone D;
  D.dim = C.dim;
  D.generators = C.facet_normals;
  for (auto& g : D.generators) g /= g.norm();
  D.facet_normals = C.generators;
  return D;
}

bool contains(const PolyhedralCone& C, const Vec& x, Containment mode, const Tolerances& tols) {
  if (mode == Containment::Closed) {
    for (const auto& n : C.facet_normals)
      if (n.dot(x) > 1e-12) return false;
    return true;
  }
  double nx = x.norm();
  for (const auto& n : C.facet_normals)
    if (!(n.dot(x) < -tols.eps_int * nx)) return false;
  return true;
}

double cap_margin(const PolyhedralCone& C, Cap cap, const Vec& u) {
  // Omega_C is cut out by the facet normals of C; Omega_{C dual} by the
  // generators of C (they are exactly the facet normals of C dual).
  const auto& cutters = (cap == Cap::OmegaC) ? C.facet_normals : C.generators;
  double m = 1e300;
  for (const auto& n : cutters) m = std::min(m, -n.dot(u));
  return m;
}

bool in_cap(const PolyhedralCone& C, Cap cap, const Vec& u, double eps_int) {
  return cap_margin(C, cap, u) >= eps_int;
}

void require_in_cap(const PolyhedralCone& C, const Direction& d, const Tolerances& tols) {
  require(d.coords.size() == C.dim, Errc::SchemaError, "direction dimension mismatch");
  require(in_cap(C, d.cap, d.coords, tols.eps_int), Errc::DirectionOutsideCap,
          std::string("direction not strictly inside ") + cap_name(d.cap));
}

std::pair<double, double> cone_arc(const PolyhedralCone& C) {
  require(C.dim == 2, Errc::UnsupportedDimension, "cone_arc needs a 2-D cone");
  require(C.facet_normals.size() == 2, Errc::InternalError, "2-D cone must have two facets");
  auto boundary_ray = [&](const Vec& n, const Vec& other) {
    Vec r = rot90(n);
    if (other.dot(r) > 0) r = -r;
    return r;
  };
  Vec r1 = boundary_ray(C.facet_normals[0], C.facet_normals[1]);
  Vec r2 = boundary_ray(C.facet_normals[1], C.facet_normals[0]);
  double width = angle_between(r1, r2);
  double cross = r1[0] * r2[1] - r1[1] * r2[0];
  Vec start = cross > 0 ? r1 : r2;
  double lo = std::atan2(start[1], start[0]);
  return {lo, lo + width};
}

DiscreteMeasure make_discrete_measure(const PolyhedralCone& C, Cap cap,
                                      const std::vector<Vec>& atoms, std::vector<double> weights,
                                      const Tolerances& tols) {
  require(atoms.size() == weights.size(), Errc::SchemaError, "atom/weight count mismatch");
  require(!atoms.empty(), Errc::SchemaError, "measure needs at least one atom");
  DiscreteMeasure m;
  for (const auto& a : atoms) {
    Direction d = make_direction(a, cap, tols);
    m.atoms.push_back(std::move(d));
  }
  double sum = 0.0;
  for (double w : weights) {
    require(w > 0.0, Errc::SchemaError, "weights must be positive");
    sum += w;
  }
  require(std::abs(sum - 1.0) <= 1e-9, Errc::SchemaError, "weights must sum to 1");
  for (double& w : weights) w /= sum;
  m.weights = std::move(weights);
  validate_measure(C, m, tols);
  return m;
}

void validate_measure(const PolyhedralCone& C, const DiscreteMeasure& m, const Tolerances& tols) {
  require(m.atoms.size() == m.weights.size() && !m.atoms.empty(), Errc::SchemaError,
          "malformed measure");
  double sum = 0.0;
  for (double w : m.weights) {
    require(w > 0.0, Errc::SchemaError, "weights must be positive");
    sum += w;
  }
  require(std::abs(sum - 1.0) <= tols.weight_sum * 100 + 1e-12, Errc::SchemaError,
          "weights must sum to 1");
  for (const auto& a : m.atoms) require_in_cap(C, a, tols);
  for (size_t i = 0; i < m.atoms.size(); ++i)
    for (size_t j = i + 1; j < m.atoms.size(); ++j)
      require(angle_between(m.atoms[i].coords, m.atoms[j].coords) > tols.angular_sep,
              Errc::SchemaError, "atoms must be pairwise distinct");
}

QuadratureMeasure cap_quadrature(const PolyhedralCone& C, Cap cap, int resolution,
                                 const Tolerances& tols, std::uint64_t seed) {
  require(resolution >= 2, Errc::SchemaError, "resolution must be >= 2");
  QuadratureMeasure q;
  if (C.dim == 2) {
    const PolyhedralCone* arc_cone = &C;
    PolyhedralCone dual_storage;
    if (cap == Cap::OmegaCdual) {
      dual_storage = dual_cone(C, tols);
      arc_cone = &dual_storage;
    }
    auto [lo, hi] = cone_arc(*arc_cone);
    double step = (hi - lo) / resolution;
    for (int i = 0; i < resolution; ++i) {
      Vec u = unit_from_angle(lo + (i + 0.5) * step);
      require(in_cap(C, cap, u, tols.eps_int), Errc::EmptyCap,
              "cap too thin for the interior margin at this resolution");
      q.nodes.push_back(Direction{u, cap});
      q.weights.push_back(1.0 / resolution);
    }
    q.scheme = "arc-midpoint";
    return q;
  }
  // n = 3, 4: Halton stream restricted to the cap.
  int coords = C.dim == 3 ? 2 : 3;
  static const std::uint64_t bases[3] = {2, 3, 5};
  double shift[3] = {0.0, 0.0, 0.0};
  if (seed != 0) {
    SplitMix64 rng(seed);
    for (int c = 0; c < coords; ++c) shift[c] = rng.u01();
  }
  std::uint64_t attempts_cap =
      std::max<std::uint64_t>(1000000u, 4096ull * static_cast<std::uint64_t>(resolution));
  std::uint64_t i = 1;
  while (static_cast<int>(q.nodes.size()) < resolution && i <= attempts_cap) {
    double a[3];
    for (int c = 0; c < coords; ++c) {
      a[c] = radical_inverse(i, bases[c]) + shift[c];
      if (a[c] >= 1.0) a[c] -= 1.0;
    }
    Vec u = C.dim == 3 ? sphere_point_s2(a[0], a[1]) : sphere_point_s3(a[0], a[1], a[2]);
    if (in_cap(C, cap, u, tols.eps_int)) {
      q.nodes.push_back(Direction{u, cap});
      q.weights.push_back(1.0 / resolution);
    }
    ++i;
  }
  require(static_cast<int>(q.nodes.size()) == resolution, Errc::EmptyCap,
          "cap has no (or too little) interior at the requested margin");
  q.scheme = seed == 0 ? "halton-sphere" : "halton-sphere-jittered";
  return q;
}

}  // namespace pcone
