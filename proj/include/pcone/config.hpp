#pragma once

namespace pcone {

// Single knob set shared by all modules. Defaults follow the documented
// contracts; callers override per call where a looser/tighter bound is wanted.
struct Tolerances {
  double unit_norm = 1e-12;        // |  ||x|| - 1 | for stored directions
  double eps_int = 1e-9;           // interior margin for open-cap membership
  double eps_pair = 1e-12;         // minimum |<u,v>| before the cost blows up
  double tau_tie = 1e-10;          // relative gap for argmax tie detection
  double tau_geo = 1e-8;           // geometric tightness (boundary contact)
  double angular_sep = 1e-10;      // pairwise distinctness of atoms (radians)
  double weight_sum = 1e-12;       // discrete weights sum to 1
  double quad_weight_sum = 1e-10;  // quadrature weights sum to 1
  double cone_consistency = 1e-12; // <n, g> <= tol for generator/normal pairs
  double cone_tight = 1e-9;        // normal tight at >= n-1 generators
  double marginal = 1e-10;         // transport plan marginal residual
  double feasibility = 1e-10;      // dual feasibility slack
  double slackness = 1e-9;         // complementary slackness residual
  double duality_rel = 1e-9;       // |S - I| <= duality_rel * max(1, S)
  double lemma_eq = 1e-8;          // equality-case residual on plan support
  double tol_mass = 1e-6;          // semidiscrete cell-mass residual
};

inline const Tolerances& default_tols() {
  static const Tolerances t{};
  return t;
}

}  // namespace pcone
