#pragma once

#include <cmath>
#include <cstdint>

#include "pcone/linalg.hpp"

namespace pcone {

// Deterministic across platforms; used for test instance generation and for
// the optional quadrature jitter. Not a substitute for <random> quality where
// that would matter -- it does not here.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double gaussian() {
    double u1 = u01(), u2 = u01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  Vec unit_vector(int dim) {
    Vec v(dim);
    double n = 0.0;
    do {
      for (int i = 0; i < dim; ++i) v[i] = gaussian();
      n = v.norm();
    } while (n < 1e-12);
    return v / n;
  }
};

}  // namespace pcone
