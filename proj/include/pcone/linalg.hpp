#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace pcone {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Vec vec4(double x, double y, double z, double w) {
  Vec v(4);
  v << x, y, z, w;
  return v;
}

inline Vec normalized(const Vec& v) { return v / v.norm(); }

// Angle between unit vectors, clamped against rounding outside [-1, 1].
inline double angle_between(const Vec& a, const Vec& b) {
  double d = a.dot(b);
  if (d > 1.0) d = 1.0;
  if (d < -1.0) d = -1.0;
  return std::acos(d);
}

inline Vec rot90(const Vec& v) { return vec2(-v[1], v[0]); }

inline Vec unit_from_angle(double theta) { return vec2(std::cos(theta), std::sin(theta)); }

// 1-dim kernel of the span of `rows` (each a d-vector), or empty if the span
// does not have corank exactly one.
inline Vec corank1_kernel(const std::vector<Vec>& rows, int d, double tol = 1e-10) {
  Mat A(static_cast<int>(rows.size()), d);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) A.row(i) = rows[static_cast<size_t>(i)];
  Eigen::FullPivLU<Mat> lu(A);
  lu.setThreshold(tol);
  if (lu.rank() != d - 1) return Vec();
  Mat ker = lu.kernel();
  if (ker.cols() != 1) return Vec();
  Vec w = ker.col(0);
  return w / w.norm();
}

}  // namespace pcone
