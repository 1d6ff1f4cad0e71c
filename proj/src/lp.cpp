#include "pcone/lp.hpp"

#include <cmath>
#include <vector>

#include "pcone/error.hpp"

namespace pcone {

namespace {

constexpr double kPivTol = 1e-10;
constexpr double kZeroTol = 1e-11;

// tableau: rows 0..m-1 constraints (last column rhs), row m objective.
struct Tableau {
  Mat T;
  std::vector<int> basis;
  int m, n;

  void pivot(int r, int col) {
    T.row(r) /= T(r, col);
    for (int i = 0; i <= m; ++i) {
      if (i == r) continue;
      double f = T(i, col);
      if (f != 0.0) T.row(i) -= f * T.row(r);
    }
    basis[static_cast<size_t>(r)] = col;
  }

  // Bland: entering = lowest-index negative reduced cost, leaving = minimal
  // ratio with lowest basis index on ties. Returns false when unbounded.
  bool run(int allowed_cols, int* status_unbounded) {
    *status_unbounded = 0;
    for (int guard = 0; guard < 100000; ++guard) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (T(m, j) < -kPivTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        double a = T(i, enter);
        if (a > kPivTol) {
          double ratio = T(i, n) / a;
          if (leave < 0 || ratio < best - kZeroTol ||
              (ratio < best + kZeroTol && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) {
        *status_unbounded = 1;
        return true;
      }
      pivot(leave, enter);
    }
    fail(Errc::InternalError, "simplex iteration guard exceeded");
  }
};

}  // namespace

LpResult solve_lp(const Mat& A0, const Vec& b0, const Vec& c0) {
  int m = static_cast<int>(A0.rows());
  int n = static_cast<int>(A0.cols());
  Mat A = A0;
  Vec b = b0;
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) {
      A.row(i) = -A.row(i);
      b[i] = -b[i];
    }
  }

  // Phase 1 with artificial basis.
  Tableau t;
  t.m = m;
  t.n = n + m;
  t.T = Mat::Zero(m + 1, t.n + 1);
  t.T.block(0, 0, m, n) = A;
  for (int i = 0; i < m; ++i) t.T(i, n + i) = 1.0;
  t.T.col(t.n).head(m) = b;
  t.basis.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) t.basis[static_cast<size_t>(i)] = n + i;
  for (int j = 0; j <= t.n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += t.T(i, j);
    if (j < n || j == t.n) t.T(m, j) = -s;
  }
  int unbounded = 0;
  t.run(n, &unbounded);
  if (-t.T(m, t.n) > 1e-8) return {LpResult::Status::Infeasible, Vec(), 0.0};

  // Drive remaining artificials out of the basis where possible.
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<size_t>(i)] >= n) {
      int col = -1;
      for (int j = 0; j < n; ++j) {
        if (std::abs(t.T(i, j)) > kPivTol) {
          col = j;
          break;
        }
      }
      if (col >= 0) t.pivot(i, col);
    }
  }

  // Phase 2: rebuild the objective row from c through the current basis.
  for (int j = 0; j < t.n; ++j) t.T(m, j) = j < n ? c0[j] : 0.0;
  t.T(m, t.n) = 0.0;
  for (int i = 0; i < m; ++i) {
    int bj = t.basis[static_cast<size_t>(i)];
    double f = t.T(m, bj);
    if (f != 0.0) t.T.row(m) -= f * t.T.row(i);
  }
  // Artificial columns stay excluded from pricing (allowed_cols = n); a
  // redundant row may keep an artificial basic at value zero, which is fine.
  t.run(n, &unbounded);
  if (unbounded) return {LpResult::Status::Unbounded, Vec(), 0.0};

  Vec x = Vec::Zero(n);
  for (int i = 0; i < m; ++i) {
    int bj = t.basis[static_cast<size_t>(i)];
    if (bj < n) x[bj] = t.T(i, t.n);
  }
  return {LpResult::Status::Optimal, x, c0.dot(x)};
}

}  // namespace pcone
