#pragma once

#include <numeric>
#include <vector>

#include "pcone/linalg.hpp"

namespace pcone::detail {

// Visits all k-subsets of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k > m || k <= 0) return;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

inline int rank_of(const std::vector<Vec>& vs, int dim) {
  if (vs.empty()) return 0;
  Mat A(static_cast<int>(vs.size()), dim);
  for (size_t i = 0; i < vs.size(); ++i) A.row(static_cast<int>(i)) = vs[i];
  Eigen::FullPivLU<Mat> lu(A);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

inline bool near_duplicate(const std::vector<Vec>& vs, const Vec& w, double tol) {
  for (const auto& v : vs)
    if ((v - w).norm() < tol) return true;
  return false;
}

// Brute-force polar description: outward facet normals of cone(gens) in R^dim,
// from corank-1 kernels of (dim-1)-subsets. Desk scale only.
inline std::vector<Vec> polar_facets(const std::vector<Vec>& gens, int dim,
                                     double sign_tol = 1e-10) {
  std::vector<Vec> normals;
  for_each_subset(static_cast<int>(gens.size()), dim - 1, [&](const std::vector<int>& idx) {
    std::vector<Vec> rows;
    rows.reserve(idx.size());
    for (int i : idx) rows.push_back(gens[static_cast<size_t>(i)]);
    Vec w = corank1_kernel(rows, dim);
    if (w.size() == 0) return;
    double mx = -1e300, mn = 1e300;
    for (const auto& g : gens) {
      double d = w.dot(g);
      mx = std::max(mx, d);
      mn = std::min(mn, d);
    }
    if (mx <= sign_tol && !near_duplicate(normals, w, 1e-9)) normals.push_back(w);
    if (mn >= -sign_tol && !near_duplicate(normals, Vec(-w), 1e-9)) normals.push_back(-w);
  });
  return normals;
}

}  // namespace pcone::detail
