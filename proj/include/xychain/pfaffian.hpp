#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xychain/errors.hpp"

namespace xychain {

// Even-dimensional real antisymmetric matrix.
struct SkewMatrix {
  Eigen::MatrixXd m;

  explicit SkewMatrix(Eigen::MatrixXd mat) : m(std::move(mat)) {
    if (m.rows() != m.cols())
      throw ConfigError("SkewMatrix: not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j <= i; ++j)
        if (m(i, j) != -m(j, i))
          throw ConfigError("SkewMatrix: entries not exactly antisymmetric");
  }

  int dim() const { return static_cast<int>(m.rows()); }
};

namespace detail {

// In-place Parlett-Reid elimination on a row-major buffer of dimension d.
// Pairs of rows/columns are eliminated by skew congruence updates
// A <- A - mu r^T + r mu^T, which leave the Pfaffian of the trailing block
// invariant; partial pivoting keeps |mu| <= 1.
inline double pfaffian_inplace(std::vector<double>& a, int d) {
  if (d == 0) return 1.0;
  if (d & 1) return 0.0;
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * d + j];
  };
  double result = 1.0;
  std::vector<double> mu(static_cast<size_t>(d));
  for (int k = 0; k + 1 < d; k += 2) {
    int piv = k + 1;
    double best = std::abs(at(k, k + 1));
    for (int i = k + 2; i < d; ++i) {
      const double v = std::abs(at(k, i));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k + 1) {
      for (int j = 0; j < d; ++j) std::swap(at(k + 1, j), at(piv, j));
      for (int i = 0; i < d; ++i) std::swap(at(i, k + 1), at(i, piv));
      result = -result;
    }
    const double pivot = at(k, k + 1);
    result *= pivot;
    if (k + 2 >= d) break;
    const double inv = 1.0 / pivot;
    for (int j = k + 2; j < d; ++j) mu[j] = at(k, j) * inv;
    const double* r = &at(k + 1, 0);
    for (int i = k + 2; i < d; ++i) {
      double* row = &at(i, 0);
      const double mi = mu[i];
      const double ri = r[i];
      if (mi == 0.0 && ri == 0.0) continue;
      for (int j = k + 2; j < d; ++j) row[j] += ri * mu[j] - mi * r[j];
    }
  }
  return result;
}

// Determinant with partial pivoting on a row-major buffer; returns 0 on a
// structurally singular column.
inline double det_inplace(std::vector<double>& a, int t) {
  if (t == 0) return 1.0;
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * t + j];
  };
  double result = 1.0;
  for (int k = 0; k < t; ++k) {
    int piv = k;
    double best = std::abs(at(k, k));
    for (int i = k + 1; i < t; ++i) {
      const double v = std::abs(at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < t; ++j) std::swap(at(k, j), at(piv, j));
      result = -result;
    }
    const double pivot = at(k, k);
    result *= pivot;
    const double inv = 1.0 / pivot;
    const double* rk = &at(k, 0);
    for (int i = k + 1; i < t; ++i) {
      const double f = at(i, k) * inv;
      if (f == 0.0) continue;
      double* ri = &at(i, 0);
      for (int j = k + 1; j < t; ++j) ri[j] -= f * rk[j];
    }
  }
  return result;
}

}  // namespace detail

// Pf(m).  Pf(m)^2 = det(m); the empty matrix gives 1, structurally singular
// input gives 0.
inline double pfaffian(const SkewMatrix& s) {
  const int d = s.dim();
  if (d & 1)
    throw ConfigError("pfaffian: odd dimension " + std::to_string(d));
  std::vector<double> buf(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      buf[static_cast<size_t>(i) * d + j] = s.m(i, j);
  return detail::pfaffian_inplace(buf, d);
}

}  // namespace xychain
