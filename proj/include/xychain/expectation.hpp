#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "xychain/errors.hpp"
#include "xychain/model.hpp"
#include "xychain/pauli.hpp"
#include "xychain/pfaffian.hpp"

namespace xychain {

namespace detail {

// Wick value of a canonical even Majorana monomial (phase excluded).
//
// Because A-A and B-B contractions vanish identically, the contraction
// matrix in slot order is a checkerboard: after permuting all A slots in
// front of all B slots it becomes [[0, X], [-X^T, 0]] and
//
//   Pf = sign(permutation) * (-1)^{t(t-1)/2} * det(X),
//
// with X[a][b] = <A_{site_a} B_{site_b}> = -G(site_a - site_b).  This is an
// exact rewrite of the Pfaffian at an eighth of the elimination cost.
struct WickScratch {
  std::vector<int> a_sites, b_sites;
  std::vector<double> x;
};

inline double wick_monomial(const std::vector<int>& slots,
                            const MajoranaCovariance& cov, WickScratch& ws) {
  ws.a_sites.clear();
  ws.b_sites.clear();
  long inversions = 0;
  for (int s : slots) {
    if (s & 1) {
      ws.b_sites.push_back(s >> 1);
    } else {
      inversions += static_cast<long>(ws.b_sites.size());
      ws.a_sites.push_back(s >> 1);
    }
  }
  if (ws.a_sites.size() != ws.b_sites.size()) return 0.0;
  const int t = static_cast<int>(ws.a_sites.size());
  if (t == 0) return 1.0;

  ws.x.resize(static_cast<size_t>(t) * t);
  for (int a = 0; a < t; ++a) {
    const int sa = ws.a_sites[static_cast<size_t>(a)];
    double* row = &ws.x[static_cast<size_t>(a) * t];
    for (int b = 0; b < t; ++b)
      row[b] = -cov.g(sa - ws.b_sites[static_cast<size_t>(b)]);
  }

  double sign = (inversions & 1) ? -1.0 : 1.0;
  if (((static_cast<long>(t) * (t - 1)) / 2) & 1) sign = -sign;
  return sign * det_inplace(ws.x, t);
}

// Reference route: the same value through the dense Parlett-Reid Pfaffian
// of the interleaved slot submatrix.  Kept as the cross-check surface for
// the fast path.
inline double wick_monomial_pfaffian(const std::vector<int>& slots,
                                     const MajoranaCovariance& cov) {
  const int d = static_cast<int>(slots.size());
  if (d & 1) return 0.0;
  std::vector<double> buf(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      buf[static_cast<size_t>(i) * d + j] = cov.entry(slots[i], slots[j]);
  return pfaffian_inplace(buf, d);
}

inline double clamp_expectation(double v, const char* what) {
  if (std::abs(v) > 1.0) {
    if (std::abs(v) > 1.0 + 1e-9)
      throw NumericalIntegrityError(std::string(what) +
                                    ": |expectation| overshoots 1 by " +
                                    std::to_string(std::abs(v) - 1.0));
    v = v > 0.0 ? 1.0 : -1.0;
  }
  return v;
}

}  // namespace detail

// Ground-state expectation of a Pauli string.  Odd-parity strings vanish
// identically; the rest reduce to a single Wick contraction.  The result is
// real: a residual +-i phase can only multiply a structurally zero
// contraction, which is asserted.
inline double pauli_expectation(const PauliString& p,
                                const MajoranaCovariance& cov) {
  thread_local detail::WickScratch scratch;
  const MajoranaMonomial m = jordan_wigner_monomial(p, cov.n_sites());
  if (m.slots.size() & 1) return 0.0;
  const double w = detail::wick_monomial(m.slots, cov, scratch);
  switch (m.quadrant) {
    case 0:
      return detail::clamp_expectation(w, "pauli_expectation");
    case 2:
      return detail::clamp_expectation(-w, "pauli_expectation");
    default:
      if (std::abs(w) > 1e-10)
        throw NumericalIntegrityError(
            "pauli_expectation: imaginary residue " + std::to_string(w) +
            " for " + p.label());
      return 0.0;
  }
}

// Batch convenience; safe to call from many threads against one covariance.
inline std::vector<double> pauli_expectation_batch(
    std::span<const PauliString> ps, const MajoranaCovariance& cov) {
  std::vector<double> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(pauli_expectation(p, cov));
  return out;
}

}  // namespace xychain
