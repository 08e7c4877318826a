#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xychain/errors.hpp"

namespace xychain {

// Critical reduced field of the anisotropic XY chain (gamma > 0).
inline constexpr double kLambdaCritical = 1.0;

// One physical configuration of the ring:
//
//   H = -(1/2) sum_j [ (1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1} ]
//       - lambda sum_j Z_j
//
// with J = 1 as the energy unit and periodic bond N -> 1.
struct ModelParams {
  int n_sites;
  double gamma;
  double lambda;

  ModelParams(int n, double g, double l) : n_sites(n), gamma(g), lambda(l) {
    if (n < 3)
      throw ConfigError("ModelParams: need at least 3 sites on a ring, got " +
                        std::to_string(n));
    if (!(g >= 0.0 && g <= 1.0) || !std::isfinite(g))
      throw ConfigError("ModelParams: anisotropy must lie in [0,1]");
    if (!(l >= 0.0) || !std::isfinite(l))
      throw ConfigError("ModelParams: reduced field must be finite and >= 0");
  }
};

// Fermion boundary condition after the Jordan-Wigner map.  Antiperiodic
// corresponds to even fermion parity, Periodic to odd.
enum class Sector { Antiperiodic, Periodic };

inline const char* sector_name(Sector s) {
  return s == Sector::Antiperiodic ? "Antiperiodic" : "Periodic";
}

// Quasiparticle dispersion in units of J.
inline double dispersion(double k, const ModelParams& p) {
  const double a = p.lambda - std::cos(k);
  const double b = p.gamma * std::sin(k);
  return std::hypot(a, b);
}

// The N allowed momenta of a sector, sorted ascending, all in (-pi, pi].
// Antiperiodic: (2m+1)*pi/N, Periodic: 2m*pi/N.
inline std::vector<double> momentum_grid(const ModelParams& p, Sector sector) {
  const int n = p.n_sites;
  const double pi = std::numbers::pi;
  std::vector<double> ks;
  ks.reserve(n);
  for (int m = 0; m < n; ++m) {
    const double num =
        sector == Sector::Antiperiodic ? (2.0 * m + 1.0) : (2.0 * m);
    double k = num * pi / n;
    if (k > pi + 1e-15) k -= 2.0 * pi;
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  return ks;
}

namespace detail {

// Fermion parity of the sector's unconstrained minimum-energy state.  Pairs
// (k,-k) sit in their even-occupation BCS ground configuration; an unpaired
// k0 in {0, pi} is occupied exactly when its mode energy 2(lambda - cos k0)
// is negative.  Only k = 0 with lambda < 1 ever qualifies.
inline int unconstrained_parity(const ModelParams& p, Sector sector) {
  if (sector == Sector::Periodic && p.lambda < 1.0) return 1;
  return 0;
}

inline int required_parity(Sector sector) {
  return sector == Sector::Antiperiodic ? 0 : 1;
}

}  // namespace detail

// Lowest energy among states of the sector's fermion parity.  The
// unconstrained minimum is -sum_k eps(k); if its parity disagrees with the
// sector constraint the cheapest single quasiparticle (2 min_k eps) is added.
inline double sector_energy(const ModelParams& p, Sector sector) {
  const auto ks = momentum_grid(p, sector);
  double sum = 0.0, emin = std::numeric_limits<double>::infinity();
  for (double k : ks) {
    const double e = dispersion(k, p);
    sum += e;
    emin = std::min(emin, e);
  }
  double energy = -sum;
  if (detail::unconstrained_parity(p, sector) != detail::required_parity(sector))
    energy += 2.0 * emin;
  return energy;
}

struct FermionSector {
  Sector tag;
  std::vector<double> momenta;
  double ground_energy;
};

// Sector with the lower parity-constrained ground energy; ties go to
// Antiperiodic.
inline FermionSector select_ground_sector(const ModelParams& p) {
  const double e_ap = sector_energy(p, Sector::Antiperiodic);
  const double e_p = sector_energy(p, Sector::Periodic);
  const Sector tag = e_p < e_ap ? Sector::Periodic : Sector::Antiperiodic;
  return FermionSector{tag, momentum_grid(p, tag),
                       tag == Sector::Periodic ? e_p : e_ap};
}

// Ground-state contractions of the ordered Majorana pair basis
// A_j = c_j^dag + c_j (slot 2j), B_j = c_j^dag - c_j (slot 2j+1):
//
//   <B_i A_j> = G(j - i),  <A_i A_j> = delta_ij,  <B_i B_j> = -delta_ij,
//   G(r) = (1/N) sum_k e^{ikr} (cos k - lambda - i gamma sin k) / eps(k)
//
// over the selected sector's grid.  G is real and N-periodic; all spin
// correlators reduce to Pfaffians of submatrices of this object.
class MajoranaCovariance {
 public:
  MajoranaCovariance(int n_sites, std::vector<double> g)
      : n_sites_(n_sites), g_(std::move(g)) {}

  int n_sites() const { return n_sites_; }

  double g(int r) const {
    r %= n_sites_;
    if (r < 0) r += n_sites_;
    return g_[static_cast<size_t>(r)];
  }

  // Connected contraction of the ordered pair (slot p, slot q), p, q in
  // [0, 2N).  Antisymmetry holds exactly by the rule table.
  double entry(int p, int q) const {
    if (p == q) return 0.0;
    const int i = p >> 1, j = q >> 1;
    const bool pb = p & 1, qb = q & 1;
    if (pb == qb) return 0.0;          // A-A or B-B
    if (pb) return g(j - i);           // <B_i A_j>
    return -g(i - j);                  // <A_i B_j> = -<B_j A_i>
  }

  Eigen::MatrixXd matrix() const {
    const int d = 2 * n_sites_;
    Eigen::MatrixXd m(d, d);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) m(p, q) = entry(p, q);
    return m;
  }

 private:
  int n_sites_;
  std::vector<double> g_;
};

inline MajoranaCovariance majorana_covariance(const ModelParams& p) {
  const FermionSector sec = select_ground_sector(p);
  const int n = p.n_sites;

  std::vector<double> ck(n), sk(n), w(n);
  for (int i = 0; i < n; ++i) {
    const double k = sec.momenta[i];
    const double e = dispersion(k, p);
    if (e < 1e-14)
      throw DegenerateModeError(
          "majorana_covariance: zero mode on the " +
          std::string(sector_name(sec.tag)) + " grid at k=" +
          std::to_string(k) + " (lambda=" + std::to_string(p.lambda) +
          "); perturb lambda");
    ck[i] = std::cos(k);
    sk[i] = std::sin(k);
    w[i] = 1.0 / e;
  }

  std::vector<double> g(n);
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double k = sec.momenta[i];
      acc += ((ck[i] - p.lambda) * std::cos(k * r) +
              p.gamma * sk[i] * std::sin(k * r)) *
             w[i];
    }
    g[static_cast<size_t>(r)] = acc / n;
  }
  return MajoranaCovariance(n, std::move(g));
}

}  // namespace xychain
