#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xychain/errors.hpp"

namespace xychain {

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

inline char axis_name(Axis a) { return "XYZ"[static_cast<int>(a)]; }

// Product of single-site Pauli factors, at most one per site, kept in
// strictly increasing site order.  The empty string is the identity.
struct PauliString {
  std::vector<std::pair<int, Axis>> factors;

  PauliString() = default;

  explicit PauliString(std::vector<std::pair<int, Axis>> f)
      : factors(std::move(f)) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < factors.size(); ++i)
      if (factors[i].first == factors[i + 1].first)
        throw ConfigError("PauliString: duplicate site " +
                          std::to_string(factors[i].first));
    if (!factors.empty() && factors.front().first < 0)
      throw ConfigError("PauliString: negative site index");
  }

  size_t weight() const { return factors.size(); }

  PauliString shifted(int by, int n_sites) const {
    std::vector<std::pair<int, Axis>> f;
    f.reserve(factors.size());
    for (const auto& [s, a] : factors) {
      int t = (s + by) % n_sites;
      if (t < 0) t += n_sites;
      f.emplace_back(t, a);
    }
    return PauliString(std::move(f));
  }

  std::string label() const {
    if (factors.empty()) return "I";
    std::string out;
    for (const auto& [s, a] : factors)
      out += std::string(1, axis_name(a)) + std::to_string(s) + " ";
    out.pop_back();
    return out;
  }
};

// Signed monomial in the Majorana slot basis: value = i^quadrant * product
// of slots in ascending order.  Slot 2j is A_j, slot 2j+1 is B_j.
struct MajoranaMonomial {
  int quadrant = 0;  // phase = i^quadrant, quadrant in {0,1,2,3}
  std::vector<int> slots;

  std::complex<double> phase() const {
    switch (quadrant & 3) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  // Sorts slots ascending, folding the permutation sign into the phase and
  // annihilating repeated slots (A^2 = +1, B^2 = -1).
  void canonicalize() {
    std::vector<int> out;
    out.reserve(slots.size());
    for (int s : slots) {
      auto pos = std::lower_bound(out.begin(), out.end(), s);
      if (pos != out.end() && *pos == s) {
        // Move the new copy next to the existing one, then square away.
        const size_t greater = static_cast<size_t>(out.end() - pos) - 1;
        if (greater & 1) quadrant += 2;
        if (s & 1) quadrant += 2;  // B slot squares to -1
        out.erase(pos);
      } else {
        const size_t greater = static_cast<size_t>(out.end() - pos);
        if (greater & 1) quadrant += 2;
        out.insert(pos, s);
      }
    }
    quadrant &= 3;
    slots = std::move(out);
  }
};

// Jordan-Wigner translation of a Pauli string, convention
//
//   X_j = (prod_{l<j} A_l B_l) A_j,   Y_j = i (prod_{l<j} A_l B_l) B_j,
//   Z_j = A_j B_j,
//
// i.e. c_j = (prod_{l<j} Z_l) sigma^+_j.  Walking the factors in ascending
// site order keeps the emitted slot list sorted, so string segments between
// consecutive X/Y factors cancel symbolically and no permutation signs
// arise.
inline MajoranaMonomial jordan_wigner_monomial(const PauliString& p,
                                               int n_sites) {
  enum : uint8_t { kNone = 0, kA = 1, kB = 2, kAB = 3 };
  if (!p.factors.empty() && p.factors.back().first >= n_sites)
    throw ConfigError("jordan_wigner_monomial: site index out of range");

  const int top = p.factors.empty() ? 0 : p.factors.back().first + 1;
  std::vector<uint8_t> state(static_cast<size_t>(top), kNone);
  MajoranaMonomial m;

  // Right-multiplication by Z_l = A_l B_l; no sign in any case.
  static constexpr uint8_t zmul[4] = {kAB, kB, kA, kNone};

  for (const auto& [site, axis] : p.factors) {
    if (axis != Axis::Z) {
      for (int l = 0; l < site; ++l) state[l] = zmul[state[l]];
      state[site] = axis == Axis::X ? kA : kB;
      if (axis == Axis::Y) m.quadrant = (m.quadrant + 1) & 3;
    } else {
      state[site] = kAB;
    }
  }

  for (int l = 0; l < top; ++l) {
    const uint8_t s = state[l];
    if (s & kA) m.slots.push_back(2 * l);
    if (s & kB) m.slots.push_back(2 * l + 1);
  }
  return m;
}

}  // namespace xychain
