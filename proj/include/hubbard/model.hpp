#pragma once

#include <cmath>
#include <numbers>

#include "hubbard/errors.hpp"

namespace hubbard {

/// Physical constants of the single-band Bose-Hubbard chain.
///
/// J is the nearest-neighbour tunnel coupling (energy), U the on-site
/// interaction (energy, any sign), d the lattice constant (length) and
/// hbar the action unit (1 by convention unless raw units are requested).
struct LatticeParams {
  double J;
  double U;
  double d;
  double hbar;

  LatticeParams(double J_, double U_, double d_ = 1.0, double hbar_ = 1.0)
      : J(J_), U(U_), d(d_), hbar(hbar_) {
    if (!std::isfinite(J) || J <= 0.0)
      throw std::invalid_argument("LatticeParams: J must be positive");
    if (!std::isfinite(d) || d <= 0.0)
      throw std::invalid_argument("LatticeParams: d must be positive");
    if (!std::isfinite(U))
      throw std::invalid_argument("LatticeParams: U must be finite");
    if (!std::isfinite(hbar) || hbar <= 0.0)
      throw std::invalid_argument("LatticeParams: hbar must be positive");
  }

  double zone_half_width() const { return std::numbers::pi / d; }

  LatticeParams with_interaction(double U_new) const {
    return LatticeParams(J, U_new, d, hbar);
  }
};

/// Momentum folded into the first Brillouin zone [-pi/d, pi/d].
///
/// Stored as the dimensionless product q*d in [-pi, pi] so that folding is
/// exact for rational multiples of pi regardless of d.
class QuasiMomentum {
 public:
  static QuasiMomentum fold(double q, const LatticeParams& p) {
    if (!std::isfinite(q))
      throw std::invalid_argument("QuasiMomentum: non-finite momentum");
    return from_scaled(q * p.d, p);
  }

  /// Folds the dimensionless product q*d directly.
  static QuasiMomentum from_scaled(double qd, const LatticeParams& p) {
    if (!std::isfinite(qd))
      throw std::invalid_argument("QuasiMomentum: non-finite momentum");
    // remainder() is exact and lands in [-pi, pi] by IEEE semantics
    double folded = std::remainder(qd, 2.0 * std::numbers::pi);
    return QuasiMomentum(folded, p.d);
  }

  double value() const { return qd_ / d_; }
  double scaled() const { return qd_; }
  double lattice_constant() const { return d_; }

  /// True within 1e-12 * pi of the zone boundary |q| = pi/d.
  bool at_zone_edge() const {
    constexpr double pi = std::numbers::pi;
    return std::abs(std::abs(qd_) - pi) <= 1e-12 * pi;
  }

 private:
  QuasiMomentum(double qd, double d) : qd_(qd), d_(d) {}
  double qd_;
  double d_;
};

inline QuasiMomentum fold_to_zone(double q, const LatticeParams& p) {
  return QuasiMomentum::fold(q, p);
}

/// Bloch band of the single particle, E = -2J cos(q d); width 4J.
inline double single_particle_energy(const QuasiMomentum& q,
                                     const LatticeParams& p) {
  return -2.0 * p.J * std::cos(q.scaled());
}

/// Band-bottom effective mass m* = hbar^2 / (2 J d^2).
inline double single_particle_effective_mass(const LatticeParams& p) {
  return p.hbar * p.hbar / (2.0 * p.J * p.d * p.d);
}

/// Collective hopping J_K = 2J cos(K d / 2) of the relative motion.
///
/// Returns exactly 0 at |K| = pi/d so that flat-band branches dispatch
/// deterministically.
inline double collective_hopping(const QuasiMomentum& K,
                                 const LatticeParams& p) {
  if (K.at_zone_edge()) return 0.0;
  return 2.0 * p.J * std::cos(0.5 * K.scaled());
}

}  // namespace hubbard
