#pragma once

#include <optional>

#include "hubbard/model.hpp"
#include "hubbard/scattering.hpp"

namespace hubbard {

/// Bound-pair record at one center-of-mass momentum.
struct DimerState {
  enum class InteractionSign { attractive, repulsive };

  QuasiMomentum K;
  std::optional<double> alpha;  // absent at |K| = pi/d (localized state)
  double energy;
  double binding_energy;
  double normalization_C;
  InteractionSign interaction_sign;
};

/// Decay ratio of the exponential bound state, psi_i ~ alpha^|i|.
/// |alpha| < 1, sign(alpha) = -sign(U).
double dimer_alpha(const QuasiMomentum& K, const LatticeParams& p);

/// E = sign(U) sqrt(U^2 + 4 J_K^2); lies outside the scattering band for
/// every U != 0. At |K| = pi/d both branches give E = U.
double dimer_energy(const QuasiMomentum& K, const LatticeParams& p);

/// Normalized bound-state wavefunction C alpha^|i|. The default sample
/// range ceil(36/|ln alpha|) keeps the truncated norm deficit below 1e-30.
/// At |K| = pi/d returns the localized state psi(0) = 1.
RelativeWavefunction dimer_wavefunction(const QuasiMomentum& K,
                                        const LatticeParams& p);
RelativeWavefunction dimer_wavefunction(const QuasiMomentum& K,
                                        const LatticeParams& p,
                                        long half_width);

/// Energy measured from the nearest scattering-band edge: negative for
/// U < 0 (from the bottom), positive for U > 0 (from the top).
double binding_energy(const QuasiMomentum& K, const LatticeParams& p);

/// Small-K dimer effective mass, sign(M*) = -sign(U);
/// |M*| = hbar^2 sqrt(U^2 + 16 J^2) / (4 d^2 J^2).
double dimer_effective_mass(const LatticeParams& p);

/// Effective pair tunnelling J2 = -2 J^2 / U of the strongly bound dimer.
double effective_pair_hopping(const LatticeParams& p);

/// Strong-coupling dispersion (U - 2 J2) - 2 J2 cos(K d); accurate to
/// O(J^4/U^3) for |U| >> J.
double strong_coupling_energy(const QuasiMomentum& K, const LatticeParams& p);

/// Assembled record (alpha absent at the zone edge).
DimerState dimer_state(const QuasiMomentum& K, const LatticeParams& p);

}  // namespace hubbard
