#pragma once

#include <vector>

#include "hubbard/model.hpp"

namespace hubbard {

/// Lowest/highest energy of the two-particle scattering continuum at fixed
/// center-of-mass momentum: -2 J_K and +2 J_K.
struct BandEdges {
  double min;
  double max;
};

/// Phase shift with the band-edge limit flagged. At sin(k d) = 0 with
/// U != 0 the tangent formula is singular but the limit -sign(U) pi/2 is
/// well defined; `band_edge_limit` marks that case.
struct PhaseShift {
  double value = 0.0;
  bool band_edge_limit = false;
};

struct RelativeWavefunction {
  enum class Kind { scattering, dimer, localized };
  enum class Normalization { unit_sum_of_squares, plane_wave_amplitude };

  struct Sample {
    long site;
    double amplitude;
  };

  Kind kind;
  QuasiMomentum K;
  Normalization normalization;
  std::vector<Sample> samples;  // ordered by site index

  double amplitude_at(long site) const;
};

/// E = -2 J_K cos(k d), equivalently the sum of the two free Bloch
/// energies at q = K/2 +- k.
double scattering_energy(const QuasiMomentum& K, const QuasiMomentum& k,
                         const LatticeParams& p);

BandEdges band_edges(const QuasiMomentum& K, const LatticeParams& p);

/// tan(delta) = -U csc(k d) / (2 J_K), delta in (-pi/2, pi/2).
/// Throws FlatBand at J_K = 0 and SingularRelativeMomentum at
/// sin(k d) = 0 with U != 0; use phase_shift_with_limit for a total
/// variant.
double phase_shift(const QuasiMomentum& K, const QuasiMomentum& k,
                   const LatticeParams& p);

/// Same, but reports the well-defined band-edge limit instead of throwing
/// SingularRelativeMomentum. Still throws FlatBand.
PhaseShift phase_shift_with_limit(const QuasiMomentum& K,
                                  const QuasiMomentum& k,
                                  const LatticeParams& p);

/// Samples of the standing-wave scattering state 2 cos(k |r_i| + delta)
/// over sites i in [site_min, site_max].
RelativeWavefunction scattering_wavefunction(const QuasiMomentum& K,
                                             const QuasiMomentum& k,
                                             const LatticeParams& p,
                                             long site_min, long site_max);

/// Generalized 1D scattering length a_K = -2 d J_K / U.
double scattering_length(const QuasiMomentum& K, const LatticeParams& p);

/// rho(E, K) = (L / 2 pi d) / sqrt((2 J_K)^2 - E^2) for |E| < 2 J_K.
double density_of_states(double E, const QuasiMomentum& K,
                         double quantization_length, const LatticeParams& p);

}  // namespace hubbard
