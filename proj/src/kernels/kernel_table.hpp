#pragma once

#include <cmath>
#include <cstddef>

namespace hubbard::kernels::detail {

struct KernelTable {
  void (*sincos)(const double*, double*, double*, std::size_t);
  void (*cosine)(const double*, double*, std::size_t);
  void (*collective_hopping_sweep)(const double*, std::size_t, double,
                                   double*);
  void (*scattering_band_sweep)(double, const double*, std::size_t, double*);
  void (*dimer_sweep)(const double*, std::size_t, double, double*, double*,
                      double*, double*);
  void (*dos_sweep)(double, double, const double*, std::size_t, double*);
  void (*geometric_envelope)(double, double, std::size_t, double*);
  void (*standing_wave)(double, double, double, long, double*);
};

const KernelTable& scalar_table();

// Defined in kernels_avx2.cpp when that TU is compiled; returns null on
// machines without AVX2+FMA.
const KernelTable* avx2_table();

// Shared scalar helpers (used for vector-loop tails as well).

/// Decay ratio of the bound dimer from the reduced interaction
/// ucal = U / (2 J_K). Sign is -sign(U); |alpha| < 1.
/// The reciprocal form avoids cancellation once |ucal| is large.
inline double dimer_alpha_from_ucal(double ucal, double U) {
  double a = std::abs(ucal);
  double alpha;
  if (a > 1e4) {
    alpha = 1.0 / (a + std::sqrt(a * a + 1.0));
  } else {
    alpha = std::sqrt(a * a + 1.0) - a;
  }
  return U < 0.0 ? alpha : -alpha;
}

}  // namespace hubbard::kernels::detail
