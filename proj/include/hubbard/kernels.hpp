#pragma once

#include <cstddef>

namespace hubbard::kernels {

// Data-parallel inner loops behind the sweep machinery. Every kernel has a
// scalar reference implementation and (on x86-64 with AVX2+FMA) a vector
// variant selected at runtime. The two are equivalence-tested against each
// other; agreement is a few ULP, not bit-exact, because the vector cosine
// is polynomial.

enum class Backend { scalar, avx2 };

const char* name(Backend b);
bool available(Backend b);

/// Backend currently in effect (auto-detected on first use).
Backend active_backend();

/// Force a backend; returns false (and leaves the state alone) if the
/// requested backend is not available on this machine.
bool set_backend(Backend b);

/// Return to auto-detection.
void reset_backend();

// ---- kernels ---------------------------------------------------------
// Trig kernels require |x| <= ~1e4 * pi (two-constant Cody-Waite range).

/// s[i] = sin(x[i]), c[i] = cos(x[i])
void sincos(const double* x, double* s, double* c, std::size_t n);

/// c[i] = cos(x[i])
void cosine(const double* x, double* c, std::size_t n);

/// JK[i] = 2 J cos(Kd[i]/2), snapped to exactly 0 within 1e-12*pi of the
/// zone edge |Kd| = pi (same rule as hubbard::collective_hopping).
void collective_hopping_sweep(const double* Kd, std::size_t n, double J,
                              double* JK);

/// E[i] = -2 JK cos(kd[i])
void scattering_band_sweep(double JK, const double* kd, std::size_t n,
                           double* E);

/// Dimer branch over a J_K grid at fixed U != 0:
///   energy[i]  = sign(U) sqrt(U^2 + 4 JK[i]^2)
///   binding[i] = energy[i] - sign(U) 2 JK[i]
///   alpha[i]   = bound-state decay ratio, |alpha| < 1, sign = -sign(U)
///   normC[i]   = sqrt((1 - alpha^2)/(1 + alpha^2))
/// Lanes with JK[i] == 0 produce the localized state: alpha = NaN,
/// normC = 1, energy = binding = U. Output pointers may be null to skip.
void dimer_sweep(const double* JK, std::size_t n, double U, double* alpha,
                 double* energy, double* binding, double* normC);

/// rho[i] = prefactor / sqrt(two_JK^2 - E[i]^2); caller guarantees
/// |E[i]| < two_JK.
void dos_sweep(double two_JK, double prefactor, const double* E,
               std::size_t n, double* rho);

/// out[i] = c0 * ratio^i for i = 0..n-1
void geometric_envelope(double c0, double ratio, std::size_t n, double* out);

/// out[h + i] = amplitude * cos(kd*|i| + delta) for i = -h..h
/// (out has length 2h+1)
void standing_wave(double kd, double delta, double amplitude, long half_width,
                   double* out);

}  // namespace hubbard::kernels
