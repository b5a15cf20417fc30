#include "hubbard/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string_view>

#include "kernel_table.hpp"

namespace hubbard::kernels {
namespace detail {
namespace {

constexpr double kPi = std::numbers::pi;

void sincos_scalar(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

void cosine_scalar(const double* x, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c[i] = std::cos(x[i]);
}

void collective_hopping_scalar(const double* Kd, std::size_t n, double J,
                               double* JK) {
  for (std::size_t i = 0; i < n; ++i) {
    double akd = std::abs(Kd[i]);
    JK[i] = std::abs(akd - kPi) <= 1e-12 * kPi
                ? 0.0
                : 2.0 * J * std::cos(0.5 * Kd[i]);
  }
}

void scattering_band_scalar(double JK, const double* kd, std::size_t n,
                            double* E) {
  for (std::size_t i = 0; i < n; ++i) E[i] = -2.0 * JK * std::cos(kd[i]);
}

void dimer_sweep_scalar(const double* JK, std::size_t n, double U,
                        double* alpha, double* energy, double* binding,
                        double* normC) {
  const double sgn = U < 0.0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double jk = JK[i];
    if (jk == 0.0) {
      // flat band: completely localized pair, E = U
      if (alpha) alpha[i] = std::numeric_limits<double>::quiet_NaN();
      if (energy) energy[i] = U;
      if (binding) binding[i] = U;
      if (normC) normC[i] = 1.0;
      continue;
    }
    double ucal = U / (2.0 * jk);
    double a = dimer_alpha_from_ucal(ucal, U);
    if (alpha) alpha[i] = a;
    if (energy) energy[i] = sgn * std::sqrt(U * U + 4.0 * jk * jk);
    if (binding)
      binding[i] = sgn * (std::sqrt(U * U + 4.0 * jk * jk) - 2.0 * jk);
    if (normC) normC[i] = std::sqrt((1.0 - a * a) / (1.0 + a * a));
  }
}

void dos_sweep_scalar(double two_JK, double prefactor, const double* E,
                      std::size_t n, double* rho) {
  const double w2 = two_JK * two_JK;
  for (std::size_t i = 0; i < n; ++i)
    rho[i] = prefactor / std::sqrt(w2 - E[i] * E[i]);
}

void geometric_envelope_scalar(double c0, double ratio, std::size_t n,
                               double* out) {
  double v = c0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v;
    v *= ratio;
  }
}

void standing_wave_scalar(double kd, double delta, double amplitude,
                          long half_width, double* out) {
  out[half_width] = amplitude * std::cos(delta);
  for (long i = 1; i <= half_width; ++i) {
    double v = amplitude * std::cos(kd * static_cast<double>(i) + delta);
    out[half_width + i] = v;
    out[half_width - i] = v;
  }
}

constexpr KernelTable kScalarTable = {
    sincos_scalar,
    cosine_scalar,
    collective_hopping_scalar,
    scattering_band_scalar,
    dimer_sweep_scalar,
    dos_sweep_scalar,
    geometric_envelope_scalar,
    standing_wave_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

#ifndef HUBBARD_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

}  // namespace detail

namespace {

using detail::KernelTable;

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const KernelTable* resolve(Backend b) {
  return b == Backend::avx2 ? detail::avx2_table() : &detail::scalar_table();
}

Backend detect() {
  if (const char* env = std::getenv("HUBBARD_KERNELS")) {
    std::string_view v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && detail::avx2_table()) return Backend::avx2;
  }
  return detail::avx2_table() ? Backend::avx2 : Backend::scalar;
}

const KernelTable& table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (!t) {
    Backend b = detect();
    t = resolve(b);
    g_backend.store(b, std::memory_order_relaxed);
    g_table.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

const char* name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Backend b) { return resolve(b) != nullptr; }

Backend active_backend() {
  table();  // force detection
  return g_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend b) {
  const KernelTable* t = resolve(b);
  if (!t) return false;
  g_backend.store(b, std::memory_order_relaxed);
  g_table.store(t, std::memory_order_release);
  return true;
}

void reset_backend() {
  Backend b = detect();
  g_backend.store(b, std::memory_order_relaxed);
  g_table.store(resolve(b), std::memory_order_release);
}

void sincos(const double* x, double* s, double* c, std::size_t n) {
  table().sincos(x, s, c, n);
}

void cosine(const double* x, double* c, std::size_t n) {
  table().cosine(x, c, n);
}

void collective_hopping_sweep(const double* Kd, std::size_t n, double J,
                              double* JK) {
  table().collective_hopping_sweep(Kd, n, J, JK);
}

void scattering_band_sweep(double JK, const double* kd, std::size_t n,
                           double* E) {
  table().scattering_band_sweep(JK, kd, n, E);
}

void dimer_sweep(const double* JK, std::size_t n, double U, double* alpha,
                 double* energy, double* binding, double* normC) {
  table().dimer_sweep(JK, n, U, alpha, energy, binding, normC);
}

void dos_sweep(double two_JK, double prefactor, const double* E,
               std::size_t n, double* rho) {
  table().dos_sweep(two_JK, prefactor, E, n, rho);
}

void geometric_envelope(double c0, double ratio, std::size_t n, double* out) {
  table().geometric_envelope(c0, ratio, n, out);
}

void standing_wave(double kd, double delta, double amplitude, long half_width,
                   double* out) {
  table().standing_wave(kd, delta, amplitude, half_width, out);
}

}  // namespace hubbard::kernels
