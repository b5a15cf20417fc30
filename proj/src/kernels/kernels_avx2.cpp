// AVX2+FMA kernel backend. Compiled with -mavx2 -mfma and selected at
// runtime only when the CPU reports both features, so the rest of the
// binary stays generic.

#ifdef HUBBARD_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

#include "kernel_table.hpp"

namespace hubbard::kernels::detail {
namespace {

constexpr double kPi = std::numbers::pi;

// Argument reduction x = n*(pi/2) + r, |r| <= pi/4. Two-constant
// Cody-Waite split of pi/2; n*PIO2_1 is exact for |n| < 2^20, which covers
// every sweep in this library (|x| stays below ~1e4*pi).
constexpr double kTwoOverPi = 6.36619772367581382433e-01;
constexpr double kPio2_1 = 1.57079632673412561417e+00;   // high 33 bits
constexpr double kPio2_1t = 6.07710050650619224932e-11;  // pi/2 - PIO2_1

// fdlibm kernel polynomial coefficients on [-pi/4, pi/4].
constexpr double S1 = -1.66666666666666324348e-01;
constexpr double S2 = 8.33333333332248946124e-03;
constexpr double S3 = -1.98412698298579493134e-04;
constexpr double S4 = 2.75573137070700676789e-06;
constexpr double S5 = -2.50507602534068634195e-08;
constexpr double S6 = 1.58969099521155010221e-10;

constexpr double C1 = 4.16666666666666019037e-02;
constexpr double C2 = -1.38888888888741095749e-03;
constexpr double C3 = 2.48015872894767294178e-05;
constexpr double C4 = -2.75573143513906633035e-07;
constexpr double C5 = 2.08757232129817482790e-09;
constexpr double C6 = -1.13596475577881948265e-11;

struct SinCos4 {
  __m256d s;
  __m256d c;
};

// sin and cos of four doubles. Accuracy ~1 ulp against a correctly
// rounded libm over the supported range.
inline SinCos4 sincos4(__m256d x) {
  const __m256d two_over_pi = _mm256_set1_pd(kTwoOverPi);
  __m256d nd = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  // r = (x - n*PIO2_1) - n*PIO2_1t
  __m256d r = _mm256_fnmadd_pd(nd, _mm256_set1_pd(kPio2_1), x);
  r = _mm256_fnmadd_pd(nd, _mm256_set1_pd(kPio2_1t), r);

  __m256d z = _mm256_mul_pd(r, r);

  // sin kernel: r + r*z*(S1 + z*(S2 + ... ))
  __m256d ps = _mm256_set1_pd(S6);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S5));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S4));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S3));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S2));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(S1));
  __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

  // cos kernel: w + ((1 - w) - hz + z*z*P), w = 1 - hz, hz = z/2
  __m256d pc = _mm256_set1_pd(C6);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C5));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C4));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C3));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C2));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(C1));
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d hz = _mm256_mul_pd(z, _mm256_set1_pd(0.5));
  __m256d w = _mm256_sub_pd(one, hz);
  __m256d tail = _mm256_sub_pd(_mm256_sub_pd(one, w), hz);
  tail = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, tail);
  __m256d cos_r = _mm256_add_pd(w, tail);

  // Quadrant selection from n mod 4:
  //   sin(x): 0:+s 1:+c 2:-s 3:-c      cos(x): 0:+c 1:-s 2:-c 3:+s
  __m128i n32 = _mm256_cvtpd_epi32(nd);
  __m128i bit0_128 = _mm_and_si128(n32, _mm_set1_epi32(1));
  __m128i bit1_128 = _mm_and_si128(_mm_srli_epi32(n32, 1), _mm_set1_epi32(1));
  __m256d swap = _mm256_castsi256_pd(
      _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(bit0_128, _mm_set1_epi32(1))));
  __m256d bit1 = _mm256_castsi256_pd(
      _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(bit1_128, _mm_set1_epi32(1))));

  const __m256d signbit = _mm256_set1_pd(-0.0);
  // swapped values
  __m256d s_val = _mm256_blendv_pd(sin_r, cos_r, swap);
  __m256d c_val = _mm256_blendv_pd(cos_r, sin_r, swap);
  // sin sign flips when bit1; cos sign flips when bit0 xor bit1
  __m256d s_flip = _mm256_and_pd(bit1, signbit);
  __m256d c_flip = _mm256_and_pd(_mm256_xor_pd(swap, bit1), signbit);
  return {_mm256_xor_pd(s_val, s_flip), _mm256_xor_pd(c_val, c_flip)};
}

inline __m256d cos4(__m256d x) { return sincos4(x).c; }

void sincos_avx2(const double* x, double* s, double* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    SinCos4 sc = sincos4(_mm256_loadu_pd(x + i));
    _mm256_storeu_pd(s + i, sc.s);
    _mm256_storeu_pd(c + i, sc.c);
  }
  for (; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

void cosine_avx2(const double* x, double* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(c + i, cos4(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) c[i] = std::cos(x[i]);
}

void collective_hopping_avx2(const double* Kd, std::size_t n, double J,
                             double* JK) {
  const __m256d two_J = _mm256_set1_pd(2.0 * J);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(
      0x7fffffffffffffffLL));
  const __m256d pi = _mm256_set1_pd(kPi);
  const __m256d edge_tol = _mm256_set1_pd(1e-12 * kPi);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d kd = _mm256_loadu_pd(Kd + i);
    __m256d jk = _mm256_mul_pd(two_J, cos4(_mm256_mul_pd(kd, half)));
    __m256d dist =
        _mm256_and_pd(_mm256_sub_pd(_mm256_and_pd(kd, abs_mask), pi),
                      abs_mask);
    __m256d at_edge = _mm256_cmp_pd(dist, edge_tol, _CMP_LE_OQ);
    jk = _mm256_andnot_pd(at_edge, jk);
    _mm256_storeu_pd(JK + i, jk);
  }
  for (; i < n; ++i) {
    double akd = std::abs(Kd[i]);
    JK[i] = std::abs(akd - kPi) <= 1e-12 * kPi ? 0.0
                                               : 2.0 * J * std::cos(0.5 * Kd[i]);
  }
}

void scattering_band_avx2(double JK, const double* kd, std::size_t n,
                          double* E) {
  const __m256d m2jk = _mm256_set1_pd(-2.0 * JK);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(E + i, _mm256_mul_pd(m2jk, cos4(_mm256_loadu_pd(kd + i))));
  for (; i < n; ++i) E[i] = -2.0 * JK * std::cos(kd[i]);
}

void dimer_sweep_avx2(const double* JK, std::size_t n, double U, double* alpha,
                      double* energy, double* binding, double* normC) {
  const double sgn = U < 0.0 ? -1.0 : 1.0;
  const __m256d vsgn = _mm256_set1_pd(sgn);
  const __m256d vU = _mm256_set1_pd(U);
  const __m256d u2 = _mm256_set1_pd(U * U);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half_u = _mm256_set1_pd(U * 0.5);
  const __m256d nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(
      0x7fffffffffffffffLL));
  const __m256d big = _mm256_set1_pd(1e4);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d jk = _mm256_loadu_pd(JK + i);
    __m256d flat = _mm256_cmp_pd(jk, zero, _CMP_EQ_OQ);

    // sqrt(U^2 + 4 JK^2), shared by energy and binding
    __m256d jk2x4 = _mm256_mul_pd(_mm256_add_pd(jk, jk), _mm256_add_pd(jk, jk));
    __m256d root = _mm256_sqrt_pd(_mm256_add_pd(u2, jk2x4));

    if (energy) {
      __m256d e = _mm256_mul_pd(vsgn, root);
      e = _mm256_blendv_pd(e, vU, flat);
      _mm256_storeu_pd(energy + i, e);
    }
    if (binding) {
      __m256d b = _mm256_mul_pd(
          vsgn, _mm256_sub_pd(root, _mm256_add_pd(jk, jk)));
      b = _mm256_blendv_pd(b, vU, flat);
      _mm256_storeu_pd(binding + i, b);
    }
    if (alpha || normC) {
      // a = |U/(2 JK)|; flat lanes divide by zero and are blended away
      __m256d au = _mm256_and_pd(_mm256_div_pd(half_u, jk), abs_mask);
      __m256d hyp = _mm256_sqrt_pd(_mm256_fmadd_pd(au, au, one));
      __m256d direct = _mm256_sub_pd(hyp, au);
      __m256d recip = _mm256_div_pd(one, _mm256_add_pd(au, hyp));
      __m256d amag =
          _mm256_blendv_pd(direct, recip, _mm256_cmp_pd(au, big, _CMP_GT_OQ));
      if (alpha) {
        __m256d a = U < 0.0 ? amag : _mm256_sub_pd(zero, amag);
        a = _mm256_blendv_pd(a, nan, flat);
        _mm256_storeu_pd(alpha + i, a);
      }
      if (normC) {
        __m256d a2 = _mm256_mul_pd(amag, amag);
        __m256d cc = _mm256_sqrt_pd(_mm256_div_pd(_mm256_sub_pd(one, a2),
                                                  _mm256_add_pd(one, a2)));
        cc = _mm256_blendv_pd(cc, one, flat);
        _mm256_storeu_pd(normC + i, cc);
      }
    }
  }
  if (i < n) scalar_table().dimer_sweep(JK + i, n - i, U, alpha ? alpha + i : nullptr,
                                        energy ? energy + i : nullptr,
                                        binding ? binding + i : nullptr,
                                        normC ? normC + i : nullptr);
}

void dos_sweep_avx2(double two_JK, double prefactor, const double* E,
                    std::size_t n, double* rho) {
  const __m256d w2 = _mm256_set1_pd(two_JK * two_JK);
  const __m256d pref = _mm256_set1_pd(prefactor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d e = _mm256_loadu_pd(E + i);
    __m256d denom = _mm256_sqrt_pd(_mm256_fnmadd_pd(e, e, w2));
    _mm256_storeu_pd(rho + i, _mm256_div_pd(pref, denom));
  }
  for (; i < n; ++i)
    rho[i] = prefactor / std::sqrt(two_JK * two_JK - E[i] * E[i]);
}

void geometric_envelope_avx2(double c0, double ratio, std::size_t n,
                             double* out) {
  if (n < 8) {
    scalar_table().geometric_envelope(c0, ratio, n, out);
    return;
  }
  const double r2 = ratio * ratio;
  const double r4 = r2 * r2;
  __m256d v = _mm256_set_pd(c0 * r2 * ratio, c0 * r2, c0 * ratio, c0);
  const __m256d step = _mm256_set1_pd(r4);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, v);
    v = _mm256_mul_pd(v, step);
  }
  double tail[4];
  _mm256_storeu_pd(tail, v);
  for (std::size_t j = 0; i < n; ++i, ++j) out[i] = tail[j];
}

void standing_wave_avx2(double kd, double delta, double amplitude,
                        long half_width, double* out) {
  out[half_width] = amplitude * std::cos(delta);
  const __m256d amp = _mm256_set1_pd(amplitude);
  const __m256d vkd = _mm256_set1_pd(kd);
  const __m256d vdelta = _mm256_set1_pd(delta);
  long i = 1;
  for (; i + 4 <= half_width + 1; i += 4) {
    __m256d idx = _mm256_set_pd(static_cast<double>(i + 3),
                                static_cast<double>(i + 2),
                                static_cast<double>(i + 1),
                                static_cast<double>(i));
    __m256d arg = _mm256_fmadd_pd(vkd, idx, vdelta);
    __m256d v = _mm256_mul_pd(amp, cos4(arg));
    _mm256_storeu_pd(out + half_width + i, v);
    double lane[4];
    _mm256_storeu_pd(lane, v);
    for (int j = 0; j < 4; ++j) out[half_width - (i + j)] = lane[j];
  }
  for (; i <= half_width; ++i) {
    double v = amplitude * std::cos(kd * static_cast<double>(i) + delta);
    out[half_width + i] = v;
    out[half_width - i] = v;
  }
}

constexpr KernelTable kAvx2Table = {
    sincos_avx2,
    cosine_avx2,
    collective_hopping_avx2,
    scattering_band_avx2,
    dimer_sweep_avx2,
    dos_sweep_avx2,
    geometric_envelope_avx2,
    standing_wave_avx2,
};

bool cpu_supports_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable* table =
      cpu_supports_avx2_fma() ? &kAvx2Table : nullptr;
  return table;
}

}  // namespace hubbard::kernels::detail

#endif  // HUBBARD_HAVE_AVX2
