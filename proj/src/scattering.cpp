#include "hubbard/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hubbard/kernels.hpp"

namespace hubbard {

namespace {
constexpr double kPi = std::numbers::pi;

// sin(k d) = 0 exactly at the same granularity the zone folding produces:
// k d = 0 or +-pi.
bool at_relative_band_edge(const QuasiMomentum& k) {
  double akd = std::abs(k.scaled());
  return akd <= 1e-12 * kPi || std::abs(akd - kPi) <= 1e-12 * kPi;
}
}  // namespace

double RelativeWavefunction::amplitude_at(long site) const {
  auto it = std::find_if(samples.begin(), samples.end(),
                         [site](const Sample& s) { return s.site == site; });
  if (it == samples.end())
    throw std::out_of_range("RelativeWavefunction: site not sampled");
  return it->amplitude;
}

double scattering_energy(const QuasiMomentum& K, const QuasiMomentum& k,
                         const LatticeParams& p) {
  return -2.0 * collective_hopping(K, p) * std::cos(k.scaled());
}

BandEdges band_edges(const QuasiMomentum& K, const LatticeParams& p) {
  double jk = collective_hopping(K, p);
  return {-2.0 * jk, 2.0 * jk};
}

double phase_shift(const QuasiMomentum& K, const QuasiMomentum& k,
                   const LatticeParams& p) {
  double jk = collective_hopping(K, p);
  if (jk == 0.0)
    throw FlatBand("phase shift undefined at |K| = pi/d");
  if (p.U == 0.0) return 0.0;  // exact zero, not -0
  if (at_relative_band_edge(k))
    throw SingularRelativeMomentum(
        "sin(k d) = 0; use phase_shift_with_limit for the limiting value");
  return std::atan(-p.U / (2.0 * jk * std::sin(k.scaled())));
}

PhaseShift phase_shift_with_limit(const QuasiMomentum& K,
                                  const QuasiMomentum& k,
                                  const LatticeParams& p) {
  double jk = collective_hopping(K, p);
  if (jk == 0.0)
    throw FlatBand("phase shift undefined at |K| = pi/d");
  if (p.U == 0.0) return {0.0, false};
  if (at_relative_band_edge(k))
    return {-std::copysign(kPi / 2.0, p.U), true};
  return {std::atan(-p.U / (2.0 * jk * std::sin(k.scaled()))), false};
}

RelativeWavefunction scattering_wavefunction(const QuasiMomentum& K,
                                             const QuasiMomentum& k,
                                             const LatticeParams& p,
                                             long site_min, long site_max) {
  if (site_min > site_max)
    throw std::invalid_argument("scattering_wavefunction: empty site range");
  // the state is even in k; evaluate everything at |k|
  auto k_abs = QuasiMomentum::from_scaled(std::abs(k.scaled()), p);
  double delta = phase_shift(K, k_abs, p);

  // sample the full symmetric range through the kernel, then cut
  long h = std::max(std::abs(site_min), std::abs(site_max));
  std::vector<double> full(2 * h + 1);
  kernels::standing_wave(k_abs.scaled(), delta, 2.0, h, full.data());

  RelativeWavefunction wf{RelativeWavefunction::Kind::scattering, K,
                          RelativeWavefunction::Normalization::
                              plane_wave_amplitude,
                          {}};
  wf.samples.reserve(site_max - site_min + 1);
  for (long i = site_min; i <= site_max; ++i)
    wf.samples.push_back({i, full[h + i]});
  return wf;
}

double scattering_length(const QuasiMomentum& K, const LatticeParams& p) {
  if (p.U == 0.0)
    throw ZeroInteraction("scattering length diverges at U = 0");
  return -2.0 * p.d * collective_hopping(K, p) / p.U;
}

double density_of_states(double E, const QuasiMomentum& K,
                         double quantization_length, const LatticeParams& p) {
  if (!(quantization_length > 0.0))
    throw std::invalid_argument("density_of_states: L must be positive");
  double jk = collective_hopping(K, p);
  if (jk == 0.0)
    throw FlatBand("density of states undefined at |K| = pi/d");
  double w = 2.0 * jk;
  if (!(std::abs(E) < w))
    throw OutsideBand("density_of_states requires |E| < 2 J_K");
  return quantization_length / (2.0 * kPi * p.d) /
         std::sqrt(w * w - E * E);
}

}  // namespace hubbard
