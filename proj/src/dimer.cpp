#include "hubbard/dimer.hpp"

#include <cmath>

#include "hubbard/kernels.hpp"
#include "kernels/kernel_table.hpp"

namespace hubbard {

namespace {

void require_interaction(const LatticeParams& p, const char* what) {
  if (p.U == 0.0) throw ZeroInteraction(what);
}

}  // namespace

double dimer_alpha(const QuasiMomentum& K, const LatticeParams& p) {
  require_interaction(p, "no bound state at U = 0");
  double jk = collective_hopping(K, p);
  if (jk == 0.0)
    throw FlatBand("alpha undefined at |K| = pi/d; the state is localized");
  return kernels::detail::dimer_alpha_from_ucal(p.U / (2.0 * jk), p.U);
}

double dimer_energy(const QuasiMomentum& K, const LatticeParams& p) {
  require_interaction(p, "no bound state at U = 0");
  double jk = collective_hopping(K, p);
  return std::copysign(std::hypot(p.U, 2.0 * jk), p.U);
}

double binding_energy(const QuasiMomentum& K, const LatticeParams& p) {
  require_interaction(p, "no bound state at U = 0");
  double jk = collective_hopping(K, p);
  double root = std::hypot(p.U, 2.0 * jk);
  return p.U < 0.0 ? 2.0 * jk - root : root - 2.0 * jk;
}

RelativeWavefunction dimer_wavefunction(const QuasiMomentum& K,
                                        const LatticeParams& p) {
  require_interaction(p, "no bound state at U = 0");
  double jk = collective_hopping(K, p);
  long h = 0;
  if (jk != 0.0) {
    double a = std::abs(dimer_alpha(K, p));
    double span = std::ceil(36.0 / -std::log(a));
    if (span > 5e7)
      throw std::length_error(
          "dimer_wavefunction: default sample range too large; "
          "pass an explicit half_width");
    h = static_cast<long>(span);
  }
  return dimer_wavefunction(K, p, h);
}

RelativeWavefunction dimer_wavefunction(const QuasiMomentum& K,
                                        const LatticeParams& p,
                                        long half_width) {
  require_interaction(p, "no bound state at U = 0");
  if (half_width < 0)
    throw std::invalid_argument("dimer_wavefunction: negative half_width");
  double jk = collective_hopping(K, p);

  RelativeWavefunction wf{RelativeWavefunction::Kind::dimer, K,
                          RelativeWavefunction::Normalization::
                              unit_sum_of_squares,
                          {}};
  wf.samples.reserve(2 * half_width + 1);

  if (jk == 0.0) {
    wf.kind = RelativeWavefunction::Kind::localized;
    for (long i = -half_width; i <= half_width; ++i)
      wf.samples.push_back({i, i == 0 ? 1.0 : 0.0});
    return wf;
  }

  double alpha = dimer_alpha(K, p);
  double c = std::sqrt((1.0 - alpha * alpha) / (1.0 + alpha * alpha));
  std::vector<double> tail(half_width + 1);
  kernels::geometric_envelope(c, alpha, half_width + 1, tail.data());
  for (long i = -half_width; i <= half_width; ++i)
    wf.samples.push_back({i, tail[std::abs(i)]});
  return wf;
}

double dimer_effective_mass(const LatticeParams& p) {
  require_interaction(p, "no dimer at U = 0");
  double mag = p.hbar * p.hbar * std::hypot(p.U, 4.0 * p.J) /
               (4.0 * p.d * p.d * p.J * p.J);
  return p.U < 0.0 ? mag : -mag;
}

double effective_pair_hopping(const LatticeParams& p) {
  require_interaction(p, "pair hopping undefined at U = 0");
  return -2.0 * p.J * p.J / p.U;
}

double strong_coupling_energy(const QuasiMomentum& K,
                              const LatticeParams& p) {
  require_interaction(p, "no dimer at U = 0");
  double j2 = effective_pair_hopping(p);
  return (p.U - 2.0 * j2) - 2.0 * j2 * std::cos(K.scaled());
}

DimerState dimer_state(const QuasiMomentum& K, const LatticeParams& p) {
  require_interaction(p, "no bound state at U = 0");
  double jk = collective_hopping(K, p);
  DimerState st{K,
                std::nullopt,
                dimer_energy(K, p),
                binding_energy(K, p),
                1.0,
                p.U < 0.0 ? DimerState::InteractionSign::attractive
                          : DimerState::InteractionSign::repulsive};
  if (jk != 0.0) {
    double a = dimer_alpha(K, p);
    st.alpha = a;
    st.normalization_C = std::sqrt((1.0 - a * a) / (1.0 + a * a));
  }
  return st;
}

}  // namespace hubbard
