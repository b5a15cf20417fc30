#include "hubbard/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hubbard {

namespace {
constexpr double kPi = std::numbers::pi;

std::string format_point(const LatticeParams& p, const QuasiMomentum& K,
                         int N) {
  std::ostringstream os;
  os << "U/J=" << p.U / p.J << " Kd=" << K.scaled() << " N=" << N;
  return os.str();
}
}  // namespace

SymmetricTridiagonal RelativeHamiltonian::matrix() const {
  SymmetricTridiagonal t;
  t.diag.assign(dimension(), 0.0);
  t.diag[row(0)] = onsite;
  t.off.assign(dimension() - 1, -hopping);
  return t;
}

RelativeHamiltonian build_relative_hamiltonian(const QuasiMomentum& K,
                                               const LatticeParams& p,
                                               int N) {
  if (N < 1)
    throw std::invalid_argument("build_relative_hamiltonian: N must be >= 1");
  if (N > 2'000'000)
    throw std::length_error("build_relative_hamiltonian: N exceeds budget");
  return {K, N, collective_hopping(K, p), p.U};
}

SpectrumClassification classify_spectrum(const std::vector<double>& values,
                                         const QuasiMomentum& K,
                                         const LatticeParams& p) {
  double jk = collective_hopping(K, p);
  double eps = 1e-9 * p.J;
  SpectrumClassification out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < -2.0 * jk - eps || values[i] > 2.0 * jk + eps) {
      if (out.bound)
        throw std::runtime_error(
            "classify_spectrum: more than one out-of-band eigenvalue");
      out.bound = i;
    } else {
      out.band.push_back(i);
    }
  }
  return out;
}

std::size_t FullHamiltonian::doublon_index(int j) const {
  int M = ring_size;
  return static_cast<std::size_t>(((j % M) + M) % M);
}

std::size_t FullHamiltonian::pair_index(int j, int jp) const {
  int M = ring_size;
  j = ((j % M) + M) % M;
  jp = ((jp % M) + M) % M;
  if (j == jp) return doublon_index(j);
  int a = std::min(j, jp), b = std::max(j, jp);
  // pairs (a,b), a < b, lexicographic after the M doublon states
  std::size_t offset = static_cast<std::size_t>(a) * M -
                       static_cast<std::size_t>(a) * (a + 1) / 2;
  return M + offset + (b - a - 1);
}

std::vector<std::size_t> FullHamiltonian::translation() const {
  int M = ring_size;
  std::vector<std::size_t> perm(dimension());
  for (int j = 0; j < M; ++j) perm[doublon_index(j)] = doublon_index(j + 1);
  for (int j = 0; j < M; ++j)
    for (int jp = j + 1; jp < M; ++jp)
      perm[pair_index(j, jp)] = pair_index(j + 1, jp + 1);
  return perm;
}

FullHamiltonian build_full_hamiltonian(const LatticeParams& p, int M) {
  if (M < 4)
    throw std::invalid_argument("build_full_hamiltonian: M must be >= 4");
  std::size_t dim = static_cast<std::size_t>(M) * (M + 1) / 2;
  if (dim > 5000)
    throw std::length_error("build_full_hamiltonian: dimension exceeds the "
                            "dense-storage budget");

  FullHamiltonian h{M, DenseMatrix(dim)};
  const double rt2J = std::numbers::sqrt2 * p.J;

  for (int j = 0; j < M; ++j) h.matrix.at(h.doublon_index(j), h.doublon_index(j)) = p.U;

  // hopping out of doublons: |2_j> <-> |1_j 1_{j+-1}> with amplitude
  // -sqrt(2) J (the sqrt(2) comes from the symmetrized-basis transform)
  for (int j = 0; j < M; ++j) {
    std::size_t src = h.doublon_index(j);
    for (int dj : {-1, +1}) {
      std::size_t dst = h.pair_index(j, j + dj);
      h.matrix.at(dst, src) += -rt2J;
      h.matrix.at(src, dst) += -rt2J;
    }
  }

  // hopping among separated pairs: move one particle by one site; steps
  // that merge onto the same site are already covered above
  for (int j = 0; j < M; ++j) {
    for (int jp = j + 1; jp < M; ++jp) {
      std::size_t src = h.pair_index(j, jp);
      const int moves[4][2] = {
          {j - 1, jp}, {j + 1, jp}, {j, jp - 1}, {j, jp + 1}};
      for (auto& mv : moves) {
        int a = ((mv[0] % M) + M) % M;
        int b = ((mv[1] % M) + M) % M;
        if (a == b) continue;  // handled via the doublon coupling
        h.matrix.at(h.pair_index(a, b), src) += -p.J;
      }
    }
  }

  // the pair-sector fill above writes each directed element once per move,
  // which is already symmetric; verify and fail loudly if not
  if (!h.matrix.is_symmetric())
    throw std::runtime_error("build_full_hamiltonian: asymmetric fill");
  return h;
}

std::vector<double> ring_block_eigenvalues(const FullHamiltonian& h, int n) {
  const int M = h.ring_size;
  const std::size_t dim = h.dimension();
  n = ((n % M) + M) % M;

  std::vector<std::size_t> perm = h.translation();
  const double theta = 2.0 * kPi * n / M;

  // translation orbits: one doublon orbit (period M) and one orbit per
  // separation s = 1..M/2 (period M, except M/2 for even M)
  struct Orbit {
    std::size_t rep;
    int period;
  };
  std::vector<Orbit> orbits;
  orbits.push_back({h.doublon_index(0), M});
  for (int s = 1; s <= M / 2; ++s) {
    int period = (M % 2 == 0 && s == M / 2) ? M / 2 : M;
    orbits.push_back({h.pair_index(0, s), period});
  }

  std::vector<std::vector<std::complex<double>>> basis;
  for (const Orbit& o : orbits) {
    if ((static_cast<long>(n) * o.period) % M != 0) continue;  // momentum not allowed
    std::vector<std::complex<double>> v(dim, 0.0);
    std::size_t idx = o.rep;
    double norm = 1.0 / std::sqrt(static_cast<double>(o.period));
    for (int t = 0; t < o.period; ++t) {
      v[idx] += std::polar(norm, theta * t);
      idx = perm[idx];
    }
    basis.push_back(std::move(v));
  }

  const std::size_t D = basis.size();
  // H restricted to the block: B^dagger H B, complex Hermitian
  std::vector<std::vector<std::complex<double>>> hb(
      D, std::vector<std::complex<double>>(D, 0.0));
  std::vector<std::complex<double>> hv(dim);
  for (std::size_t b = 0; b < D; ++b) {
    std::fill(hv.begin(), hv.end(), std::complex<double>(0.0));
    for (std::size_t i = 0; i < dim; ++i) {
      std::complex<double> acc = 0.0;
      const double* row = h.matrix.a.data() + i * dim;
      for (std::size_t k = 0; k < dim; ++k)
        if (row[k] != 0.0) acc += row[k] * basis[b][k];
      hv[i] = acc;
    }
    for (std::size_t a = 0; a < D; ++a) {
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        acc += std::conj(basis[a][i]) * hv[i];
      hb[a][b] = acc;
    }
  }

  // embed A + iB as [[A, -B], [B, A]]; spectrum is doubled
  DenseMatrix real(2 * D);
  for (std::size_t a = 0; a < D; ++a) {
    for (std::size_t b = 0; b < D; ++b) {
      // enforce exact Hermitian symmetry before embedding
      std::complex<double> avg = 0.5 * (hb[a][b] + std::conj(hb[b][a]));
      real.at(a, b) = avg.real();
      real.at(a + D, b + D) = avg.real();
      real.at(a, b + D) = -avg.imag();
      real.at(a + D, b) = avg.imag();
    }
  }
  // symmetrize bitwise (the embedding is symmetric up to roundoff)
  for (std::size_t a = 0; a < 2 * D; ++a)
    for (std::size_t b = a + 1; b < 2 * D; ++b) {
      double v = 0.5 * (real(a, b) + real(b, a));
      real.at(a, b) = real.at(b, a) = v;
    }

  return diagonalize_symmetric(real, false).values;
}

void OracleReport::merge(const OracleReport& other) {
  eigenvalue_discrepancies.insert(eigenvalue_discrepancies.end(),
                                  other.eigenvalue_discrepancies.begin(),
                                  other.eigenvalue_discrepancies.end());
  wavefunction_overlaps.insert(wavefunction_overlaps.end(),
                               other.wavefunction_overlaps.begin(),
                               other.wavefunction_overlaps.end());
  band_histogram.insert(band_histogram.end(), other.band_histogram.begin(),
                        other.band_histogram.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  pass = pass && other.pass;
}

double overlap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("overlap: size mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return std::abs(dot) / std::sqrt(na * nb);
}

OracleReport compare_relative_chain(const LatticeParams& p,
                                    const QuasiMomentum& K, int N,
                                    const CompareTolerances& tol) {
  OracleReport rep;
  rep.label = "relative chain " + format_point(p, K, N);

  RelativeHamiltonian h = build_relative_hamiltonian(K, p, N);
  std::vector<double> values = tridiagonal_eigenvalues(h.matrix());
  SpectrumClassification cls = classify_spectrum(values, K, p);

  if (p.U == 0.0) {
    bool numeric_absent = !cls.bound.has_value();
    rep.notes.push_back(numeric_absent
                            ? "no bound state on both paths"
                            : "numeric bound candidate at U = 0");
    rep.pass = numeric_absent;
    return rep;
  }

  if (!cls.bound) {
    rep.notes.push_back("bound state missing from the numeric spectrum");
    rep.pass = false;
    return rep;
  }

  double numeric_E = values[*cls.bound];
  double analytic_E = dimer_energy(K, p);
  Discrepancy disc{"bound energy", analytic_E, numeric_E,
                   std::abs(numeric_E - analytic_E),
                   tol.bound_energy_abs * p.J, true};
  disc.pass = disc.abs_error <= disc.tolerance;
  rep.pass = rep.pass && disc.pass;
  rep.eigenvalue_discrepancies.push_back(disc);

  // eigenvector against the exponential ansatz sampled on the same window
  std::vector<double> numeric_vec =
      tridiagonal_eigenvector(h.matrix(), numeric_E);
  canonicalize_sign(numeric_vec, h.row(0));
  RelativeWavefunction analytic_wf = dimer_wavefunction(K, p, N);
  std::vector<double> analytic_vec(h.dimension());
  for (std::size_t i = 0; i < analytic_vec.size(); ++i)
    analytic_vec[i] = analytic_wf.samples[i].amplitude;

  OverlapEntry ov{"bound eigenvector", overlap(numeric_vec, analytic_vec),
                  1.0 - tol.overlap_deficit, true};
  ov.pass = ov.overlap >= ov.min_required;
  rep.pass = rep.pass && ov.pass;
  rep.wavefunction_overlaps.push_back(ov);
  return rep;
}

// The tolerance here is the exponential finite-size bound itself, so the
// CompareTolerances knobs are not consulted.
OracleReport compare_full_ring(const LatticeParams& p, int M,
                               const CompareTolerances&) {
  OracleReport rep;
  {
    std::ostringstream os;
    os << "full ring U/J=" << p.U / p.J << " M=" << M;
    rep.label = os.str();
  }
  if (p.U == 0.0) {
    rep.notes.push_back("no bound state at U = 0; ring comparison skipped");
    return rep;
  }

  FullHamiltonian h = build_full_hamiltonian(p, M);
  // roundoff floor for the exponential finite-size tolerance
  const double floor =
      64.0 * std::numeric_limits<double>::epsilon() *
      (std::abs(p.U) + 4.0 * p.J);

  for (int n = 0; n <= M / 2; ++n) {
    double Kd = 2.0 * kPi * n / M;
    if (std::cos(Kd / 2.0) < 0.0) continue;
    auto K = QuasiMomentum::from_scaled(Kd, p);
    std::vector<double> values = ring_block_eigenvalues(h, n);
    double numeric_E = p.U < 0.0 ? values.front() : values.back();
    double analytic_E = dimer_energy(K, p);

    double tolerance;
    if (collective_hopping(K, p) == 0.0) {
      tolerance = floor;
    } else {
      double a = std::abs(dimer_alpha(K, p));
      tolerance = std::max(2.0 * std::pow(a, M / 2.0) * p.J, floor);
    }

    std::ostringstream os;
    os << "block n=" << n << " Kd=" << Kd;
    Discrepancy disc{os.str(), analytic_E, numeric_E,
                     std::abs(numeric_E - analytic_E), tolerance, true};
    disc.pass = disc.abs_error <= disc.tolerance;
    rep.pass = rep.pass && disc.pass;
    rep.eigenvalue_discrepancies.push_back(disc);
  }
  return rep;
}

OracleReport compare_dos_histogram(const LatticeParams& p,
                                   const QuasiMomentum& K, int N, int bins,
                                   double span,
                                   const CompareTolerances& tol) {
  OracleReport rep;
  rep.label = "dos histogram " + format_point(p, K, N);
  double jk = collective_hopping(K, p);
  if (jk == 0.0) {
    rep.notes.push_back("flat band; histogram skipped");
    return rep;
  }
  const double W = 2.0 * jk;

  RelativeHamiltonian h = build_relative_hamiltonian(K, p, N);
  std::vector<double> values = tridiagonal_eigenvalues(h.matrix());
  std::vector<double> band;
  for (double v : values)
    if (std::abs(v) <= W + 1e-9 * p.J) band.push_back(v);

  // analytic fraction of band states below E: theta(E)/pi with
  // theta = arccos(-E / 2 J_K); this is the integral of rho normalized
  // by the total L/2d
  auto cumulative = [&](double E) {
    return std::acos(std::clamp(-E / W, -1.0, 1.0)) / kPi;
  };

  const double total = static_cast<double>(band.size());
  for (int b = 0; b < bins; ++b) {
    double lo = -span * W + 2.0 * span * W * b / bins;
    double hi = -span * W + 2.0 * span * W * (b + 1) / bins;
    double expected = cumulative(hi) - cumulative(lo);
    double count = static_cast<double>(std::count_if(
        band.begin(), band.end(),
        [&](double v) { return v >= lo && v < hi; }));
    HistogramBin bin{lo, hi, expected, count / total, 0.0};
    bin.rel_error = std::abs(bin.observed_fraction - bin.expected_fraction) /
                    bin.expected_fraction;
    rep.band_histogram.push_back(bin);
    rep.pass = rep.pass && bin.rel_error <= tol.dos_bin_rel;
  }
  return rep;
}

}  // namespace hubbard
