#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hubbard/dimer.hpp"
#include "hubbard/model.hpp"
#include "hubbard/sym_eigen.hpp"

namespace hubbard {

/// Relative-coordinate Hamiltonian on an open chain of sites
/// i in [-N, N]: diagonal U at i = 0, uniform off-diagonal -J_K.
struct RelativeHamiltonian {
  QuasiMomentum K;
  int half_width;   // N
  double hopping;   // J_K
  double onsite;    // U

  std::size_t dimension() const { return 2 * half_width + 1; }
  long site(std::size_t row) const {
    return static_cast<long>(row) - half_width;
  }
  std::size_t row(long site) const {
    return static_cast<std::size_t>(site + half_width);
  }
  SymmetricTridiagonal matrix() const;
};

RelativeHamiltonian build_relative_hamiltonian(const QuasiMomentum& K,
                                               const LatticeParams& p, int N);

/// Band states vs the (at most one) bound candidate outside
/// [-2 J_K - eps, 2 J_K + eps], eps = 1e-9 J.
struct SpectrumClassification {
  std::vector<std::size_t> band;
  std::optional<std::size_t> bound;
};

SpectrumClassification classify_spectrum(const std::vector<double>& values,
                                         const QuasiMomentum& K,
                                         const LatticeParams& p);

/// Two bosons on a ring of M sites in the symmetrized basis
/// {|2_j>} u {|1_j 1_j'>, j < j'}; dimension M(M+1)/2.
struct FullHamiltonian {
  int ring_size;
  DenseMatrix matrix;

  std::size_t dimension() const { return matrix.n; }
  std::size_t doublon_index(int j) const;
  std::size_t pair_index(int j, int jp) const;  // any order, mod M
  /// Basis permutation of the one-site translation.
  std::vector<std::size_t> translation() const;
};

FullHamiltonian build_full_hamiltonian(const LatticeParams& p, int M);

/// Eigenvalues of the center-of-mass momentum block K_n = 2 pi n / (M d),
/// extracted by projecting onto the translation eigenspace (DFT over ring
/// shifts). Complex Hermitian blocks are embedded as real symmetric
/// matrices of twice the size, so every eigenvalue is reported twice.
std::vector<double> ring_block_eigenvalues(const FullHamiltonian& h, int n);

// ---- analytic-vs-numeric comparison reports --------------------------

struct CompareTolerances {
  double bound_energy_abs = 1e-8;    // units of J
  double overlap_deficit = 1e-8;
  double dos_bin_rel = 0.05;
};

struct Discrepancy {
  std::string label;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct OverlapEntry {
  std::string label;
  double overlap = 0.0;
  double min_required = 0.0;
  bool pass = true;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double expected_fraction = 0.0;
  double observed_fraction = 0.0;
  double rel_error = 0.0;
};

struct OracleReport {
  std::string label;
  std::vector<Discrepancy> eigenvalue_discrepancies;
  std::vector<OverlapEntry> wavefunction_overlaps;
  std::vector<HistogramBin> band_histogram;
  std::vector<std::string> notes;
  bool pass = true;

  void merge(const OracleReport& other);
};

/// Bound-state comparison on the open relative chain at one (U, K, N)
/// point: isolated eigenvalue vs the closed form, eigenvector overlap vs
/// the exponential ansatz. U = 0 checks mutual absence.
OracleReport compare_relative_chain(const LatticeParams& p,
                                    const QuasiMomentum& K, int N,
                                    const CompareTolerances& tol);

/// Translation-block bound energies of the M-site ring vs the closed form
/// at quantized K with cos(K d / 2) >= 0; tolerance 2 |alpha_K|^(M/2) J
/// (floored at the roundoff level).
OracleReport compare_full_ring(const LatticeParams& p, int M,
                               const CompareTolerances& tol);

/// Band eigenvalue histogram of the N-site relative chain vs the density
/// of states, 10 bins spanning [-span, +span] * 2 J_K.
OracleReport compare_dos_histogram(const LatticeParams& p,
                                   const QuasiMomentum& K, int N, int bins,
                                   double span, const CompareTolerances& tol);

/// |<a, b>| / (|a| |b|) over the common index range.
double overlap(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace hubbard
