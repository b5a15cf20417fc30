#pragma once

#include <cstddef>
#include <vector>

namespace hubbard {

/// Real symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Dense real matrix, row-major.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  bool is_symmetric() const;
  /// max_i sum_j |a(i,j)| (infinity norm)
  double norm_inf() const;
};

/// Eigenvalues ascending; eigenvectors (when present) stored column-wise,
/// eigenvector(j)[i] is component i of the j-th eigenvector.
struct EigenSolution {
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // column-major, empty when not requested

  bool has_vectors() const { return !vectors.empty(); }
  const double* eigenvector(std::size_t j) const { return vectors.data() + j * n; }
};

/// Householder reduction followed by implicit-shift QL. Throws
/// std::invalid_argument on non-symmetric input and std::runtime_error if
/// the QL iteration fails to converge.
EigenSolution diagonalize_symmetric(const DenseMatrix& m,
                                    bool want_vectors = true);

/// Implicit-shift QL directly on the tridiagonal form. O(n^2) without
/// vectors, O(n^3) with.
EigenSolution diagonalize_tridiagonal(const SymmetricTridiagonal& t,
                                      bool want_vectors);

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t);

/// Single eigenvector by inverse iteration at an eigenvalue estimate;
/// returns a unit vector. O(n) per call.
std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t,
                                            double lambda);

/// Flip the vector sign so the entry at `anchor` (or the first entry larger
/// than 1e-300 in magnitude when the anchor vanishes) is positive.
void canonicalize_sign(std::vector<double>& v, std::size_t anchor);

}  // namespace hubbard
