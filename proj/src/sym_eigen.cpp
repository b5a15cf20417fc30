#include "hubbard/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hubbard {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Implicit-shift QL with Wilkinson shift (EISPACK tql2 lineage).
// d: diagonal (n), e: off-diagonal in e[0..n-2], e[n-1] scratch.
// z: optional row-major n x n matrix whose columns accumulate the
// rotations (pass the identity for tridiagonal input, the Householder
// product for dense input).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, double* z,
                 std::size_t n) {
  if (n == 0) return;
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter == 50)
          throw std::runtime_error(
              "ql_implicit: more than 50 iterations for one eigenvalue");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t ip1 = m; ip1 > l; --ip1) {
          std::size_t i = ip1 - 1;
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            double* zi = z + i;
            for (std::size_t k = 0; k < n; ++k, zi += n) {
              f = zi[1];
              zi[1] = s * zi[0] + c * f;
              zi[0] = c * zi[0] - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Householder reduction to tridiagonal with accumulation of the transform
// (EISPACK tred2 lineage). z holds the symmetric matrix on input and the
// orthogonal matrix on output.
void householder_reduce(double* z, std::size_t n, std::vector<double>& d,
                        std::vector<double>& e) {
  auto zz = [&](std::size_t i, std::size_t j) -> double& {
    return z[i * n + j];
  };

  for (std::size_t i = n - 1; i >= 1; --i) {
    std::size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(zz(i, k));
      if (scale == 0.0) {
        e[i] = zz(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          zz(i, k) /= scale;
          h += zz(i, k) * zz(i, k);
        }
        double f = zz(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        zz(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          zz(j, i) = zz(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += zz(j, k) * zz(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += zz(k, j) * zz(i, k);
          e[j] = g / h;
          f += e[j] * zz(i, j);
        }
        double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = zz(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k)
            zz(j, k) -= f * e[k] + g * zz(i, k);
        }
      }
    } else {
      e[i] = zz(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < i; ++k) g += zz(i, k) * zz(k, j);
        for (std::size_t k = 0; k < i; ++k) zz(k, j) -= g * zz(k, i);
      }
    }
    d[i] = zz(i, i);
    zz(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) zz(j, i) = zz(i, j) = 0.0;
  }
}

EigenSolution assemble(std::vector<double>& d, std::vector<double>* z,
                       std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenSolution out;
  out.n = n;
  out.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.values[j] = d[order[j]];
  if (z) {
    out.vectors.resize(n * n);
    // z is row-major with eigenvector j in column j
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t src = order[j];
      for (std::size_t i = 0; i < n; ++i)
        out.vectors[j * n + i] = (*z)[i * n + src];
    }
  }
  return out;
}

}  // namespace

bool DenseMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i * n + j] != a[j * n + i]) return false;
  return true;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a[i * n + j]);
    best = std::max(best, row);
  }
  return best;
}

EigenSolution diagonalize_symmetric(const DenseMatrix& m, bool want_vectors) {
  if (m.n == 0) return {};
  if (m.a.size() != m.n * m.n)
    throw std::invalid_argument("diagonalize_symmetric: bad storage size");
  if (!m.is_symmetric())
    throw std::invalid_argument("diagonalize_symmetric: non-symmetric input");

  std::size_t n = m.n;
  std::vector<double> z = m.a;
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    d[0] = z[0];
    z[0] = 1.0;
  } else {
    householder_reduce(z.data(), n, d, e);
    // tred2 leaves e[i] coupling (i-1, i); shift to e[i] = coupling (i, i+1)
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
  }
  ql_implicit(d, e, z.data(), n);
  EigenSolution out = assemble(d, &z, n);
  if (!want_vectors) out.vectors.clear();
  return out;
}

EigenSolution diagonalize_tridiagonal(const SymmetricTridiagonal& t,
                                      bool want_vectors) {
  std::size_t n = t.size();
  if (n == 0) return {};
  if (t.off.size() + 1 != n)
    throw std::invalid_argument("diagonalize_tridiagonal: off size mismatch");
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.off.begin(), t.off.end(), e.begin());

  if (want_vectors) {
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    ql_implicit(d, e, z.data(), n);
    return assemble(d, &z, n);
  }
  ql_implicit(d, e, nullptr, n);
  return assemble(d, nullptr, n);
}

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t) {
  return diagonalize_tridiagonal(t, false).values;
}

std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t,
                                            double lambda) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  if (n == 1) return {1.0};

  // LU factorization of (T - lambda I) with partial pivoting; the U factor
  // gains a second superdiagonal where rows are swapped.
  std::vector<double> d1(n), d2(n, 0.0), d3(n, 0.0), mult(n - 1);
  std::vector<char> swapped(n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) d1[i] = t.diag[i] - lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) d2[i] = t.off[i];

  const double tiny = 1e-300;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double sub = t.off[i];
    if (std::abs(d1[i]) >= std::abs(sub)) {
      if (d1[i] == 0.0) d1[i] = tiny;
      double m = sub / d1[i];
      mult[i] = m;
      d1[i + 1] -= m * d2[i];
      // d2[i+1], d3[i] untouched
    } else {
      swapped[i] = 1;
      double m = d1[i] / sub;
      mult[i] = m;
      d1[i] = sub;
      double old_d2 = d2[i];
      d2[i] = d1[i + 1];
      d1[i + 1] = old_d2 - m * d2[i];
      if (i + 2 < n) {
        d3[i] = d2[i + 1];
        d2[i + 1] = -m * d3[i];
      }
    }
  }
  if (d1[n - 1] == 0.0) d1[n - 1] = tiny;

  // deterministic start vector
  std::vector<double> x(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    x[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }

  auto solve = [&](std::vector<double>& rhs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= mult[i] * rhs[i];
    }
    rhs[n - 1] /= d1[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - d2[n - 2] * rhs[n - 1]) / d1[n - 2];
    for (std::size_t ip = n - 2; ip > 0; --ip) {
      std::size_t i = ip - 1;
      rhs[i] = (rhs[i] - d2[i] * rhs[i + 1] - d3[i] * rhs[i + 2]) / d1[i];
    }
  };

  auto normalize = [&](std::vector<double>& v) {
    double norm = std::sqrt(
        std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& vi : v) vi /= norm;
    return norm;
  };

  normalize(x);
  for (int iter = 0; iter < 4; ++iter) {
    solve(x);
    double growth = normalize(x);
    if (iter >= 1 && growth > 1.0 / (kEps * 100.0)) break;
  }
  return x;
}

void canonicalize_sign(std::vector<double>& v, std::size_t anchor) {
  double pivot = anchor < v.size() ? v[anchor] : 0.0;
  if (std::abs(pivot) <= 1e-300) {
    pivot = 0.0;
    for (double vi : v) {
      if (std::abs(vi) > 1e-300) {
        pivot = vi;
        break;
      }
    }
  }
  if (pivot < 0.0)
    for (double& vi : v) vi = -vi;
}

}  // namespace hubbard
