#ifndef CTSMC_NUMERICS_HPP
#define CTSMC_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace ctsmc::num {

// Dense row-major matrix, just big enough for the small systems
// (state spaces and augmented kernel systems) used in this library.
template <typename T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T(0)) : rows(r), cols(c), a(r * c, fill) {}

  T &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using DMatrix = Matrix<double>;
using ZMatrix = Matrix<std::complex<double>>;

// y = A x
template <typename T>
std::vector<T> matvec(const Matrix<T> &m, const std::vector<T> &x) {
  std::vector<T> y(m.rows, T(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    T s(0);
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

template <typename T>
Matrix<T> matmul(const Matrix<T> &a, const Matrix<T> &b) {
  Matrix<T> c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// Solves A x = b in place by partially pivoted Gaussian elimination.
// Throws on (numerically) singular A.
void solve_inplace(DMatrix a, std::vector<double> &b);
void solve_inplace(ZMatrix a, std::vector<std::complex<double>> &b);

// exp(A) by scaling-and-squaring with a diagonal Pade approximant.
DMatrix expm(const DMatrix &a);
ZMatrix expm(const ZMatrix &a);

// Natural cubic spline through (x_i, y_i), strictly increasing x.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
};

inline double log_sum_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

}  // namespace ctsmc::num

#endif
