#include "ctsmc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctsmc/errors.hpp"

namespace ctsmc::num {

namespace {

template <typename T>
void solve_impl(Matrix<T> a, std::vector<T> &b) {
  const std::size_t n = a.rows;
  if (n != a.cols || b.size() != n) throw ValidationError("solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) { best = v; piv = r; }
    }
    if (best == 0.0) throw ValidationError("solve: singular matrix");
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    const T inv = T(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = a(r, col) * inv;
      if (f == T(0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    T s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
    b[i] = s / a(i, i);
  }
}

template <typename T>
double norm_1(const Matrix<T> &m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Pade(13) scaling-and-squaring, the classic Higham constants.
template <typename T>
Matrix<T> expm_impl(const Matrix<T> &a) {
  const std::size_t n = a.rows;
  if (n != a.cols) throw ValidationError("expm: matrix not square");
  static const double pade[] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  int squarings = 0;
  double nrm = norm_1(a);
  if (nrm > 5.371920351148152) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / 5.371920351148152))));
  }
  const T scale = T(std::ldexp(1.0, -squarings));
  Matrix<T> as = a;
  for (auto &v : as.a) v *= scale;

  Matrix<T> a2 = matmul(as, as);
  Matrix<T> a4 = matmul(a2, a2);
  Matrix<T> a6 = matmul(a2, a4);

  auto lincomb = [&](double c6, double c4, double c2, double c0) {
    Matrix<T> r(n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      r.a[i] = T(c6) * a6.a[i] + T(c4) * a4.a[i] + T(c2) * a2.a[i];
    for (std::size_t i = 0; i < n; ++i) r(i, i) += T(c0);
    return r;
  };

  Matrix<T> u_inner = lincomb(pade[13], pade[11], pade[9], 0.0);
  Matrix<T> u = matmul(a6, u_inner);
  {
    Matrix<T> low = lincomb(pade[7], pade[5], pade[3], pade[1]);
    for (std::size_t i = 0; i < n * n; ++i) u.a[i] += low.a[i];
  }
  u = matmul(as, u);

  Matrix<T> v_inner = lincomb(pade[12], pade[10], pade[8], 0.0);
  Matrix<T> v = matmul(a6, v_inner);
  {
    Matrix<T> low = lincomb(pade[6], pade[4], pade[2], pade[0]);
    for (std::size_t i = 0; i < n * n; ++i) v.a[i] += low.a[i];
  }

  // Solve (V - U) X = (V + U) column by column.
  Matrix<T> vmu(n, n), vpu(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    vmu.a[i] = v.a[i] - u.a[i];
    vpu.a[i] = v.a[i] + u.a[i];
  }
  Matrix<T> x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = vpu(i, j);
    solve_impl(vmu, col);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
  }
  for (int s = 0; s < squarings; ++s) x = matmul(x, x);
  return x;
}

}  // namespace

void solve_inplace(DMatrix a, std::vector<double> &b) { solve_impl(std::move(a), b); }
void solve_inplace(ZMatrix a, std::vector<std::complex<double>> &b) { solve_impl(std::move(a), b); }

DMatrix expm(const DMatrix &a) { return expm_impl(a); }
ZMatrix expm(const ZMatrix &a) { return expm_impl(a); }

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n != y_.size() || n < 2) throw ValidationError("spline: need >= 2 nodes");
  m_.assign(n, 0.0);
  if (n == 2) return;
  // Tridiagonal system for natural boundary conditions.
  std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
  diag[0] = diag[n - 1] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    sub[i] = hl;
    diag[i] = 2.0 * (hl + hr);
    sup[i] = hr;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = x_.size();
  if (x <= x_.front()) x = x_.front();
  if (x >= x_.back()) x = x_.back();
  std::size_t hi = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
  if (hi == 0) hi = 1;
  if (hi == n) hi = n - 1;
  const std::size_t lo = hi - 1;
  const double h = x_[hi] - x_[lo];
  const double a = (x_[hi] - x) / h;
  const double b = (x - x_[lo]) / h;
  return a * y_[lo] + b * y_[hi] +
         ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * h * h / 6.0;
}

}  // namespace ctsmc::num
