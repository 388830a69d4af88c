#include "curv2k/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace curv2k {

Matrix Matrix::identity(std::size_t m) {
  Matrix id(m, m);
  for (std::size_t i = 0; i < m; ++i) id(i, i) = 1.0;
  return id;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : e_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0.0;
  for (double v : e_) s = std::max(s, std::fabs(v));
  return s;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : e_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

double off_diagonal_mass(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& m, int max_sweeps) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
  const std::size_t size = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(size);

  const double scale = a.frobenius_norm();
  const double target = 1e-14 * scale;

  int sweep = 0;
  if (scale > 0.0) {
    for (; sweep < max_sweeps; ++sweep) {
      if (off_diagonal_mass(a) <= target) break;
      for (std::size_t p = 0; p + 1 < size; ++p) {
        for (std::size_t q = p + 1; q < size; ++q) {
          const double apq = a(p, q);
          if (std::fabs(apq) <= 1e-300) continue;
          const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          // A <- J^T A J with the rotation acting on rows/cols p, q.
          for (std::size_t k = 0; k < size; ++k) {
            const double akp = a(k, p), akq = a(k, q);
            a(k, p) = c * akp - s * akq;
            a(k, q) = s * akp + c * akq;
          }
          for (std::size_t k = 0; k < size; ++k) {
            const double apk = a(p, k), aqk = a(q, k);
            a(p, k) = c * apk - s * aqk;
            a(q, k) = s * apk + c * aqk;
          }
          for (std::size_t k = 0; k < size; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    if (off_diagonal_mass(a) > target)
      throw std::runtime_error("jacobi_eigen: no convergence within sweep cap");
  }

  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition dec;
  dec.values.resize(size);
  dec.vectors = Matrix(size, size);
  dec.sweeps = sweep;
  for (std::size_t j = 0; j < size; ++j) {
    dec.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < size; ++i) dec.vectors(i, j) = v(i, order[j]);
  }
  return dec;
}

}  // namespace curv2k
