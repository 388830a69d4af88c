#pragma once

#include <cstddef>
#include <vector>

namespace curv2k {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  const std::vector<double>& entries() const { return e_; }

  double frobenius_norm() const;
  double max_abs() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> e_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Converges when the
/// off-diagonal Frobenius mass drops below 1e-14 * ||M||_F; throws
/// std::runtime_error if that has not happened after max_sweeps sweeps.
EigenDecomposition jacobi_eigen(const Matrix& m, int max_sweeps = 64);

}  // namespace curv2k
