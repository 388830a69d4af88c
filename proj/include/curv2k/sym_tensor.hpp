#pragma once

#include <vector>

namespace curv2k {

/// Symmetric 2-tensor on an n-dimensional inner-product space.
/// Inner product convention on S^2(V): <A,B> = tr(A^T B).
class SymTensor {
 public:
  explicit SymTensor(int n);

  /// g = sum_i e_i (x) e_i, the metric in the fixed orthonormal frame.
  static SymTensor metric(int n);

  /// Validates symmetry of the given row-major n*n entries.
  static SymTensor from_entries(int n, const std::vector<double>& entries,
                                double tol = 1e-12);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return e_[i * n_ + j]; }

  /// Writes both (i,j) and (j,i).
  void set(int i, int j, double v);
  void add(int i, int j, double v);

  double trace() const;
  SymTensor traceless() const;  // A - (tr A / n) g
  double inner(const SymTensor& other) const;
  double norm_sq() const { return inner(*this); }
  double norm() const;
  double max_abs() const;

  SymTensor& operator+=(const SymTensor& other);
  SymTensor& operator-=(const SymTensor& other);
  SymTensor& operator*=(double s);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(double s, SymTensor a) { return a *= s; }

  const std::vector<double>& entries() const { return e_; }

 private:
  int n_;
  std::vector<double> e_;  // n*n row-major
};

}  // namespace curv2k
