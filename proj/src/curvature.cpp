#include "curv2k/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curv2k {

Tensor4::Tensor4(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * n * n * n, 0.0) {
  if (n < 1) throw std::invalid_argument("Tensor4: dimension must be >= 1");
}

double Tensor4::inner(const Tensor4& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Tensor4: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < e_.size(); ++i) s += e_[i] * other.e_[i];
  return s;
}

double Tensor4::max_abs() const {
  double s = 0.0;
  for (double v : e_) s = std::max(s, std::fabs(v));
  return s;
}

Tensor4& Tensor4::operator+=(const Tensor4& other) {
  if (n_ != other.n_) throw std::invalid_argument("Tensor4: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& other) {
  if (n_ != other.n_) throw std::invalid_argument("Tensor4: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

Tensor4& Tensor4::operator*=(double s) {
  for (double& v : e_) v *= s;
  return *this;
}

SymmetryResiduals curvature_residuals(const Tensor4& t) {
  const int n = t.dim();
  const double scale = t.max_abs();
  SymmetryResiduals r{0.0, 0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = t(i, j, k, l);
          r.pair_antisym = std::max(r.pair_antisym, std::fabs(v + t(j, i, k, l)));
          r.pair_antisym = std::max(r.pair_antisym, std::fabs(v + t(i, j, l, k)));
          r.pair_swap = std::max(r.pair_swap, std::fabs(v - t(k, l, i, j)));
          r.bianchi = std::max(r.bianchi, std::fabs(v + t(j, k, i, l) + t(k, i, j, l)));
        }
  if (scale > 0.0) {
    r.pair_antisym /= scale;
    r.pair_swap /= scale;
    r.bianchi /= scale;
  }
  return r;
}

CurvatureTensor CurvatureTensor::zero(int n) { return CurvatureTensor(Tensor4(n)); }

CurvatureTensor CurvatureTensor::from_tensor(Tensor4 t, double tol) {
  const SymmetryResiduals res = curvature_residuals(t);
  if (res.pair_antisym > tol || res.pair_swap > tol)
    throw std::invalid_argument("CurvatureTensor: pair symmetries violated");
  if (res.bianchi > tol)
    throw std::invalid_argument("CurvatureTensor: first Bianchi identity violated");
  return CurvatureTensor(std::move(t));
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& other) {
  t_ += other.t_;
  return *this;
}

CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& other) {
  t_ -= other.t_;
  return *this;
}

CurvatureTensor& CurvatureTensor::operator*=(double s) {
  t_ *= s;
  return *this;
}

CurvatureTensor kulkarni_nomizu(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("kulkarni_nomizu: dimension mismatch");
  const int n = a.dim();
  Tensor4 r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r.at(i, j, k, l) =
              a(i, k) * b(j, l) + a(j, l) * b(i, k) - a(j, k) * b(i, l) - a(i, l) * b(j, k);
  return CurvatureTensor::trusted(std::move(r));
}

CurvatureTensor bianchi_project(const Tensor4& t, double tol) {
  const SymmetryResiduals res = curvature_residuals(t);
  if (res.pair_antisym > tol || res.pair_swap > tol)
    throw std::invalid_argument("bianchi_project: input lacks the pair symmetries");
  const int n = t.dim();
  Tensor4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out.at(i, j, k, l) =
              t(i, j, k, l) - (t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l)) / 3.0;
  return CurvatureTensor::trusted(std::move(out));
}

SymTensor ricci(const CurvatureTensor& r) {
  const int n = r.dim();
  SymTensor ric(n);
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r(i, j, i, l);
      ric.set(j, l, s);
    }
  return ric;
}

double scalar_curvature(const CurvatureTensor& r) { return ricci(r).trace(); }

double inner_product(const CurvatureTensor& a, const CurvatureTensor& b) {
  return a.tensor().inner(b.tensor());
}

double norm_sq(const CurvatureTensor& r) { return r.tensor().norm_sq(); }

RiemannDecomposition decompose(const CurvatureTensor& r) {
  const int n = r.dim();
  if (n < 3) throw std::invalid_argument("decompose: requires n >= 3");
  const SymTensor ric = ricci(r);
  const double scal = ric.trace();
  const SymTensor g = SymTensor::metric(n);

  CurvatureTensor weyl = r;
  weyl -= (1.0 / (n - 2)) * kulkarni_nomizu(ric, g);
  weyl += (scal / (2.0 * (n - 1) * (n - 2))) * kulkarni_nomizu(g, g);
  return RiemannDecomposition{std::move(weyl), ric, scal, n};
}

CurvatureTensor recompose(const RiemannDecomposition& d) {
  const int n = d.n;
  const SymTensor g = SymTensor::metric(n);
  CurvatureTensor r = d.weyl;
  r += (1.0 / (n - 2)) * kulkarni_nomizu(d.ricci, g);
  r -= (d.scalar / (2.0 * (n - 1) * (n - 2))) * kulkarni_nomizu(g, g);
  return r;
}

Matrix first_kind_matrix(const CurvatureTensor& r) {
  const int n = r.dim();
  const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  Matrix mat(m, m);
  std::size_t row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++row) {
      std::size_t col = 0;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++col) mat(row, col) = r(i, j, k, l);
    }
  return mat;
}

CurvatureTensor rotate_frame(const CurvatureTensor& r, const Matrix& q) {
  const int n = r.dim();
  if (q.rows() != static_cast<std::size_t>(n) || q.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("rotate_frame: matrix shape mismatch");
  // One slot at a time keeps the contraction at O(n^5).
  Tensor4 cur = r.tensor();
  for (int slot = 0; slot < 4; ++slot) {
    Tensor4 next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int a = 0; a < n; ++a) {
              switch (slot) {
                case 0: s += q(a, i) * cur(a, j, k, l); break;
                case 1: s += q(a, j) * cur(i, a, k, l); break;
                case 2: s += q(a, k) * cur(i, j, a, l); break;
                default: s += q(a, l) * cur(i, j, k, a); break;
              }
            }
            next.at(i, j, k, l) = s;
          }
    cur = std::move(next);
  }
  return CurvatureTensor::trusted(std::move(cur));
}

}  // namespace curv2k
