#pragma once

#include "curv2k/linalg.hpp"
#include "curv2k/sym_tensor.hpp"

#include <vector>

namespace curv2k {

/// Dense (0,4) tensor with no symmetry assumptions. Norm convention: the
/// unweighted full contraction sum_{ijkl} S_{ijkl} T_{ijkl}.
class Tensor4 {
 public:
  explicit Tensor4(int n);

  int dim() const { return n_; }
  double operator()(int i, int j, int k, int l) const { return e_[index(i, j, k, l)]; }
  double& at(int i, int j, int k, int l) { return e_[index(i, j, k, l)]; }

  double inner(const Tensor4& other) const;
  double norm_sq() const { return inner(*this); }
  double max_abs() const;

  Tensor4& operator+=(const Tensor4& other);
  Tensor4& operator-=(const Tensor4& other);
  Tensor4& operator*=(double s);
  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }

  const std::vector<double>& entries() const { return e_; }
  std::vector<double>& entries() { return e_; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  std::vector<double> e_;
};

/// Max-abs residuals of the curvature symmetries, normalized by ||t||_inf.
struct SymmetryResiduals {
  double pair_antisym;  // T_ijkl + T_jikl and T_ijkl + T_ijlk
  double pair_swap;     // T_ijkl - T_klij
  double bianchi;       // T_ijkl + T_jkil + T_kijl
};
SymmetryResiduals curvature_residuals(const Tensor4& t);

/// Scale-free membership tolerance for the curvature symmetries.
inline constexpr double kCurvatureTol = 1e-9;

/// Algebraic curvature tensor: pair symmetries plus the first Bianchi
/// identity, enforced at construction.
class CurvatureTensor {
 public:
  static CurvatureTensor zero(int n);

  /// Validates all symmetries and the Bianchi identity at `tol` (max-abs
  /// residual normalized by ||t||_inf); throws std::invalid_argument.
  static CurvatureTensor from_tensor(Tensor4 t, double tol = kCurvatureTol);

  int dim() const { return t_.dim(); }
  double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }
  const Tensor4& tensor() const { return t_; }

  CurvatureTensor& operator+=(const CurvatureTensor& other);
  CurvatureTensor& operator-=(const CurvatureTensor& other);
  CurvatureTensor& operator*=(double s);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(double s, CurvatureTensor a) { return a *= s; }

 private:
  explicit CurvatureTensor(Tensor4 t) : t_(std::move(t)) {}
  /// Symmetry-preserving constructions inside the library skip revalidation.
  static CurvatureTensor trusted(Tensor4 t) { return CurvatureTensor(std::move(t)); }
  friend CurvatureTensor kulkarni_nomizu(const SymTensor&, const SymTensor&);
  friend CurvatureTensor bianchi_project(const Tensor4&, double);
  friend CurvatureTensor rotate_frame(const CurvatureTensor&, const Matrix&);

  Tensor4 t_;
};

/// (A ^ B)_ijkl = A_ik B_jl + A_jl B_ik - A_jk B_il - A_il B_jk.
CurvatureTensor kulkarni_nomizu(const SymTensor& a, const SymTensor& b);

/// Orthogonal projection of S^2(Lambda^2 V) onto the Bianchi subspace:
/// removes the cyclic antisymmetrization b(T)_ijkl = (T_ijkl + T_jkil +
/// T_kijl)/3. Input must already have the pair symmetries (checked at tol).
CurvatureTensor bianchi_project(const Tensor4& t, double tol = kCurvatureTol);

/// Ric(R)_jl = sum_i R_ijil.
SymTensor ricci(const CurvatureTensor& r);
double scalar_curvature(const CurvatureTensor& r);

double inner_product(const CurvatureTensor& a, const CurvatureTensor& b);
double norm_sq(const CurvatureTensor& r);

struct RiemannDecomposition {
  CurvatureTensor weyl;
  SymTensor ricci;
  double scalar;
  int n;
};

/// Irreducible decomposition R = W + Ric^g/(n-2) - Scal g^g/(2(n-1)(n-2)).
/// Requires n >= 3.
RiemannDecomposition decompose(const CurvatureTensor& r);
CurvatureTensor recompose(const RiemannDecomposition& d);

/// Matrix of the induced symmetric operator on 2-forms in the orthonormal
/// basis {e_i ^ e_j}_{i<j} (lexicographic pairs), size n(n-1)/2. This is the
/// first-kind view of R; entries are R_ijkl read off pairwise.
Matrix first_kind_matrix(const CurvatureTensor& r);

/// Transforms all four slots by the orthogonal matrix q (frame change):
/// result_ijkl = sum q_ai q_bj q_ck q_dl R_abcd.
CurvatureTensor rotate_frame(const CurvatureTensor& r, const Matrix& q);

}  // namespace curv2k
