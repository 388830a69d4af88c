#pragma once

#include "curv2k/curvature.hpp"
#include "curv2k/linalg.hpp"

#include <vector>

namespace curv2k {

/// dim S^2_0(V) = (n-1)(n+2)/2.
int s20_dim(int n);

/// Orthonormal basis of the traceless symmetric 2-tensors under
/// <A,B> = tr(A^T B): the off-diagonal tensors (1/sqrt2) e_i . e_j, i < j
/// in lexicographic order, followed by the diagonal ladder
/// D_k ~ e_1.e_1 + ... + e_k.e_k - k e_{k+1}.e_{k+1}, k = 1..n-1.
struct TracelessBasis {
  int n = 0;
  std::vector<SymTensor> elements;
};
TracelessBasis traceless_basis(int n);  // n >= 2

/// Rbar(phi)_ij = sum_kl R_iklj phi_kl.
SymTensor rbar_apply(const CurvatureTensor& r, const SymTensor& phi);

/// The curvature operator of the second kind as an N x N symmetric matrix
/// over the traceless basis. Projection back to S^2_0 is free because the
/// basis tensors are traceless.
struct SecondKindOperator {
  int n = 0;
  int N = 0;
  Matrix matrix;
  TracelessBasis basis;
};
SecondKindOperator second_kind_matrix(const CurvatureTensor& r);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double mean = 0.0;
};
Spectrum spectrum(const SecondKindOperator& op);

/// Full eigendecomposition (ascending); column j of vectors holds the
/// coordinates of the j-th eigentensor in op.basis.
EigenDecomposition eigen_system(const SecondKindOperator& op);

/// (S T)_{i1..i4} = sum_slot sum_m S_{i_slot m} T_{..m..}.
Tensor4 s_action(const SymTensor& s, const Tensor4& t);

/// Eigenvalue gaps below this make individual |S^j W|^2 basis-dependent.
inline constexpr double kDegenerateGap = 1e-7;

struct SjwNorms {
  std::vector<double> values;        // |S^j W|^2 aligned with ascending eigenvalues
  bool degenerate = false;           // some eigen-gap < kDegenerateGap
  double min_gap = 0.0;
  double sum = 0.0;                  // basis-independent aggregate
  double lambda_weighted_sum = 0.0;  // basis-independent aggregate
};
SjwNorms sjw_norms(const CurvatureTensor& r);
SjwNorms sjw_norms(const CurvatureTensor& r, const SecondKindOperator& op);

/// lambda_1 >= -theta * mean, with the flat-like guard: the ratio is only
/// defined when |mean| > 1e-12 * ||matrix||_F (= sqrt(sum lambda_j^2)).
enum class ConditionClass { flat_like, holds, fails };
struct ConditionCheck {
  ConditionClass cls = ConditionClass::flat_like;
  double ratio = 0.0;   // lambda_1 / mean, when defined
  double margin = 0.0;  // lambda_1 + theta * mean
};
ConditionCheck lambda1_condition(const Spectrum& sp, double theta);

}  // namespace curv2k
