#pragma once

#include "curv2k/second_kind.hpp"

#include <string>
#include <vector>

namespace curv2k {

inline constexpr double kIdentityTol = 1e-9;
/// Einstein-ness threshold: ||Ric_0|| / ||Ric||.
inline constexpr double kEinsteinTol = 1e-9;

struct IdentityReport {
  std::string name;
  bool applicable = true;  // false: the identity's hypothesis does not hold
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

bool is_einstein(const CurvatureTensor& r, double tol = kEinsteinTol);

/// Shared precomputation: decomposition, second-kind matrix, spectrum and
/// the eigentensor norms, built once per tensor.
struct EinsteinAnalysis {
  int n = 0;
  RiemannDecomposition dec;
  SecondKindOperator op;
  Spectrum sp;
  SjwNorms sjw;
  double norm_sq_r = 0.0;
  bool einstein = false;
};
EinsteinAnalysis analyze(const CurvatureTensor& r);

/// Scal == n(n-1) * mean eigenvalue (Einstein only).
IdentityReport check_scal_identity(const EinsteinAnalysis& a, double tol = kIdentityTol);
IdentityReport check_scal_identity(const CurvatureTensor& r, double tol = kIdentityTol);

/// |R|^2 == |W|^2 + 2n(n-1) lbar^2 (Einstein only).
IdentityReport check_norm_identity(const EinsteinAnalysis& a, double tol = kIdentityTol);
IdentityReport check_norm_identity(const CurvatureTensor& r, double tol = kIdentityTol);

/// sum lambda_j^2 == (3/4)|R|^2 - (n-1)^2 lbar^2 (Einstein only).
IdentityReport check_sum_sq_identity(const EinsteinAnalysis& a, double tol = kIdentityTol);
IdentityReport check_sum_sq_identity(const CurvatureTensor& r, double tol = kIdentityTol);

/// sum_j |S^j W|^2 == 2(n^2+n-8)/n * |W|^2 (Einstein only).
IdentityReport check_sjw_sum_identity(const EinsteinAnalysis& a, double tol = kIdentityTol);

/// |W|^2 recovered from the spectrum: (4/3) sum lambda_j^2
/// - (2/3)(n-1)(n+2) lbar^2. Throws std::invalid_argument on non-Einstein.
double weyl_from_spectrum(const EinsteinAnalysis& a);
double weyl_from_spectrum(const CurvatureTensor& r);
IdentityReport check_weyl_from_spectrum(const EinsteinAnalysis& a, double tol = kIdentityTol);

/// The algebraic scalar that equals 3<Delta R, R> on an Einstein manifold:
/// sum_j lambda_j |S^j W|^2 + (8(n-1)/3n)(-n^3+6n^2+12n-8) lbar^3
/// + (8(2n^2-22n+8)/3n) lbar sum lambda_j^2 + 16 sum lambda_j^3.
/// Throws std::invalid_argument on non-Einstein.
double dai_fu_rhs(const EinsteinAnalysis& a);
double dai_fu_rhs(const CurvatureTensor& r);

/// f(lambda) = [N(N-3)theta - (2N-9n+6)N] lbar^3
/// + [(2N-12n+6) - (N-3)theta] lbar sum lambda_j^2 + 3n sum lambda_j^3.
double f_lambda(const Spectrum& sp, int n, double theta);

/// sum_j lambda_j |S^j W|^2 >= -(8(n^2+n-8)/3n) theta lbar sum lambda_j^2
/// + (4(n^2+n-8)(n-1)(n+2)/3n) theta lbar^3, under lambda_1 >= -theta lbar
/// and lbar > 0; not-applicable otherwise.
IdentityReport check_lemma32_bound(const EinsteinAnalysis& a, double theta,
                                   double tol = kIdentityTol);

/// dai_fu_rhs >= (16/3n) f(lambda) under the same hypothesis.
IdentityReport check_dai_fu_chain(const EinsteinAnalysis& a, double theta,
                                  double tol = kIdentityTol);

/// Every check above that applies to the tensor, in a fixed order.
std::vector<IdentityReport> verify_all(const CurvatureTensor& r, double theta,
                                       double tol = kIdentityTol);

}  // namespace curv2k
