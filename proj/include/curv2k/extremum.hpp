#pragma once

#include "curv2k/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curv2k {

/// The threshold constant: 3(N-1)(N+1-n)/((N-1)(N-3)+3n(N-2)) - 1,
/// N = (n-1)(n+2)/2. Defined for n >= 4.
struct Threshold {
  int n = 0;
  int N = 0;
  Rational theta;
  double theta_f = 0.0;
};
Threshold threshold(int n);

/// f(lambda) evaluated exactly; lambda must have N = (n-1)(n+2)/2 entries.
Rational f_lambda_exact(const std::vector<Rational>& lambda, int n, const Rational& theta);

/// lambda^m: m entries at -theta, the rest at (N+m theta)/(N-m); mean is
/// exactly 1. 0 <= m <= N-1.
struct CandidatePoint {
  int m = 0;
  std::vector<Rational> lambda;
  Rational f_value;
};
CandidatePoint candidate_lambda_m(int n, const Rational& theta, int m);

/// Closed form f(lambda^m) = (mN t^2/(N-m)) [3(N+1-n) -
/// (N-3 + 3n(N-2m)/(N-m)) t], t = 1 + theta. Cross-validates the direct
/// evaluation.
Rational f_lambda_m_closed_form(int n, const Rational& theta, int m);

/// The constant part of the reduction f(lambda)/lbar^3 = C(n,t) + 3n F(x)
/// in the shifted coordinates x = lambda/lbar + theta, valid at
/// theta = theta(n).
Rational c_n_t(int n, const Rational& theta);

/// F(x) = -(3 - (N-2)/(N-1)) t sum x_j^2 + sum x_j^3, t = 1 + theta.
Rational big_f_exact(const std::vector<Rational>& x, int n, const Rational& theta);

/// Critical point P_{k,l} of F on the stratum with N-k zero coordinates:
/// l entries at a, k-l entries at b, solving a+b = 2(1-(N-2)/(3(N-1)))t and
/// la+(k-l)b = Nt. Returns nullopt when the solution has a < 0 or b < 0
/// (infeasible). Requires 1 <= k <= N and 0 <= l < k/2, except l = 0.
struct LagrangeCandidate {
  int k = 0;
  int l = 0;
  Rational a;  // only meaningful for l >= 1
  Rational b;
  std::vector<Rational> x;
  Rational f_big;                 // F(x)
  std::vector<Rational> lambda;   // x - theta
};
std::optional<LagrangeCandidate> lagrange_candidates(int n, const Rational& theta, int k, int l);

/// F at the l = k/2 split (a, 2Nt/k - a) with N-k zeros; the degenerate
/// family of the Lagrange system when 1-(N-2)/(3(N-1)) = N/k. k even.
Rational degenerate_split_f(int n, const Rational& theta, int k, const Rational& a);

/// The k for which the l = k/2 Lagrange system is solvable, when
/// 3N(N-1)/(2N-1) happens to be an integer <= N; nullopt otherwise.
std::optional<int> admissible_degenerate_k(int n);

struct ExtremumReport {
  int n = 0;
  Rational theta_used;
  double theta_f = 0.0;
  std::vector<CandidatePoint> candidates;  // m = 0..N-1
  double oracle_min = 0.0;
  std::vector<double> oracle_argmin;       // lambda coordinates, mean 1
  enum class Conclusion { nonneg_min_attained, counterexample_found } conclusion =
      Conclusion::nonneg_min_attained;
  std::vector<std::string> equality_cases;  // candidates with f == 0 exactly
  std::uint64_t seed = 0;
  long budget = 0;
};

/// Independent minimization oracle for f over {mean = 1, lambda_j >= -theta}:
/// uniform Dirichlet sampling of x = lambda + theta on the simplex, all
/// candidate points lambda^m, and pairwise-transfer coordinate descent from
/// the best 10 samples. Deterministic for a fixed seed.
ExtremumReport brute_force_min(int n, const Rational& theta, long budget, std::uint64_t seed);

/// lambda^1 at theta(n) + eps; f is strictly negative for eps > 0 and zero
/// at eps = 0 (boundary, not a witness).
struct SharpnessWitness {
  int n = 0;
  Rational theta;  // theta(n) + eps
  std::vector<Rational> lambda;
  Rational f_value;
  bool negative = false;
};
SharpnessWitness sharpness_witness(int n, const Rational& eps);

/// Matches lambda (after normalizing to mean 1 and sorting) against the two
/// equality cases of the constrained minimum, at 1e-8 in sup norm.
enum class EqualityCase { interior_one, boundary_lambda1, neither };
EqualityCase classify_equality(std::vector<double> lambda, int n, double theta);

}  // namespace curv2k
