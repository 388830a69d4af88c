#include "curv2k/extremum.hpp"

#include "curv2k/rng.hpp"
#include "curv2k/second_kind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace curv2k {

Threshold threshold(int n) {
  if (n < 4) throw std::invalid_argument("threshold: defined for n >= 4");
  const int N = s20_dim(n);
  const Rational num = Rational(3) * (N - 1) * (N + 1 - n);
  const Rational den = Rational(N - 1) * (N - 3) + Rational(3) * n * (N - 2);
  Threshold th;
  th.n = n;
  th.N = N;
  th.theta = num / den - 1;
  th.theta_f = to_double(th.theta);
  return th;
}

Rational f_lambda_exact(const std::vector<Rational>& lambda, int n, const Rational& theta) {
  const int N = s20_dim(n);
  if (lambda.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("f_lambda_exact: length != (n-1)(n+2)/2");
  Rational sum = 0, s2 = 0, s3 = 0;
  for (const Rational& v : lambda) {
    sum += v;
    s2 += v * v;
    s3 += v * v * v;
  }
  const Rational lb = sum / N;
  const Rational c0 = Rational(N) * (N - 3) * theta - Rational(2 * N - 9 * n + 6) * N;
  const Rational c2 = Rational(2 * N - 12 * n + 6) - Rational(N - 3) * theta;
  return c0 * lb * lb * lb + c2 * lb * s2 + Rational(3 * n) * s3;
}

CandidatePoint candidate_lambda_m(int n, const Rational& theta, int m) {
  const int N = s20_dim(n);
  if (m < 0 || m > N - 1)
    throw std::invalid_argument("candidate_lambda_m: m out of range [0, N-1]");
  CandidatePoint cp;
  cp.m = m;
  cp.lambda.assign(m, -theta);
  const Rational top = (Rational(N) + m * theta) / (N - m);
  cp.lambda.insert(cp.lambda.end(), N - m, top);
  cp.f_value = f_lambda_exact(cp.lambda, n, theta);
  return cp;
}

Rational f_lambda_m_closed_form(int n, const Rational& theta, int m) {
  const int N = s20_dim(n);
  if (m < 0 || m > N - 1)
    throw std::invalid_argument("f_lambda_m_closed_form: m out of range [0, N-1]");
  const Rational t = theta + 1;
  const Rational bracket =
      Rational(3) * (N + 1 - n) - (Rational(N - 3) + Rational(3 * n) * (N - 2 * m) / (N - m)) * t;
  return Rational(m) * N * t * t / (N - m) * bracket;
}

Rational c_n_t(int n, const Rational& theta) {
  const int N = s20_dim(n);
  const Rational t = theta + 1;
  const Rational tm1 = t - 1;
  return Rational(N) * (Rational(N - 3) * t - (3 * N - 9 * n + 3)) +
         Rational(3 * n) * N * tm1 * tm1 * (2 * t + 1) +
         (Rational(3) * (N - 4 * n + 1) - Rational(N - 3) * t) *
             (Rational(-2) * N * t * tm1 + Rational(N) * tm1 * tm1);
}

Rational big_f_exact(const std::vector<Rational>& x, int n, const Rational& theta) {
  const int N = s20_dim(n);
  if (x.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("big_f_exact: length != (n-1)(n+2)/2");
  const Rational t = theta + 1;
  const Rational coeff = Rational(3) - Rational(N - 2) / (N - 1);
  Rational s2 = 0, s3 = 0;
  for (const Rational& v : x) {
    s2 += v * v;
    s3 += v * v * v;
  }
  return -coeff * t * s2 + s3;
}

std::optional<LagrangeCandidate> lagrange_candidates(int n, const Rational& theta, int k, int l) {
  const int N = s20_dim(n);
  if (k < 1 || k > N) throw std::invalid_argument("lagrange_candidates: k out of range [1, N]");
  if (l < 0 || 2 * l >= k)
    throw std::invalid_argument("lagrange_candidates: l out of range [0, k/2)");
  const Rational t = theta + 1;
  LagrangeCandidate cand;
  cand.k = k;
  cand.l = l;
  if (l == 0) {
    cand.b = Rational(N) * t / k;
    cand.a = 0;
  } else {
    const Rational big_a = Rational(1) - Rational(N - 2) / (3 * (N - 1));
    const Rational big_b = (Rational(N) - big_a * k) / (k - 2 * l);
    cand.a = (big_a - big_b) * t;
    cand.b = (big_a + big_b) * t;
    if (cand.a < 0 || cand.b < 0) return std::nullopt;
  }
  cand.x.assign(N - k, Rational(0));
  cand.x.insert(cand.x.end(), l, cand.a);
  cand.x.insert(cand.x.end(), k - l, cand.b);
  cand.f_big = big_f_exact(cand.x, n, theta);
  cand.lambda.reserve(N);
  for (const Rational& v : cand.x) cand.lambda.push_back(v - theta);
  return cand;
}

Rational degenerate_split_f(int n, const Rational& theta, int k, const Rational& a) {
  const int N = s20_dim(n);
  if (k < 2 || k > N || k % 2 != 0)
    throw std::invalid_argument("degenerate_split_f: k must be even and in [2, N]");
  const Rational t = theta + 1;
  const Rational b = Rational(2) * N * t / k - a;
  std::vector<Rational> x(N - k, Rational(0));
  x.insert(x.end(), k / 2, a);
  x.insert(x.end(), k / 2, b);
  return big_f_exact(x, n, theta);
}

std::optional<int> admissible_degenerate_k(int n) {
  const int N = s20_dim(n);
  // 1 - (N-2)/(3(N-1)) = N/k  <=>  k = 3N(N-1)/(2N-1).
  const Rational k = Rational(3) * N * (N - 1) / (2 * N - 1);
  if (boost::multiprecision::denominator(k) != 1) return std::nullopt;
  const BigInt ki = boost::multiprecision::numerator(k);
  if (ki < 1 || ki > N) return std::nullopt;
  return ki.convert_to<int>();
}

namespace {

struct FloatCubicCoeffs {
  // f(lambda) with mean pinned at 1: c0 + c2 * s2 + c3 * s3 over
  // s2 = sum lambda^2, s3 = sum lambda^3.
  double c0, c2, c3;
};

FloatCubicCoeffs float_coeffs(int n, double theta) {
  const int N = s20_dim(n);
  return FloatCubicCoeffs{N * (N - 3.0) * theta - (2.0 * N - 9.0 * n + 6.0) * N,
                          (2.0 * N - 12.0 * n + 6.0) - (N - 3.0) * theta, 3.0 * n};
}

double eval_f(const FloatCubicCoeffs& c, double s2, double s3) {
  return c.c0 + c.c2 * s2 + c.c3 * s3;
}

struct Pool {
  // Best `cap` samples by f value, ascending.
  std::size_t cap;
  std::vector<std::pair<double, std::vector<double>>> entries;
  void offer(double f, const std::vector<double>& lambda) {
    if (entries.size() == cap && f >= entries.back().first) return;
    auto pos = std::lower_bound(entries.begin(), entries.end(), f,
                                [](const auto& e, double v) { return e.first < v; });
    entries.insert(pos, {f, lambda});
    if (entries.size() > cap) entries.pop_back();
  }
};

/// Pairwise-transfer descent on x >= 0 with sum x = N t fixed. The restriction
/// of f to a transfer x_i += d, x_j -= d is a quadratic in d (the cubic terms
/// cancel), minimized exactly over the feasible interval.
double refine(std::vector<double>& lambda, int n, double theta, int max_iters) {
  const int N = s20_dim(n);
  const FloatCubicCoeffs c = float_coeffs(n, theta);
  double s2 = 0.0, s3 = 0.0;
  for (double v : lambda) {
    s2 += v * v;
    s3 += v * v * v;
  }
  double f = eval_f(c, s2, s3);
  for (int iter = 0; iter < max_iters; ++iter) {
    double sweep_gain = 0.0;
    for (int i = 0; i < N; ++i) {
      for (int j = i + 1; j < N; ++j) {
        const double li = lambda[i], lj = lambda[j];
        // transfer d from x_j to x_i; feasible d in [-(li+theta), lj+theta]
        const double lo = -(li + theta), hi = lj + theta;
        if (hi <= lo) continue;
        // delta f = A d^2 + B d, A = 2 c2 + 3 c3 (li+lj), B = 2 c2 (li-lj) + 3 c3 (li^2-lj^2)
        const double qa = 2.0 * c.c2 + 3.0 * c.c3 * (li + lj);
        const double qb = 2.0 * c.c2 * (li - lj) + 3.0 * c.c3 * (li * li - lj * lj);
        double best_d = 0.0, best_gain = 0.0;
        auto consider = [&](double d) {
          if (d < lo) d = lo;
          if (d > hi) d = hi;
          const double gain = qa * d * d + qb * d;
          if (gain < best_gain) {
            best_gain = gain;
            best_d = d;
          }
        };
        if (qa > 0.0) consider(-qb / (2.0 * qa));
        consider(lo);
        consider(hi);
        if (best_gain < 0.0 && std::fabs(best_d) > 1e-12) {
          const double ni = li + best_d, nj = lj - best_d;
          s2 += ni * ni + nj * nj - li * li - lj * lj;
          s3 += ni * ni * ni + nj * nj * nj - li * li * li - lj * lj * lj;
          lambda[i] = ni;
          lambda[j] = nj;
          f += best_gain;
          sweep_gain += -best_gain;
        }
      }
    }
    if (sweep_gain < 1e-15 * (1.0 + std::fabs(f))) break;
  }
  // recompute to shed accumulated increment error
  s2 = s3 = 0.0;
  for (double v : lambda) {
    s2 += v * v;
    s3 += v * v * v;
  }
  return eval_f(c, s2, s3);
}

}  // namespace

ExtremumReport brute_force_min(int n, const Rational& theta, long budget, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("brute_force_min: requires n >= 4");
  if (budget < 1) throw std::invalid_argument("brute_force_min: budget must be >= 1");
  const int N = s20_dim(n);
  const double th = to_double(theta);
  const double t = 1.0 + th;
  const FloatCubicCoeffs coeffs = float_coeffs(n, th);

  ExtremumReport report;
  report.n = n;
  report.theta_used = theta;
  report.theta_f = th;
  report.seed = seed;
  report.budget = budget;

  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> best_lambda;
  auto offer_best = [&](double f, const std::vector<double>& lambda) {
    if (f < best_f) {
      best_f = f;
      best_lambda = lambda;
    }
  };

  Pool pool{10, {}};
  std::vector<double> x(N), lambda(N);
  for (long i = 0; i < budget; ++i) {
    CounterRng rng = CounterRng::fork(seed, static_cast<std::uint64_t>(i));
    // Dirichlet(1) == normalized exponentials: uniform over the simplex.
    double sum = 0.0;
    for (int j = 0; j < N; ++j) {
      double u = rng.next_double();
      if (u >= 1.0) u = std::nextafter(1.0, 0.0);
      x[j] = -std::log1p(-u);
      sum += x[j];
    }
    const double scale = N * t / sum;
    double s2 = 0.0, s3 = 0.0;
    for (int j = 0; j < N; ++j) {
      lambda[j] = x[j] * scale - th;
      s2 += lambda[j] * lambda[j];
      s3 += lambda[j] * lambda[j] * lambda[j];
    }
    const double f = eval_f(coeffs, s2, s3);
    offer_best(f, lambda);
    pool.offer(f, lambda);
  }

  // Candidate points lambda^m and their exact f values.
  report.candidates.reserve(N);
  for (int m = 0; m < N; ++m) {
    CandidatePoint cp = candidate_lambda_m(n, theta, m);
    std::vector<double> lf(N);
    for (int j = 0; j < N; ++j) lf[j] = to_double(cp.lambda[j]);
    offer_best(to_double(cp.f_value), lf);
    if (cp.f_value == 0) {
      report.equality_cases.push_back(
          m == 0 ? "lambda^0 (all equal)"
                 : (m == 1 ? "lambda^1 (one entry at -theta)"
                           : "lambda^" + std::to_string(m)));
    }
    report.candidates.push_back(std::move(cp));
  }

  // Coordinate descent from the best sampled points.
  for (auto& entry : pool.entries) {
    std::vector<double> cur = entry.second;
    const double f = refine(cur, n, th, 500);
    offer_best(f, cur);
  }

  report.oracle_min = best_f;
  report.oracle_argmin = std::move(best_lambda);
  report.conclusion = best_f < -1e-9 ? ExtremumReport::Conclusion::counterexample_found
                                     : ExtremumReport::Conclusion::nonneg_min_attained;
  return report;
}

SharpnessWitness sharpness_witness(int n, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("sharpness_witness: eps must be >= 0");
  SharpnessWitness w;
  w.n = n;
  w.theta = threshold(n).theta + eps;
  CandidatePoint cp = candidate_lambda_m(n, w.theta, 1);
  w.lambda = std::move(cp.lambda);
  w.f_value = std::move(cp.f_value);
  w.negative = w.f_value < 0;
  return w;
}

EqualityCase classify_equality(std::vector<double> lambda, int n, double theta) {
  const int N = s20_dim(n);
  if (lambda.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("classify_equality: length != (n-1)(n+2)/2");
  double mean = 0.0, amax = 0.0;
  for (double v : lambda) {
    mean += v;
    amax = std::max(amax, std::fabs(v));
  }
  mean /= N;
  if (mean == 0.0 || std::fabs(mean) <= 1e-12 * amax)
    throw std::invalid_argument("classify_equality: mean eigenvalue is zero");
  for (double& v : lambda) v /= mean;
  std::sort(lambda.begin(), lambda.end());

  constexpr double tol = 1e-8;
  bool interior = true;
  for (double v : lambda) interior = interior && std::fabs(v - 1.0) <= tol;
  if (interior) return EqualityCase::interior_one;

  const double top = (N + theta) / (N - 1.0);
  bool boundary = std::fabs(lambda[0] + theta) <= tol;
  for (int j = 1; j < N; ++j) boundary = boundary && std::fabs(lambda[j] - top) <= tol;
  if (boundary) return EqualityCase::boundary_lambda1;
  return EqualityCase::neither;
}

}  // namespace curv2k
