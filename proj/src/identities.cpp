#include "curv2k/identities.hpp"

#include <cmath>
#include <stdexcept>

namespace curv2k {

namespace {

IdentityReport make_report(std::string name, double lhs, double rhs, double tol,
                           double scale = 0.0) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::fabs(lhs - rhs);
  rep.tolerance = tol;
  const double denom = std::max(std::fabs(rhs), scale);
  rep.rel_err = denom > 0.0 ? rep.abs_err / denom : 0.0;
  rep.pass = denom != 0.0 ? (rep.rel_err <= tol) : (rep.abs_err <= tol);
  return rep;
}

IdentityReport not_applicable(std::string name, std::string note) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.applicable = false;
  rep.pass = true;  // vacuous; consumers must look at `applicable`
  rep.note = std::move(note);
  return rep;
}

double sum_pow(const Spectrum& sp, int p) {
  double s = 0.0;
  for (double v : sp.eigenvalues) s += p == 2 ? v * v : v * v * v;
  return s;
}

/// Tolerance scale for cubic-degree comparisons: max(|lbar|, lambda_rms)^3.
double cubic_scale(const Spectrum& sp) {
  const double rms = std::sqrt(sum_pow(sp, 2) / std::max<std::size_t>(1, sp.eigenvalues.size()));
  const double base = std::max(std::fabs(sp.mean), rms);
  return base * base * base;
}

void require_einstein(const EinsteinAnalysis& a, const char* who) {
  if (!a.einstein)
    throw std::invalid_argument(std::string(who) + ": input is not Einstein");
}

}  // namespace

bool is_einstein(const CurvatureTensor& r, double tol) {
  const SymTensor ric = ricci(r);
  const double total = ric.norm();
  if (total == 0.0) return true;  // zero Ricci: Einstein with c = 0
  return ric.traceless().norm() <= tol * total;
}

EinsteinAnalysis analyze(const CurvatureTensor& r) {
  EinsteinAnalysis a{r.dim(), decompose(r), second_kind_matrix(r), {}, {}, norm_sq(r), false};
  a.sp = spectrum(a.op);
  a.sjw = sjw_norms(r, a.op);
  const double ric_norm = a.dec.ricci.norm();
  a.einstein = ric_norm == 0.0 || a.dec.ricci.traceless().norm() <= kEinsteinTol * ric_norm;
  return a;
}

IdentityReport check_scal_identity(const EinsteinAnalysis& a, double tol) {
  if (!a.einstein) return not_applicable("scal_identity", "non-Einstein input");
  const double n = a.n;
  return make_report("scal_identity", a.dec.scalar, n * (n - 1) * a.sp.mean, tol);
}

IdentityReport check_norm_identity(const EinsteinAnalysis& a, double tol) {
  if (!a.einstein) return not_applicable("norm_identity", "non-Einstein input");
  const double n = a.n;
  const double rhs = norm_sq(a.dec.weyl) + 2.0 * n * (n - 1) * a.sp.mean * a.sp.mean;
  return make_report("norm_identity", a.norm_sq_r, rhs, tol);
}

IdentityReport check_sum_sq_identity(const EinsteinAnalysis& a, double tol) {
  if (!a.einstein) return not_applicable("sum_sq_identity", "non-Einstein input");
  const double n = a.n;
  const double rhs = 0.75 * a.norm_sq_r - (n - 1.0) * (n - 1.0) * a.sp.mean * a.sp.mean;
  return make_report("sum_sq_identity", sum_pow(a.sp, 2), rhs, tol);
}

IdentityReport check_sjw_sum_identity(const EinsteinAnalysis& a, double tol) {
  if (!a.einstein) return not_applicable("sjw_sum_identity", "non-Einstein input");
  const double n = a.n;
  const double rhs = 2.0 * (n * n + n - 8.0) / n * norm_sq(a.dec.weyl);
  // |W| can vanish (constant curvature); compare against |R|^2 scale then.
  IdentityReport rep = make_report("sjw_sum_identity", a.sjw.sum, rhs, tol, 1e-6 * a.norm_sq_r);
  return rep;
}

double weyl_from_spectrum(const EinsteinAnalysis& a) {
  require_einstein(a, "weyl_from_spectrum");
  const double n = a.n;
  return (4.0 / 3.0) * sum_pow(a.sp, 2) -
         (2.0 / 3.0) * (n - 1.0) * (n + 2.0) * a.sp.mean * a.sp.mean;
}

IdentityReport check_weyl_from_spectrum(const EinsteinAnalysis& a, double tol) {
  if (!a.einstein) return not_applicable("weyl_from_spectrum", "non-Einstein input");
  return make_report("weyl_from_spectrum", weyl_from_spectrum(a), norm_sq(a.dec.weyl), tol,
                     1e-6 * a.norm_sq_r);
}

double dai_fu_rhs(const EinsteinAnalysis& a) {
  require_einstein(a, "dai_fu_rhs");
  const double n = a.n;
  const double lb = a.sp.mean;
  return a.sjw.lambda_weighted_sum +
         8.0 * (n - 1.0) / (3.0 * n) * (-n * n * n + 6.0 * n * n + 12.0 * n - 8.0) * lb * lb * lb +
         8.0 * (2.0 * n * n - 22.0 * n + 8.0) / (3.0 * n) * lb * sum_pow(a.sp, 2) +
         16.0 * sum_pow(a.sp, 3);
}

double f_lambda(const Spectrum& sp, int n, double theta) {
  const int N = s20_dim(n);
  if (sp.eigenvalues.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("f_lambda: spectrum length != (n-1)(n+2)/2");
  const double lb = sp.mean;
  double s2 = 0.0, s3 = 0.0;
  for (double v : sp.eigenvalues) {
    s2 += v * v;
    s3 += v * v * v;
  }
  const double c0 = N * (N - 3.0) * theta - (2.0 * N - 9.0 * n + 6.0) * N;
  const double c2 = (2.0 * N - 12.0 * n + 6.0) - (N - 3.0) * theta;
  return c0 * lb * lb * lb + c2 * lb * s2 + 3.0 * n * s3;
}

IdentityReport check_lemma32_bound(const EinsteinAnalysis& a, double theta, double tol) {
  if (!a.einstein) return not_applicable("lemma32_bound", "non-Einstein input");
  const ConditionCheck cond = lambda1_condition(a.sp, theta);
  if (cond.cls == ConditionClass::flat_like)
    return not_applicable("lemma32_bound", "flat-like spectrum (mean ~ 0)");
  if (a.sp.mean < 0.0) return not_applicable("lemma32_bound", "mean eigenvalue < 0");
  if (cond.cls == ConditionClass::fails)
    return not_applicable("lemma32_bound", "lambda_1 < -theta * mean");

  const double n = a.n;
  const double lb = a.sp.mean;
  const double c = n * n + n - 8.0;
  const double rhs = -8.0 * c / (3.0 * n) * theta * lb * sum_pow(a.sp, 2) +
                     4.0 * c * (n - 1.0) * (n + 2.0) / (3.0 * n) * theta * lb * lb * lb;
  const double lhs = a.sjw.lambda_weighted_sum;
  IdentityReport rep;
  rep.name = "lemma32_bound";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = lhs - rhs;  // slack, signed
  const double scale = std::max(cubic_scale(a.sp), 1e-6 * std::fabs(rhs));
  rep.rel_err = scale > 0.0 ? rep.abs_err / scale : 0.0;
  rep.tolerance = tol;
  rep.pass = lhs - rhs >= -tol * std::max(scale, 1.0);
  rep.note = "inequality; abs_err is the slack";
  return rep;
}

IdentityReport check_dai_fu_chain(const EinsteinAnalysis& a, double theta, double tol) {
  if (!a.einstein) return not_applicable("dai_fu_chain", "non-Einstein input");
  const ConditionCheck cond = lambda1_condition(a.sp, theta);
  if (cond.cls == ConditionClass::flat_like)
    return not_applicable("dai_fu_chain", "flat-like spectrum (mean ~ 0)");
  if (a.sp.mean < 0.0) return not_applicable("dai_fu_chain", "mean eigenvalue < 0");
  if (cond.cls == ConditionClass::fails)
    return not_applicable("dai_fu_chain", "lambda_1 < -theta * mean");

  const double n = a.n;
  const double lhs = dai_fu_rhs(a);
  const double rhs = 16.0 / (3.0 * n) * f_lambda(a.sp, a.n, theta);
  IdentityReport rep;
  rep.name = "dai_fu_chain";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = lhs - rhs;  // slack, signed
  const double scale = std::max(cubic_scale(a.sp), 1.0);
  rep.rel_err = rep.abs_err / scale;
  rep.tolerance = tol;
  rep.pass = lhs - rhs >= -tol * scale;
  rep.note = "inequality; abs_err is the slack";
  return rep;
}

IdentityReport check_scal_identity(const CurvatureTensor& r, double tol) {
  return check_scal_identity(analyze(r), tol);
}
IdentityReport check_norm_identity(const CurvatureTensor& r, double tol) {
  return check_norm_identity(analyze(r), tol);
}
IdentityReport check_sum_sq_identity(const CurvatureTensor& r, double tol) {
  return check_sum_sq_identity(analyze(r), tol);
}
double weyl_from_spectrum(const CurvatureTensor& r) { return weyl_from_spectrum(analyze(r)); }
double dai_fu_rhs(const CurvatureTensor& r) { return dai_fu_rhs(analyze(r)); }

std::vector<IdentityReport> verify_all(const CurvatureTensor& r, double theta, double tol) {
  const EinsteinAnalysis a = analyze(r);
  std::vector<IdentityReport> reports;
  reports.push_back(check_scal_identity(a, tol));
  reports.push_back(check_norm_identity(a, tol));
  reports.push_back(check_sum_sq_identity(a, tol));
  reports.push_back(check_sjw_sum_identity(a, tol));
  reports.push_back(check_weyl_from_spectrum(a, tol));
  reports.push_back(check_lemma32_bound(a, theta, tol));
  reports.push_back(check_dai_fu_chain(a, theta, tol));
  return reports;
}

}  // namespace curv2k
