#include "curv2k/second_kind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace curv2k {

int s20_dim(int n) { return (n - 1) * (n + 2) / 2; }

TracelessBasis traceless_basis(int n) {
  if (n < 2) throw std::invalid_argument("traceless_basis: requires n >= 2");
  TracelessBasis basis;
  basis.n = n;
  basis.elements.reserve(s20_dim(n));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SymTensor e(n);
      e.set(i, j, inv_sqrt2);
      basis.elements.push_back(std::move(e));
    }
  for (int k = 1; k < n; ++k) {
    SymTensor d(n);
    const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) d.set(i, i, 1.0 / norm);
    d.set(k, k, -static_cast<double>(k) / norm);
    basis.elements.push_back(std::move(d));
  }
  return basis;
}

SymTensor rbar_apply(const CurvatureTensor& r, const SymTensor& phi) {
  const int n = r.dim();
  if (phi.dim() != n) throw std::invalid_argument("rbar_apply: dimension mismatch");
  SymTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += r(i, k, l, j) * phi(k, l);
      out.set(i, j, s);
    }
  return out;
}

SecondKindOperator second_kind_matrix(const CurvatureTensor& r) {
  SecondKindOperator op;
  op.n = r.dim();
  op.N = s20_dim(op.n);
  op.basis = traceless_basis(op.n);
  op.matrix = Matrix(op.N, op.N);

  std::vector<SymTensor> images;
  images.reserve(op.N);
  for (const SymTensor& b : op.basis.elements) images.push_back(rbar_apply(r, b));

  // Rbar is self-adjoint; fill the upper triangle and mirror to keep the
  // stored matrix exactly symmetric.
  for (int a = 0; a < op.N; ++a)
    for (int b = a; b < op.N; ++b) {
      const double v = images[a].inner(op.basis.elements[b]);
      op.matrix(a, b) = v;
      op.matrix(b, a) = v;
    }
  return op;
}

Spectrum spectrum(const SecondKindOperator& op) {
  const EigenDecomposition dec = jacobi_eigen(op.matrix);
  Spectrum sp;
  sp.eigenvalues = dec.values;
  double sum = 0.0;
  for (double v : sp.eigenvalues) sum += v;
  sp.mean = sum / static_cast<double>(op.N);
  return sp;
}

EigenDecomposition eigen_system(const SecondKindOperator& op) { return jacobi_eigen(op.matrix); }

Tensor4 s_action(const SymTensor& s, const Tensor4& t) {
  const int n = t.dim();
  if (s.dim() != n) throw std::invalid_argument("s_action: dimension mismatch");
  Tensor4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m)
            acc += s(i, m) * t(m, j, k, l) + s(j, m) * t(i, m, k, l) +
                   s(k, m) * t(i, j, m, l) + s(l, m) * t(i, j, k, m);
          out.at(i, j, k, l) = acc;
        }
  return out;
}

SjwNorms sjw_norms(const CurvatureTensor& r) {
  return sjw_norms(r, second_kind_matrix(r));
}

SjwNorms sjw_norms(const CurvatureTensor& r, const SecondKindOperator& op) {
  const EigenDecomposition dec = eigen_system(op);
  const CurvatureTensor weyl = decompose(r).weyl;
  const int n = op.n;

  SjwNorms out;
  out.values.resize(op.N);
  out.min_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < op.N; ++j)
    out.min_gap = std::min(out.min_gap, dec.values[j + 1] - dec.values[j]);
  if (op.N < 2) out.min_gap = 0.0;
  out.degenerate = out.min_gap < kDegenerateGap;

  for (int j = 0; j < op.N; ++j) {
    SymTensor eigentensor(n);
    for (int a = 0; a < op.N; ++a) {
      const double c = dec.vectors(a, j);
      if (c == 0.0) continue;
      SymTensor term = op.basis.elements[a];
      term *= c;
      eigentensor += term;
    }
    const double v = s_action(eigentensor, weyl.tensor()).norm_sq();
    out.values[j] = v;
    out.sum += v;
    out.lambda_weighted_sum += dec.values[j] * v;
  }
  return out;
}

ConditionCheck lambda1_condition(const Spectrum& sp, double theta) {
  ConditionCheck check;
  double sum_sq = 0.0;
  for (double v : sp.eigenvalues) sum_sq += v * v;
  const double scale = std::sqrt(sum_sq);  // == ||matrix||_F for symmetric input
  if (std::fabs(sp.mean) <= 1e-12 * scale || sp.eigenvalues.empty()) {
    check.cls = ConditionClass::flat_like;
    return check;
  }
  const double lambda1 = sp.eigenvalues.front();
  check.ratio = lambda1 / sp.mean;
  check.margin = lambda1 + theta * sp.mean;
  check.cls = check.margin >= 0.0 ? ConditionClass::holds : ConditionClass::fails;
  return check;
}

}  // namespace curv2k
