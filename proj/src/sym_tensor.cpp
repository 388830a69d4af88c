#include "curv2k/sym_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curv2k {

SymTensor::SymTensor(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 1) throw std::invalid_argument("SymTensor: dimension must be >= 1");
}

SymTensor SymTensor::metric(int n) {
  SymTensor g(n);
  for (int i = 0; i < n; ++i) g.set(i, i, 1.0);
  return g;
}

SymTensor SymTensor::from_entries(int n, const std::vector<double>& entries, double tol) {
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("SymTensor: entry count != n*n");
  double scale = 0.0;
  for (double v : entries) scale = std::max(scale, std::fabs(v));
  SymTensor a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double x = entries[i * n + j], y = entries[j * n + i];
      if (std::fabs(x - y) > tol * std::max(1.0, scale))
        throw std::invalid_argument("SymTensor: entries not symmetric");
      a.set(i, j, 0.5 * (x + y));
    }
  return a;
}

void SymTensor::set(int i, int j, double v) {
  e_[i * n_ + j] = v;
  e_[j * n_ + i] = v;
}

void SymTensor::add(int i, int j, double v) {
  e_[i * n_ + j] += v;
  if (i != j) e_[j * n_ + i] += v;
}

double SymTensor::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += e_[i * n_ + i];
  return t;
}

SymTensor SymTensor::traceless() const {
  SymTensor a = *this;
  const double shift = trace() / n_;
  for (int i = 0; i < n_; ++i) a.e_[i * n_ + i] -= shift;
  return a;
}

double SymTensor::inner(const SymTensor& other) const {
  if (n_ != other.n_) throw std::invalid_argument("SymTensor: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < e_.size(); ++i) s += e_[i] * other.e_[i];
  return s;
}

double SymTensor::norm() const { return std::sqrt(norm_sq()); }

double SymTensor::max_abs() const {
  double s = 0.0;
  for (double v : e_) s = std::max(s, std::fabs(v));
  return s;
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
  if (n_ != other.n_) throw std::invalid_argument("SymTensor: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& other) {
  if (n_ != other.n_) throw std::invalid_argument("SymTensor: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(double s) {
  for (double& v : e_) v *= s;
  return *this;
}

}  // namespace curv2k
