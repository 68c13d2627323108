#include "bax/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "bax/errors.hpp"

namespace bax {

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
  trim();
}

void Polynomial::trim() {
  while (c_.size() > 1 && c_.back() == cplx(0.0)) c_.pop_back();
}

cplx Polynomial::operator()(cplx mu) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * mu + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<cplx> out(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> out = c_;
  for (auto& x : out) x *= s;
  return Polynomial(std::move(out));
}

bool Polynomial::is_zero() const { return c_.size() == 1 && c_[0] == cplx(0.0); }

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -c_[i] / c_[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return r;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
}

cplx RationalFunction::operator()(cplx mu, double pole_tol) const {
  cplx d = den_(mu);
  double scale = 0.0, p = 1.0;
  for (const auto& c : den_.coeffs()) {
    scale += std::abs(c) * p;
    p *= std::abs(mu);
  }
  if (std::abs(d) <= pole_tol * scale) {
    cplx nearest = mu;
    double best = std::numeric_limits<double>::infinity();
    for (cplx r : den_.roots())
      if (std::abs(r - mu) < best) {
        best = std::abs(r - mu);
        nearest = r;
      }
    throw SingularityError("amplitude evaluated at a pole", nearest);
  }
  return num_(mu) / d;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of the zero rational function");
  return {den_, num_};
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

}  // namespace bax
