#pragma once

#include <complex>
#include <vector>

namespace bax {

using cplx = std::complex<double>;

// Coefficients in ascending powers of mu.
class Polynomial {
 public:
  Polynomial() : c_{cplx(0.0)} {}
  Polynomial(std::vector<cplx> coeffs);
  static Polynomial constant(cplx v) { return Polynomial({v}); }

  const std::vector<cplx>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx operator()(cplx mu) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;
  bool is_zero() const;
  std::vector<cplx> roots() const;  // companion-matrix eigenvalues

 private:
  void trim();
  std::vector<cplx> c_;
};

class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::constant(1.0)), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction one() { return {}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  // throws SingularityError when |den(mu)| is below pole_tol relative to the scale
  cplx operator()(cplx mu, double pole_tol = 1e-14) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction inverse() const;
  std::vector<cplx> poles() const { return den_.roots(); }
  int degree() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace bax
