#include "su2_data.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace bax::detail {

namespace {

// Temperley-Lieb recoupling at A^2 = -q (positive loop value); Kauffman-Lins theta and Tet nets.
struct Recoupling {
  explicit Recoupling(int level) : k(level) {
    const double x = std::numbers::pi / (k + 2);
    fact.assign(2 * k + 4, 1.0);
    for (int m = 1; m < static_cast<int>(fact.size()); ++m) {
      double qint = std::sin(m * x) / std::sin(x);
      double kl = (m % 2 == 1) ? qint : -qint;  // (-1)^{m-1} [m]
      fact[m] = fact[m - 1] * kl;
    }
  }

  double f(int m) const { return fact.at(m); }

  double theta(int a, int b, int c) const {
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    double sign = ((m + n + p) % 2 == 0) ? 1.0 : -1.0;
    return sign * f(m + n + p + 1) * f(m) * f(n) * f(p) / (f(m + n) * f(n + p) * f(m + p));
  }

  double tet(int A, int B, int E, int C, int D, int F) const {
    std::array<int, 4> a{(A + D + E) / 2, (B + C + E) / 2, (A + B + F) / 2, (C + D + F) / 2};
    std::array<int, 3> b{(B + D + E + F) / 2, (A + C + E + F) / 2, (A + B + C + D) / 2};
    double inner = 1.0;
    for (int ai : a)
      for (int bj : b) inner *= f(bj - ai);
    double ext = f(A) * f(B) * f(C) * f(D) * f(E) * f(F);
    double sum = 0.0;
    int lo = *std::max_element(a.begin(), a.end());
    int hi = *std::min_element(b.begin(), b.end());
    for (int s = lo; s <= hi; ++s) {
      double den = 1.0;
      for (int ai : a) den *= f(s - ai);
      for (int bj : b) den *= f(bj - s);
      sum += ((s % 2 == 0) ? 1.0 : -1.0) * f(s + 1) / den;
    }
    return inner / ext * sum;
  }

  int k;
  std::vector<double> fact;
};

}  // namespace

bool su2_admissible(int k, int a, int b, int c) {
  return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b && a + b + c <= 2 * k;
}

std::vector<double> su2_dims(int k) {
  const double x = std::numbers::pi / (k + 2);
  std::vector<double> d(k + 1);
  for (int m = 0; m <= k; ++m) d[m] = std::sin((m + 1) * x) / std::sin(x);
  d[0] = 1.0;
  return d;
}

FSymbolTable su2_fsymbols(int k) {
  const int n = k + 1;
  Recoupling rc(k);
  auto d = su2_dims(k);
  FSymbolTable F(n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int t = 0; t < n; ++t) {
            if (!su2_admissible(k, r, a, t) || !su2_admissible(k, s, b, t)) continue;
            for (int tp = 0; tp < n; ++tp) {
              if (!su2_admissible(k, r, s, tp) || !su2_admissible(k, a, b, tp)) continue;
              double th = rc.theta(r, a, t) * rc.theta(s, b, t) * rc.theta(r, s, tp) * rc.theta(a, b, tp);
              double v = rc.tet(r, s, t, b, a, tp) * std::sqrt(d[t] * d[tp]) / std::sqrt(th);
              F.set(r, s, a, b, t, tp, v);
            }
          }
  return F;
}

}  // namespace bax::detail
