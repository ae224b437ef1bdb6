// Independent reference values for the tests. Everything here is computed with
// Boost.Multiprecision (50 decimal digits) or exact big rationals and shares no
// code with the library.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using BigInt = boost::multiprecision::cpp_int;
using Q = boost::rational<BigInt>;

inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(const Q& q) {
  return (Real(q.numerator()) / Real(q.denominator())).convert_to<double>();
}
inline Q q(std::int64_t n, std::int64_t d = 1) { return Q(BigInt(n), BigInt(d)); }

// Generalized binomial coefficient binom(a, k) for rational a.
inline Q binom(const Q& a, int k) {
  Q r = q(1);
  for (int i = 0; i < k; ++i) r = r * (a - q(i)) / q(i + 1);
  return r;
}

inline Real binom(const Real& a, int k) {
  Real r = 1;
  for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
  return r;
}

// ---- first-order weights on the N path -------------------------------------------
// Edge (n-1, n) carries V(n); the weight is [V_n(f_n - f_{n-1}) + V_{n+1}(f_n - f_{n+1})] / f_n.
using RealFn = std::function<Real(std::int64_t)>;

inline Real path_weight(const RealFn& V, const RealFn& f, std::int64_t n) {
  const Real fn = f(n);
  return (V(n) * (fn - f(n - 1)) + V(n + 1) * (fn - f(n + 1))) / fn;
}

inline Real kpp(std::int64_t n) {
  return path_weight([](std::int64_t) { return Real(1); },
                     [](std::int64_t k) { return boost::multiprecision::sqrt(Real(k)); }, n);
}

inline Real shifted_hardy(double alpha, std::int64_t n) {
  const Real a(alpha);
  return path_weight([a](std::int64_t k) { return boost::multiprecision::pow(Real(k - 1), a); },
                     [a](std::int64_t k) { return boost::multiprecision::pow(Real(k), (1 - a) / 2); }, n);
}

inline Real direct_hardy(double alpha, std::int64_t n) {
  const Real a(alpha);
  const std::int64_t s = alpha > 1.0 ? 1 : 0;
  return path_weight(
      [a](std::int64_t k) { return k == 0 ? Real(0) : boost::multiprecision::pow(Real(k), a); },
      [a, s](std::int64_t k) {
        if (k == 0 && s == 1) return Real(0);  // f_0 = 0 for the shifted profile
        if (k + s == 0) return Real(a == 1 ? 1 : 0);
        return boost::multiprecision::pow(Real(k + s), (1 - a) / 2);
      },
      n);
}

inline Real leray(std::int64_t n, double eps) {
  return path_weight([](std::int64_t k) { return Real(k); },
                     [eps](std::int64_t k) {
                       return k == 1 ? Real(eps) : boost::multiprecision::sqrt(boost::multiprecision::log(Real(k)));
                     },
                     n);
}

// Δ²(n^{3/2}) / n^{3/2} with the n = 0 value equal to 0.
inline Real gks(std::int64_t n) {
  auto g = [](std::int64_t k) { return boost::multiprecision::pow(Real(k), Real(3) / 2); };
  return (g(n + 2) - 4 * g(n + 1) + 6 * g(n) - 4 * g(n - 1) + (n >= 2 ? g(n - 2) : Real(0))) / g(n);
}

// ---- exact series coefficients -----------------------------------------------------

// n^{-2k} coefficient of Δ√n/√n = 2 - (1 - x)^{1/2} - (1 + x)^{1/2}, x = 1/n.
inline Q kpp_coefficient(int k) { return q(-2) * binom(q(1, 2), 2 * k); }

// x^j coefficient of Δ²(n^{3/2})/n^{3/2} = Σ_j c_j (1 + jx)^{3/2}.
inline Q gks_series_coefficient(int j) {
  static const int c[5] = {1, -4, 6, -4, 1};
  Q s = q(0);
  for (int m = -2; m <= 2; ++m) {
    BigInt p = 1;
    for (int i = 0; i < j; ++i) p *= m;
    s += q(c[m + 2]) * Q(p);
  }
  return binom(q(3, 2), j) * s;
}

// x^k coefficient of H_α(x) = (1-x)^α - (1-x)^{(1+α)/2} + 1 - (1+x)^{(1-α)/2}.
inline Q H_coefficient(const Q& alpha, int k) {
  const Q sign = (k % 2) ? q(-1) : q(1);
  Q r = sign * (binom(alpha, k) - binom((q(1) + alpha) / q(2), k)) - binom((q(1) - alpha) / q(2), k);
  if (k == 0) r += q(1);
  return r;
}

inline Real H(const Real& alpha, const Real& x) {
  using boost::multiprecision::pow;
  return pow(1 - x, alpha) - pow(1 - x, (1 + alpha) / 2) + 1 - pow(1 + x, (1 - alpha) / 2);
}

// Even correction of the improved second-order weight, coefficient of n^{-(2k+2)}, k >= 2.
inline Q improved_tail_coefficient(int k) {
  BigInt c = 1;  // C(4k, 2k)
  for (int i = 1; i <= 2 * k; ++i) c = c * (2 * k + i) / i;
  BigInt p16 = 1;
  for (int i = 0; i < k; ++i) p16 *= 16;
  return Q(c, p16) * q((2 * k + 1) * (2 * k + 1), 2 * (4 * k - 1));
}

// Improved second-order weight n^{-2}H_{-2}(1/n)/4 plus its even correction.
inline Real improved_rellich2(std::int64_t n) {
  const Real x = Real(1) / n;
  Real s = x * x * H(Real(-2), x) / 4;
  Real xp = x * x * x * x * x * x;  // x^{2k+2} at k = 2
  for (int k = 2; k < 200; ++k) {
    const Q c = improved_tail_coefficient(k);
    const Real t = Real(c.numerator()) / Real(c.denominator()) * xp;
    s += t;
    if (t < s * Real(1e-45)) break;
    xp *= x * x;
  }
  return s;
}

// ---- higher-order quantities ---------------------------------------------------------

// [(2ℓ)! / (4^ℓ ℓ!)]² as an exact rational.
inline Q sharp_constant(int ell) {
  BigInt num = 1, den = 1;
  for (int i = ell + 1; i <= 2 * ell; ++i) num *= i;
  for (int i = 0; i < ell; ++i) den *= 4;
  return Q(num * num, den * den);
}

// (Δ^{ℓ/2} u)_n by explicit binomial stencils on a dense vector u[0..], zero outside.
inline Real half_laplace_at(const std::vector<Real>& u, int ell, std::int64_t n) {
  auto at = [&](std::int64_t k) { return (k >= 0 && k < static_cast<std::int64_t>(u.size())) ? u[k] : Real(0); };
  // Δ^m has stencil (-1)^{j} C(2m, m+j) at offset j; ∇ adds (1, -1).
  const int m = ell / 2;
  std::vector<Real> st(2 * m + 1);
  for (int j = -m; j <= m; ++j) {
    BigInt c = 1;
    for (int i = 1; i <= m + j; ++i) c = c * (2 * m - i + 1) / i;
    st[j + m] = ((j % 2) ? -1 : 1) * Real(c);
  }
  auto lap = [&](std::int64_t k) {
    Real s = 0;
    for (int j = -m; j <= m; ++j) s += st[j + m] * at(k + j);
    return s;
  };
  return (ell % 2) ? lap(n) - lap(n - 1) : lap(n);
}

}  // namespace oracle
