// Cancellation-safe kernels shared by the weight and scalar modules. Written
// once for double and DD via argument-dependent lookup.
#pragma once

#include <cmath>
#include <vector>

#include "hardy/dd.hpp"

namespace hardy::detail {

using std::exp;
using std::expm1;
using std::log1p;
using std::pow;

// H_α(x) = 1 + (1-x)^α - (1-x)^{(1+α)/2} - (1+x)^{(1-α)/2}, for |x| < 1.
template <class T>
T H_kernel(double alpha, const T& x) {
  const T b = log1p(-x) * ((1.0 + alpha) / 2.0);
  const T c = log1p(x) * ((1.0 - alpha) / 2.0);
  return expm1(b) * expm1(c) + exp(b + c) * expm1(log1p(-(x * x)) * ((alpha - 1.0) / 2.0));
}

// F_α(1+t) = 1 + x^α - x^{(α-1)/2} - x^{(3α-1)/2}(2x-1)^{(1-α)/2}, x = 1+t, t >= 0.
template <class T>
T F_kernel(double alpha, const T& t) {
  const T l = log1p(t);
  const T B = l * ((alpha - 1.0) / 2.0);
  const T C = l * ((alpha + 1.0) / 2.0);
  return expm1(B) * expm1(C) - exp(C) * expm1(log1p(t * t / (1.0 + 2.0 * t)) * ((alpha - 1.0) / 2.0));
}

// Generalized binomial coefficients binom(a, k) for k = 0..K.
inline std::vector<double> binomials(double a, int K) {
  std::vector<double> c(static_cast<std::size_t>(K) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= K; ++k) c[k] = c[k - 1] * (a - (k - 1)) / k;
  return c;
}

}  // namespace hardy::detail
