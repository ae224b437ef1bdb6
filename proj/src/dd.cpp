#include "hardy/dd.hpp"

#include <cstdio>
#include <stdexcept>

namespace hardy {

DD sqrt(const DD& a) {
  if (a.hi < 0.0) throw std::domain_error("dd sqrt of negative value");
  if (a.hi == 0.0) return DD(0.0);
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  DD ax2 = DD::from_prod(ax, ax);
  double corr = (a - ax2).hi * (x * 0.5);
  return DD::from_sum(ax, corr);
}

namespace {

// Taylor series of exp(r) - 1 for |r| small.
DD expm1_taylor(const DD& r) {
  DD term = r;
  DD sum = r;
  for (int k = 2; k < 40; ++k) {
    term = term * r / static_cast<double>(k);
    sum += term;
    if (std::abs(term.hi) < 1e-36 * std::abs(sum.hi)) break;
  }
  return sum;
}

}  // namespace

DD exp(const DD& a) {
  if (a.hi > 709.0) return DD(std::numeric_limits<double>::infinity());
  if (a.hi < -745.0) return DD(0.0);
  if (a.hi == 0.0 && a.lo == 0.0) return DD(1.0);
  double k = std::nearbyint(a.hi / dd_const::ln2.hi);
  DD r = a - dd_const::ln2 * k;
  // Reduce further by 2^-10 and square back.
  r = r * (1.0 / 1024.0);
  DD s = expm1_taylor(r);
  for (int i = 0; i < 10; ++i) s = s * (s + 2.0);  // (1+s)^2 - 1
  DD e = s + 1.0;
  return {std::ldexp(e.hi, static_cast<int>(k)), std::ldexp(e.lo, static_cast<int>(k))};
}

DD expm1(const DD& a) {
  if (std::abs(a.hi) < 0.5) {
    DD r = a * (1.0 / 1024.0);
    DD s = expm1_taylor(r);
    for (int i = 0; i < 10; ++i) s = s * (s + 2.0);
    return s;
  }
  return exp(a) - 1.0;
}

DD log(const DD& a) {
  if (a.hi <= 0.0) {
    if (a.hi == 0.0) return DD(-std::numeric_limits<double>::infinity());
    throw std::domain_error("dd log of negative value");
  }
  DD x(std::log(a.hi));
  // Two Newton steps on exp(x) = a.
  for (int i = 0; i < 2; ++i) x = x + a * exp(-x) - 1.0;
  return x;
}

DD log1p(const DD& a) {
  if (a.hi <= -1.0) {
    if (a.hi == -1.0 && a.lo == 0.0) return DD(-std::numeric_limits<double>::infinity());
    throw std::domain_error("dd log1p argument below -1");
  }
  if (std::abs(a.hi) < 1e-2) {
    // 2 atanh(s) with s = a/(2+a).
    DD s = a / (a + 2.0);
    DD s2 = s * s;
    DD term = s;
    DD sum = s;
    for (int k = 1; k < 30; ++k) {
      term = term * s2;
      DD t = term / static_cast<double>(2 * k + 1);
      sum += t;
      if (std::abs(t.hi) < 1e-36 * std::abs(sum.hi)) break;
    }
    return sum * 2.0;
  }
  return log(a + 1.0);
}

DD pow(const DD& a, const DD& b) {
  if (a.hi < 0.0) throw std::domain_error("dd pow of negative base");
  if (a.hi == 0.0) {
    if (b.hi == 0.0) return DD(1.0);
    if (b.hi > 0.0) return DD(0.0);
    return DD(std::numeric_limits<double>::infinity());
  }
  if (b.lo == 0.0 && std::abs(b.hi) <= 64.0 && b.hi == std::floor(b.hi)) return powi(a, static_cast<long>(b.hi));
  return exp(b * log(a));
}

DD powi(const DD& a, long n) {
  if (n < 0) return DD(1.0) / powi(a, -n);
  DD result(1.0);
  DD base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string to_string(const DD& a, int digits) {
  // Decimal expansion by repeated extraction; adequate for diagnostics.
  if (a.hi == 0.0) return "0";
  if (!std::isfinite(a.hi)) return std::to_string(a.hi);
  DD x = a;
  std::string sign;
  if (x.hi < 0) {
    sign = "-";
    x = -x;
  }
  int e10 = static_cast<int>(std::floor(std::log10(x.hi)));
  x = x / powi(DD(10.0), e10);
  if (x.hi >= 10.0) {
    x = x / 10.0;
    ++e10;
  } else if (x.hi < 1.0) {
    x = x * 10.0;
    --e10;
  }
  std::string mant;
  for (int i = 0; i < digits; ++i) {
    int d = static_cast<int>(std::floor(x.hi));
    if (d > 9) d = 9;
    if (d < 0) d = 0;
    mant.push_back(static_cast<char>('0' + d));
    x = (x - static_cast<double>(d)) * 10.0;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "e%+d", e10);
  return sign + mant.substr(0, 1) + "." + mant.substr(1) + buf;
}

}  // namespace hardy
