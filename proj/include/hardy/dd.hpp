// Double-double arithmetic: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving roughly 32 significant decimal digits.
#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace hardy {

namespace eft {

// Error-free transformations.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace eft

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  static DD from_sum(double a, double b) {
    DD r;
    eft::two_sum(a, b, r.hi, r.lo);
    return r;
  }
  static DD from_prod(double a, double b) {
    DD r;
    eft::two_prod(a, b, r.hi, r.lo);
    return r;
  }

  [[nodiscard]] double to_double() const { return hi + lo; }
  explicit operator double() const { return hi + lo; }
};

inline DD operator-(const DD& a) { return {-a.hi, -a.lo}; }

inline DD operator+(const DD& a, const DD& b) {
  double s, e, t, f;
  eft::two_sum(a.hi, b.hi, s, e);
  eft::two_sum(a.lo, b.lo, t, f);
  e += t;
  eft::quick_two_sum(s, e, s, e);
  e += f;
  DD r;
  eft::quick_two_sum(s, e, r.hi, r.lo);
  return r;
}

inline DD operator+(const DD& a, double b) {
  double s, e;
  eft::two_sum(a.hi, b, s, e);
  e += a.lo;
  DD r;
  eft::quick_two_sum(s, e, r.hi, r.lo);
  return r;
}
inline DD operator+(double a, const DD& b) { return b + a; }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }
inline DD operator-(const DD& a, double b) { return a + (-b); }
inline DD operator-(double a, const DD& b) { return (-b) + a; }

inline DD operator*(const DD& a, const DD& b) {
  double p, e;
  eft::two_prod(a.hi, b.hi, p, e);
  e += a.hi * b.lo + a.lo * b.hi;
  DD r;
  eft::quick_two_sum(p, e, r.hi, r.lo);
  return r;
}

inline DD operator*(const DD& a, double b) {
  double p, e;
  eft::two_prod(a.hi, b, p, e);
  e += a.lo * b;
  DD r;
  eft::quick_two_sum(p, e, r.hi, r.lo);
  return r;
}
inline DD operator*(double a, const DD& b) { return b * a; }

inline DD operator/(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  DD q;
  eft::quick_two_sum(q1, q2, q.hi, q.lo);
  return q + q3;
}
inline DD operator/(const DD& a, double b) { return a / DD(b); }
inline DD operator/(double a, const DD& b) { return DD(a) / b; }

inline DD& operator+=(DD& a, const DD& b) { return a = a + b; }
inline DD& operator-=(DD& a, const DD& b) { return a = a - b; }
inline DD& operator*=(DD& a, const DD& b) { return a = a * b; }
inline DD& operator/=(DD& a, const DD& b) { return a = a / b; }

inline bool operator<(const DD& a, const DD& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(const DD& a, const DD& b) { return b < a; }
inline bool operator<=(const DD& a, const DD& b) { return !(b < a); }
inline bool operator>=(const DD& a, const DD& b) { return !(a < b); }
inline bool operator==(const DD& a, const DD& b) { return a.hi == b.hi && a.lo == b.lo; }

inline DD abs(const DD& a) { return a.hi < 0.0 ? -a : a; }
inline DD sqr(const DD& a) { return a * a; }

DD sqrt(const DD& a);
DD exp(const DD& a);
DD expm1(const DD& a);
DD log(const DD& a);
DD log1p(const DD& a);
// a^b for a >= 0; 0^b is 0 for b > 0 and 1 for b == 0.
DD pow(const DD& a, const DD& b);
DD powi(const DD& a, long n);

namespace dd_const {
inline const DD ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline const DD pi{3.141592653589793116e+00, 1.224646799147353207e-16};
}  // namespace dd_const

std::string to_string(const DD& a, int digits = 32);

}  // namespace hardy
