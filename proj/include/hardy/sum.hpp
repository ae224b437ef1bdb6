// Compensated accumulation built on error-free transformations.
#pragma once

#include <cmath>
#include <span>

#include "hardy/dd.hpp"

namespace hardy {

// Neumaier-style running sum with a second-order error term.
class CompensatedSum {
 public:
  void add(double x) {
    double s, e;
    eft::two_sum(sum_, x, s, e);
    sum_ = s;
    comp_ += e;
  }
  // Adds a*b with the rounding error of the product captured.
  void add_product(double a, double b) {
    double p, e;
    eft::two_prod(a, b, p, e);
    add(p);
    comp_ += e;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }
  [[nodiscard]] DD value_dd() const { return DD::from_sum(sum_, comp_); }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

inline double compensated_dot(std::span<const double> a, std::span<const double> b) {
  CompensatedSum s;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) s.add_product(a[i], b[i]);
  return s.value();
}

}  // namespace hardy
