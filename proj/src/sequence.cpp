#include "hardy/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardy/sum.hpp"

namespace hardy {

FiniteSequence::FiniteSequence(Index offset, std::vector<double> values)
    : offset_(offset), values_(std::move(values)) {
  canonicalize();
}

FiniteSequence FiniteSequence::delta(Index n, double value) { return FiniteSequence(n, {value}); }

void FiniteSequence::canonicalize() {
  auto first = std::find_if(values_.begin(), values_.end(), [](double x) { return x != 0.0; });
  if (first == values_.end()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  auto last = std::find_if(values_.rbegin(), values_.rend(), [](double x) { return x != 0.0; });
  const auto lead = first - values_.begin();
  const auto keep = (values_.rend() - last) - lead;
  offset_ += lead;
  values_ = std::vector<double>(first, first + keep);
}

double FiniteSequence::at(Index n) const {
  if (n < offset_ || n >= end()) return 0.0;
  return values_[static_cast<std::size_t>(n - offset_)];
}

BoundaryOrder::BoundaryOrder(int l) : ell(l) {
  if (l < 1) throw std::invalid_argument("boundary order ell must be >= 1");
}

FiniteSequence grad(const FiniteSequence& u) {
  if (u.is_zero()) return {};
  std::vector<double> r(u.size() + 1);
  for (Index n = u.first_index(); n <= u.end(); ++n) r[n - u.first_index()] = u.at(n) - u.at(n - 1);
  return {u.first_index(), std::move(r)};
}

FiniteSequence divergence(const FiniteSequence& u) {
  if (u.is_zero()) return {};
  const Index start = u.first_index() - 1;
  std::vector<double> r(u.size() + 1);
  for (Index n = start; n <= u.last_index(); ++n) r[n - start] = u.at(n + 1) - u.at(n);
  return {start, std::move(r)};
}

FiniteSequence shift(const FiniteSequence& u, Index k) {
  if (u.is_zero()) return {};
  return {u.first_index() - k, u.values()};
}

FiniteSequence laplace(const FiniteSequence& u) {
  if (u.is_zero()) return {};
  const Index start = u.first_index() - 1;
  std::vector<double> r(u.size() + 2);
  for (Index n = start; n <= u.end(); ++n) r[n - start] = 2.0 * u.at(n) - u.at(n + 1) - u.at(n - 1);
  return {start, std::move(r)};
}

FiniteSequence laplace_power(const FiniteSequence& u, int m) {
  if (m < 0) throw std::invalid_argument("laplace_power: negative exponent");
  FiniteSequence r = u;
  for (int i = 0; i < m; ++i) r = laplace(r);
  return r;
}

FiniteSequence half_laplace_power(const FiniteSequence& u, BoundaryOrder ell) {
  FiniteSequence r = laplace_power(u, ell.ell / 2);
  if (ell.ell % 2 == 1) r = grad(r);
  return r;
}

FiniteSequence add(const FiniteSequence& a, const FiniteSequence& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Index lo = std::min(a.first_index(), b.first_index());
  const Index hi = std::max(a.last_index(), b.last_index());
  std::vector<double> r(static_cast<std::size_t>(hi - lo + 1));
  for (Index n = lo; n <= hi; ++n) r[n - lo] = a.at(n) + b.at(n);
  return {lo, std::move(r)};
}

FiniteSequence scale(const FiniteSequence& a, double c) {
  std::vector<double> r = a.values();
  for (double& x : r) x *= c;
  return {a.first_index(), std::move(r)};
}

double weighted_sum(const FiniteSequence& u, const FiniteSequence& v, const WeightFn& w,
                    std::optional<IndexRange> range) {
  IndexRange rg{};
  if (range) {
    rg = *range;
  } else {
    if (u.is_zero() || v.is_zero()) return 0.0;
    rg.first = std::max(u.first_index(), v.first_index());
    rg.last = std::min(u.last_index(), v.last_index());
  }
  CompensatedSum s;
  for (Index n = rg.first; n <= rg.last; ++n) {
    const double wn = w(n);
    if (!std::isfinite(wn)) throw std::domain_error("weighted_sum: weight undefined at n = " + std::to_string(n));
    const double un = u.at(n);
    const double vn = v.at(n);
    if (un == 0.0 || vn == 0.0) continue;
    double p, e;
    eft::two_prod(un, vn, p, e);
    s.add_product(wn, p);
    s.add(wn * e);
  }
  return s.value();
}

double sum_squares_from(const FiniteSequence& u, Index from) {
  CompensatedSum s;
  for (Index n = std::max(from, u.first_index()); n <= u.last_index(); ++n) {
    const double x = u.at(n);
    s.add_product(x, x);
  }
  return s.value();
}

}  // namespace hardy
