#include "hardy/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "hardy/parallel.hpp"
#include "hardy/sum.hpp"

namespace hardy {

double norm2(const Point& x) {
  std::int64_t s = 0;
  for (auto c : x) s += c * c;
  return static_cast<double>(s);
}

double norm(const Point& x) { return std::sqrt(norm2(x)); }

// ---- box ------------------------------------------------------------------------

BoxDomain::BoxDomain(int d, std::int64_t R, std::vector<Point> excluded) : d_(d), R_(R), excluded_(std::move(excluded)) {
  if (d < 2) throw std::invalid_argument("BoxDomain: d must be >= 2");
  if (R < 2) throw std::invalid_argument("BoxDomain: R must be >= 2");
  strides_.resize(static_cast<std::size_t>(d));
  std::size_t s = 1;
  const auto side = static_cast<std::size_t>(2 * R + 1);
  for (int a = d - 1; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] = s;
    s *= side;
  }
  size_ = s;
  for (const auto& x : excluded_)
    if (!contains(x)) throw std::invalid_argument("BoxDomain: excluded point outside the box");
}

BoxDomain BoxDomain::punctured(int d, std::int64_t R) { return BoxDomain(d, R, {Point(static_cast<std::size_t>(d), 0)}); }

bool BoxDomain::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != d_) return false;
  return std::all_of(x.begin(), x.end(), [this](std::int64_t c) { return c >= -R_ && c <= R_; });
}

bool BoxDomain::in_collar(const Point& x) const {
  return contains(x) && std::any_of(x.begin(), x.end(), [this](std::int64_t c) { return c == -R_ || c == R_; });
}

bool BoxDomain::is_excluded(const Point& x) const {
  return std::find(excluded_.begin(), excluded_.end(), x) != excluded_.end();
}

std::size_t BoxDomain::index(const Point& x) const {
  if (!contains(x)) throw std::out_of_range("point outside the box");
  std::size_t i = 0;
  for (int a = 0; a < d_; ++a) i += static_cast<std::size_t>(x[static_cast<std::size_t>(a)] + R_) * strides_[static_cast<std::size_t>(a)];
  return i;
}

Point BoxDomain::point(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("box index out of range");
  Point x(static_cast<std::size_t>(d_));
  for (int a = 0; a < d_; ++a) {
    const auto s = strides_[static_cast<std::size_t>(a)];
    x[static_cast<std::size_t>(a)] = static_cast<std::int64_t>(i / s) - R_;
    i %= s;
  }
  return x;
}

LatticeFunction::LatticeFunction(BoxDomain box) : box_(std::move(box)), values_(box_.size(), 0.0) {}

double LatticeFunction::at(const Point& x) const { return box_.contains(x) ? values_[box_.index(x)] : 0.0; }

void LatticeFunction::set(const Point& x, double value) {
  if (box_.in_collar(x)) throw std::invalid_argument("LatticeFunction: point lies in the zero collar");
  if (box_.is_excluded(x) && value != 0.0) throw std::invalid_argument("LatticeFunction: point is excluded");
  values_[box_.index(x)] = value;
}

double zd_laplacian(const LatticeFunction& u, const Point& x) {
  const auto& box = u.box();
  if (!box.contains(x) || box.in_collar(x)) throw std::out_of_range("zd_laplacian: stencil leaves the box");
  const double ux = u.at(x);
  CompensatedSum s;
  Point y = x;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (int sgn : {-1, 1}) {
      y[a] = x[a] + sgn;
      s.add(ux - u.at(y));
    }
    y[a] = x[a];
  }
  return s.value();
}

Graph box_graph(const BoxDomain& box) {
  Graph g(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Point x = box.point(i);
    for (int a = 0; a < box.d(); ++a)
      if (x[static_cast<std::size_t>(a)] < box.R()) g.add_edge(i, i + box.stride(a), 1.0);
  }
  return g;
}

// ---- weights ---------------------------------------------------------------------

double zd_gamma(double alpha, int d) { return (2.0 - d - alpha) / 4.0; }

namespace {

void check_weight_args(double alpha, int d, const Point& x) {
  if (d < 2 || static_cast<int>(x.size()) != d) throw std::invalid_argument("zd weight: point dimension must equal d >= 2");
  if (!(alpha > 2.0 - d)) throw std::invalid_argument("zd weight: alpha must exceed 2 - d");
  if (norm2(x) == 0.0) throw std::invalid_argument("zd weight: x must be nonzero");
}

template <class T>
T weight_impl(double alpha, int d, const Point& x) {
  using std::expm1;
  using std::exp;
  using std::log1p;
  using std::pow;
  check_weight_args(alpha, d, x);
  const double gamma = zd_gamma(alpha, d);
  const double r2 = norm2(x);
  T acc(0.0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (int sgn : {-1, 1}) {
      const double num = 2.0 * sgn * static_cast<double>(x[a]) + 1.0;  // |y|² - |x|²
      if (num == -r2) continue;                                         // y = 0
      const T s = T(num) / T(r2);
      const T l = log1p(s);
      acc += (T(1.0) + exp(l * (alpha / 2.0))) * (-expm1(l * gamma));
    }
  }
  return acc * pow(T(r2), T(alpha / 2.0)) * 0.5;
}

}  // namespace

double zd_weight_exact(double alpha, int d, const Point& x) { return weight_impl<double>(alpha, d, x); }
DD zd_weight_exact_dd(double alpha, int d, const Point& x) { return weight_impl<DD>(alpha, d, x); }

double zd_leading_coefficient(double alpha, int d) { return (d - 2.0 + alpha) * (d - 2.0 + alpha) / 4.0; }

double zd_isotropic_coefficient(double alpha, int d) {
  return (d - 2.0 + alpha) * (3.0 * d + 6.0 + 2.0 * alpha * alpha - 5.0 * alpha) / 8.0;
}

double zd_anisotropic_coefficient(double alpha, int d, AnisotropicCoefficient which) {
  if (which == AnisotropicCoefficient::Derived)
    return -(d + 10.0 - alpha) * (d - 2.0 + alpha) * (7.0 * alpha * alpha - 12.0 * alpha + d * d + 8.0 * d + 12.0) / 192.0;
  const double g = zd_gamma(alpha, d);
  const double K = alpha * g / 48.0 *
                   ((alpha - 2) * (alpha - 4) + 3.0 * (alpha - 2) * (g - 1) + 4.0 * (g - 1) * (g - 2));
  return -(4.0 * g * (g - 1) * (g - 2) * (g - 3) / 3.0 + 32.0 * K);
}

std::optional<double> zd_weight_asymptotic(double alpha, int d, const Point& x, int order, AnisotropicCoefficient which) {
  check_weight_args(alpha, d, x);
  if (order != 1 && order != 2) throw std::invalid_argument("zd_weight_asymptotic: order must be 1 or 2");
  const double r2 = norm2(x);
  if (r2 < 25.0) return std::nullopt;
  const double r = std::sqrt(r2);
  double w = zd_leading_coefficient(alpha, d) * std::pow(r, alpha - 2.0);
  if (order == 2) {
    double s4 = 0.0;
    for (auto c : x) {
      const double c2 = static_cast<double>(c) * static_cast<double>(c);
      s4 += c2 * c2;
    }
    w += zd_isotropic_coefficient(alpha, d) * std::pow(r, alpha - 4.0) +
         zd_anisotropic_coefficient(alpha, d, which) * s4 * std::pow(r, alpha - 8.0);
  }
  return w;
}

// ---- property check ----------------------------------------------------------------

namespace {

struct ZdFields {
  const BoxDomain& box;
  std::size_t origin;
  std::vector<double> V, sf, w;   // |x|^α, |x|^γ = sqrt f, weight
  std::vector<std::uint32_t> border;  // bit 2a: x_a = -R, bit 2a+1: x_a = R
};

ZdFields make_fields(const BoxDomain& box, double alpha) {
  ZdFields F{box, box.index(Point(static_cast<std::size_t>(box.d()), 0)), {}, {}, {}, {}};
  const std::size_t n = box.size();
  F.V.assign(n, 0.0);
  F.sf.assign(n, 0.0);
  F.w.assign(n, 0.0);
  F.border.assign(n, 0);
  const double gamma = zd_gamma(alpha, box.d());
  for (std::size_t i = 0; i < n; ++i) {
    const Point x = box.point(i);
    for (int a = 0; a < box.d(); ++a) {
      if (x[static_cast<std::size_t>(a)] == -box.R()) F.border[i] |= 1u << (2 * a);
      if (x[static_cast<std::size_t>(a)] == box.R()) F.border[i] |= 1u << (2 * a + 1);
    }
    if (i == F.origin) continue;
    const double r2 = norm2(x);
    F.V[i] = std::pow(r2, alpha / 2.0);
    F.sf[i] = std::pow(r2, gamma / 2.0);
    if (F.border[i] == 0) F.w[i] = zd_weight_exact(alpha, box.d(), x);
  }
  return F;
}

std::vector<double> random_u(const ZdFields& F, std::size_t kind, std::mt19937_64& rng) {
  const BoxDomain& box = F.box;
  std::vector<double> u(box.size(), 0.0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const std::int64_t R = box.R();
  switch (kind % 3) {
    case 0:
      for (std::size_t i = 0; i < u.size(); ++i)
        if (F.border[i] == 0 && i != F.origin) u[i] = unif(rng);
      break;
    case 1: {
      std::uniform_int_distribution<std::int64_t> coord(-(R - 1), R - 1);
      std::uniform_int_distribution<std::int64_t> rad(1, 3);
      Point c(static_cast<std::size_t>(box.d()));
      for (auto& v : c) v = coord(rng);
      const std::int64_t rr = rad(rng);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (F.border[i] != 0 || i == F.origin) continue;
        const Point x = box.point(i);
        bool inside = true;
        for (std::size_t a = 0; a < x.size() && inside; ++a) inside = std::abs(x[a] - c[a]) <= rr;
        if (inside) u[i] = unif(rng);
      }
      break;
    }
    default:
      // f times a radial cutoff: the regime where the margin is smallest.
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (F.border[i] != 0 || i == F.origin) continue;
        const double r = norm(box.point(i)) / static_cast<double>(R);
        if (r < 1.0) u[i] = F.sf[i] * F.sf[i] * (1.0 - r) * (1.0 + 0.01 * unif(rng));
      }
  }
  return u;
}

ZdTrial evaluate_trial(const ZdFields& F, const std::vector<double>& u) {
  const BoxDomain& box = F.box;
  CompensatedSum lhs, rhs, ff, origin;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double ux = u[i];
    if (i != F.origin && ux != 0.0) rhs.add_product(F.w[i] * ux, ux);
    for (int a = 0; a < box.d(); ++a) {
      if (F.border[i] & (1u << (2 * a + 1))) continue;
      const std::size_t j = i + box.stride(a);
      const double uy = u[j];
      if (ux == 0.0 && uy == 0.0) continue;
      if (i == F.origin || j == F.origin) {
        const std::size_t k = i == F.origin ? j : i;
        const double t = 0.5 * F.V[k] * u[k] * u[k];
        lhs.add(t);
        origin.add(t);
        continue;
      }
      const double vb = 0.5 * (F.V[i] + F.V[j]);
      const double d = ux - uy;
      lhs.add_product(vb * d, d);
      const double e = (F.sf[i] / F.sf[j]) * uy - (F.sf[j] / F.sf[i]) * ux;
      ff.add_product(vb * e, e);
    }
  }
  ZdTrial t;
  t.lhs = lhs.value();
  t.rhs = rhs.value();
  t.margin = (lhs.value_dd() - rhs.value_dd()).to_double();
  t.scale = std::abs(t.lhs) + std::abs(t.rhs);
  t.f_functional = ff.value();
  t.origin_term = origin.value();
  if (t.scale > 0.0) t.identity_residual = std::abs(t.margin - t.f_functional - t.origin_term) / t.scale;
  return t;
}

}  // namespace

ZdReport zd_inequality_check(double alpha, int d, std::int64_t R, std::size_t trials, std::uint64_t seed, int threads) {
  if (R < 5) throw std::invalid_argument("zd_inequality_check: R must be >= 5");
  if (!(alpha > 2.0 - d)) throw std::invalid_argument("zd_inequality_check: alpha must exceed 2 - d");
  const BoxDomain box = BoxDomain::punctured(d, R);
  const ZdFields F = make_fields(box, alpha);
  ZdReport rep;
  rep.alpha = alpha;
  rep.d = d;
  rep.R = R;
  rep.seed = seed;
  rep.trials.resize(trials);
  parallel_for(
      trials,
      [&](std::size_t t) {
        std::mt19937_64 rng(seed + t);
        const auto u = random_u(F, t, rng);
        ZdTrial r = evaluate_trial(F, u);
        r.trial = t;
        r.seed = seed + t;
        rep.trials[t] = r;
      },
      threads);
  rep.min_margin_rel = trials ? std::numeric_limits<double>::infinity() : 0.0;
  for (const auto& t : rep.trials) {
    if (t.scale > 0.0) rep.min_margin_rel = std::min(rep.min_margin_rel, t.margin / t.scale);
    rep.max_identity_residual = std::max(rep.max_identity_residual, t.identity_residual);
    if (t.margin < -1e-12 * t.scale) rep.pass = false;
  }
  return rep;
}

std::vector<LeadingRatioRow> leading_ratio_table(double alpha, int d, const std::vector<std::int64_t>& ts) {
  std::vector<LeadingRatioRow> rows;
  const double lead = zd_leading_coefficient(alpha, d);
  for (auto t : ts) {
    Point x(static_cast<std::size_t>(d), 0);
    x[0] = t;
    LeadingRatioRow r;
    r.t = t;
    r.exact = zd_weight_exact(alpha, d, x);
    r.ratio = r.exact * std::pow(static_cast<double>(t), 2.0 - alpha) / lead;
    if (auto a = zd_weight_asymptotic(alpha, d, x, 2)) r.remainder = (zd_weight_exact_dd(alpha, d, x) - *a).to_double();
    rows.push_back(r);
  }
  return rows;
}

PowerFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_power_law: need >= 2 paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(std::abs(ys[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  PowerFit f;
  f.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.prefactor = std::exp((sy - f.exponent * sx) / n);
  return f;
}

// ---- Z^2 Leray ----------------------------------------------------------------------

double leray_z2_weight(const Point& x) {
  if (x.size() != 2) throw std::invalid_argument("leray_z2_weight: x must lie in Z^2");
  const double r2 = norm2(x);
  if (r2 < 4.0) throw std::invalid_argument("leray_z2_weight: requires |x| >= 2");
  const double lnr = 0.5 * std::log(r2);
  CompensatedSum s;
  for (std::size_t a = 0; a < 2; ++a)
    for (int sgn : {-1, 1}) {
      const double rel = (2.0 * sgn * static_cast<double>(x[a]) + 1.0) / r2;  // |y|²/|x|² - 1
      // 1 - sqrt(ln|y| / ln|x|)
      s.add(-std::expm1(0.5 * std::log1p(0.5 * std::log1p(rel) / lnr)));
    }
  return s.value();
}

double leray_z2_asymptotic(const Point& x) {
  if (x.size() != 2) throw std::invalid_argument("leray_z2_asymptotic: x must lie in Z^2");
  const double r2 = norm2(x);
  if (r2 < 4.0) throw std::invalid_argument("leray_z2_asymptotic: requires |x| >= 2");
  const double lnr = 0.5 * std::log(r2);
  double s4 = 0.0;
  for (auto c : x) s4 += std::pow(static_cast<double>(c), 4);
  const double S = s4 / (r2 * r2);
  return 1.0 / (4.0 * r2 * lnr * lnr) + (2.0 * S - 1.5) / (r2 * r2 * lnr);
}

double leray_z2_fit_c(double r_min, double r_max) {
  if (!(r_min >= 2.0) || !(r_max > r_min)) throw std::invalid_argument("leray_z2_fit_c: need 2 <= r_min < r_max");
  const auto lim = static_cast<std::int64_t>(std::ceil(r_max));
  double c = -std::numeric_limits<double>::infinity();
  for (std::int64_t a = 0; a <= lim; ++a)
    for (std::int64_t b = 0; b <= a; ++b) {
      const Point x{a, b};
      const double r = norm(x);
      if (r < r_min || r > r_max) continue;
      const double r2 = r * r, lnr = std::log(r);
      const double bound = 1.0 / (4.0 * r2 * lnr * lnr) - 12.0 / (r2 * r2 * lnr);
      c = std::max(c, (bound - leray_z2_weight(x)) * r2 * r2 * lnr * lnr);
    }
  return c;
}

}  // namespace hardy
