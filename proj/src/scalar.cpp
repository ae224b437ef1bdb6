#include "hardy/scalar.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "scalar_impl.hpp"

namespace hardy {

namespace {

using std::pow;

template <class T>
T pw(const T& b, double e) {
  return pow(b, T(e));
}

template <class T>
T G_plain(double a, const T& x) {
  return T(1.0) + pw(T(1.0) + x, a) - pw(T(1.0) + x, (a + 1.0) / 2.0) - pw(T(1.0) - x, (1.0 - a) / 2.0);
}

template <class T>
T Y_of(const T& x) {
  return x / (2.0 * x - 1.0);
}

template <class T>
T J_of(double a, const T& Y) {
  const double c3 = (a + 1) * (a + 3) * (a + 5) / 2.0;
  const double c2 = -3.0 * (3 * a - 1) * (a + 1) * (a + 3) / 4.0;
  const double c1 = 9.0 * (3 * a - 1) * (a * a - 1) / 8.0;
  const double c0 = -3.0 * (a - 1) * (3 * a - 1) * (3 * a - 5) / 16.0;
  return ((c3 * Y + c2) * Y + c1) * Y + c0;
}

template <class T>
T L_of(double a, const T& Y) {
  const double c3 = (a + 1) * (a + 3);
  const double c2 = -3.0 * (3 * a - 1) * (a + 1) / 2.0;
  const double c1 = 9.0 * (3 * a - 1) * (a - 1) / 4.0;
  const double c0 = -3.0 * (3 * a - 1) * (3 * a - 5) / 8.0;
  return pw(Y, (a - 1.0) / 2.0) * (((c3 * Y + c2) * Y + c1) * Y + c0);
}

template <class T>
T K_of(double a, const T& x) {
  return T(a * (a - 2)) - ((a - 3) * (a - 5) / 8.0) * pw(x, (-1.0 - a) / 2.0) + L_of(a, Y_of(x));
}

template <class T>
T g_of(const T& a) {
  return 3.0 * (((-9.0 * a + 63.0) * a - 175.0) * a + 265.0) / 128.0;
}

template <class T>
T Gc_of(const T& a) {
  return (((113.0 * a - 791.0) * a + 1799.0) * a - 1905.0) / 512.0;
}

template <class T>
T Q_of(const T& a) {
  const double ad = static_cast<double>(a);
  const T th(1.5);
  return (a - 1.0) * (a * pw(th, ad - 2.0) - (a + 1.0) * pw(th, (3.0 * ad - 1.0) / 2.0) * pw(T(2.0), (-3.0 - ad) / 2.0) -
                      (a - 3.0) / 4.0 * pw(th, (ad - 5.0) / 2.0));
}

template <class T>
T eval_any(const ScalarFunction& fn, const T& x) {
  const double a = fn.alpha;
  switch (fn.id) {
    case ScalarId::H: return detail::H_kernel<T>(a, x);
    case ScalarId::G: return static_cast<double>(x) <= 0.5 ? detail::H_kernel<T>(a, -x) : G_plain(a, x);
    case ScalarId::F: return detail::F_kernel<T>(a, x - 1.0);
    case ScalarId::K: return K_of(a, x);
    case ScalarId::J: return J_of(a, x);
    case ScalarId::L: return L_of(a, x);
    case ScalarId::Y: return Y_of(x);
    case ScalarId::g: return g_of(x);
    case ScalarId::G_cubic: return Gc_of(x);
    case ScalarId::Q: return Q_of(x);
  }
  throw std::invalid_argument("unknown scalar function");
}

void check_domain(const ScalarFunction& fn, double x) {
  if (!fn.domain().contains(x))
    throw std::out_of_range(fn.name() + ": argument " + std::to_string(x) + " outside the interval of definition");
}

}  // namespace

ScalarFunction ScalarFunction::parse(const std::string& name, double alpha) {
  static const std::pair<const char*, ScalarId> table[] = {
      {"H", ScalarId::H}, {"G", ScalarId::G}, {"F", ScalarId::F}, {"K", ScalarId::K},         {"J", ScalarId::J},
      {"L", ScalarId::L}, {"Y", ScalarId::Y}, {"g", ScalarId::g}, {"G_cubic", ScalarId::G_cubic}, {"Q", ScalarId::Q}};
  for (const auto& [s, id] : table)
    if (name == s) return {id, alpha};
  throw std::invalid_argument("unknown scalar function '" + name + "'");
}

std::string ScalarFunction::name() const {
  switch (id) {
    case ScalarId::H: return "H";
    case ScalarId::G: return "G";
    case ScalarId::F: return "F";
    case ScalarId::K: return "K";
    case ScalarId::J: return "J";
    case ScalarId::L: return "L";
    case ScalarId::Y: return "Y";
    case ScalarId::g: return "g";
    case ScalarId::G_cubic: return "G_cubic";
    case ScalarId::Q: return "Q";
  }
  return "?";
}

Interval ScalarFunction::domain() const {
  switch (id) {
    case ScalarId::H: return {0.0, 1.0, false, true};
    case ScalarId::G: return {0.0, 1.0, false, false};
    case ScalarId::F:
    case ScalarId::K:
    case ScalarId::Y: return {1.0, 1.5, false, false};
    case ScalarId::J:
    case ScalarId::L: return {0.75, 1.0, false, false};
    case ScalarId::g:
    case ScalarId::G_cubic:
    case ScalarId::Q: return {1.0, 3.0, false, false};
  }
  return {};
}

double scalar_eval(const ScalarFunction& fn, double x) {
  check_domain(fn, x);
  return eval_any<double>(fn, x);
}

DD scalar_eval_dd(const ScalarFunction& fn, const DD& x) {
  check_domain(fn, x.to_double());
  return eval_any<DD>(fn, x);
}

ScanReport lower_bound_scan(const std::string& what, const std::function<double(double)>& margin, double lo, double hi,
                            std::size_t points, bool include_lo, bool include_hi, bool strict) {
  ScanReport r;
  r.what = what;
  r.strict = strict;
  r.min_margin = std::numeric_limits<double>::infinity();
  auto visit = [&](double x) {
    const double m = margin(x);
    ++r.points;
    if (m < r.min_margin || std::isnan(m)) {
      r.min_margin = m;
      r.at = x;
    }
  };
  if (include_lo) visit(lo);
  for (std::size_t i = 1; i <= points; ++i) visit(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points + 1));
  if (include_hi) visit(hi);
  r.pass = strict ? r.min_margin > 0.0 : r.min_margin >= 0.0;
  return r;
}

ScanReport scan_H(double alpha, std::size_t points) {
  const ScalarFunction H{ScalarId::H, alpha};
  const double c = (1.0 - alpha) * (1.0 - alpha) / 4.0;
  return lower_bound_scan(
      "H_alpha(x) > ((1-alpha)^2/4) x^2 on (0,1), alpha=" + std::to_string(alpha),
      [&](double x) { return (scalar_eval_dd(H, DD(x)) - c * DD(x) * x).to_double(); }, 0.0, 1.0, points, false, false,
      true);
}

ScanReport scan_G(double alpha, std::size_t points) {
  const ScalarFunction G{ScalarId::G, alpha};
  const double c = (alpha - 1.0) * (alpha - 1.0) / 4.0;
  return lower_bound_scan(
      "G_alpha(x) >= ((alpha-1)^2/4) x^2 on (0,1], alpha=" + std::to_string(alpha),
      [&](double x) { return (scalar_eval_dd(G, DD(x)) - c * DD(x) * x).to_double(); }, 0.0, 1.0, points, false, true,
      false);
}

ScanReport scan_F(double alpha, std::size_t points) {
  const ScalarFunction F{ScalarId::F, alpha};
  const double c = (alpha - 1.0) * (alpha - 1.0) / 4.0;
  return lower_bound_scan(
      "F_alpha(x) >= ((alpha-1)^2/4)(x-1)^2 on (1,3/2], alpha=" + std::to_string(alpha),
      [&](double x) {
        const DD t = DD(x) - 1.0;
        return (scalar_eval_dd(F, DD(x)) - c * t * t).to_double();
      },
      1.0, 1.5, points, false, true, false);
}

namespace {

std::size_t alpha_points(double step) {
  if (!(step > 0.0) || step >= 1.0) throw std::invalid_argument("alpha step must lie in (0, 1)");
  return static_cast<std::size_t>(std::llround(2.0 / step)) - 1;
}

}  // namespace

ScanReport scan_Q(double step, double threshold) {
  ScanReport r = lower_bound_scan(
      "Q(alpha) - (alpha-1)^2/2 on [1+step, 3-step]",
      [&](double a) { return (Q_of(DD(a)) - 0.5 * (DD(a) - 1.0) * (DD(a) - 1.0)).to_double(); }, 1.0, 3.0,
      alpha_points(step), false, false, true);
  r.pass = r.min_margin > threshold;
  return r;
}

ScanReport scan_G_cubic(double step) {
  return lower_bound_scan(
      "-G(alpha) on [1+step, 3-step]", [](double a) { return -Gc_of(DD(a)).to_double(); }, 1.0, 3.0,
      alpha_points(step), false, false, true);
}

ScanReport scan_g(double step) {
  return lower_bound_scan(
      "min(g(alpha), g(alpha) - g(alpha+step)) on [1,3]",
      [&](double a) {
        const DD ga = g_of(DD(a));
        const DD gb = g_of(DD(a) + step);
        return std::min(ga.to_double(), (ga - gb).to_double());
      },
      1.0, 3.0 - step, alpha_points(step), true, true, true);
}

}  // namespace hardy
