#include "hardy/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "scalar_impl.hpp"

namespace hardy {

namespace {

constexpr double kSeriesRelTol = 1e-18;
constexpr int kMaxTerms = 64;
constexpr int kShiftedOrder = 12;
constexpr Index kDefaultCrossover = 64;

bool use_direct(EvalMode mode, Index n, Index crossover) {
  if (mode == EvalMode::Direct) return true;
  if (mode == EvalMode::Series) return false;
  return n < crossover;
}

void require_n(Index n, Index min_n, const char* who) {
  if (n < min_n) throw std::domain_error(std::string(who) + ": n = " + std::to_string(n) + " is below the validity range");
}

// r_k = C(4k,2k)/16^k, k = 0..K.
std::vector<double> central_ratios(int K) {
  std::vector<double> r(static_cast<std::size_t>(K) + 1);
  r[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    const double a = 4.0 * k;
    r[k] = r[k - 1] * a * (a - 1) * (a - 2) * (a - 3) / ((2.0 * k) * (2.0 * k) * (2.0 * k - 1) * (2.0 * k - 1) * 16.0);
  }
  return r;
}

// Sum of c_k x^{k} over k >= first until two consecutive terms fall below the
// relative tolerance (some families have vanishing odd coefficients).
template <class Coef>
double power_series(Coef coef, double x, int first, int max_terms) {
  double sum = 0.0;
  double xp = std::pow(x, first);
  int small = 0;
  for (int k = first; k < first + max_terms; ++k) {
    const double term = coef(k) * xp;
    sum += term;
    small = std::abs(term) < kSeriesRelTol * std::abs(sum) ? small + 1 : 0;
    if (k > first && small >= 2) break;
    xp *= x;
  }
  return sum;
}

Rational binom_int(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i, i);
  return r;
}

Rational pow_int(std::int64_t b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r = r * Rational(b);
  return r;
}

// Σ_{k>=2} C(4k,2k)(2k+1)^2/((4k-1)2^{4k+1}) n^{-2k-2}.
double improved_tail(Index n, int terms) {
  const auto r = central_ratios(kMaxTerms + 2);
  const double x = 1.0 / static_cast<double>(n);
  const double x2 = x * x;
  double sum = 0.0, xp = x2 * x2 * x2;
  for (int k = 2; k < 2 + terms && k <= kMaxTerms; ++k) {
    const double term = r[k] * (2.0 * k + 1) * (2.0 * k + 1) / (2.0 * (4.0 * k - 1)) * xp;
    sum += term;
    if (std::abs(term) < kSeriesRelTol * std::abs(sum)) break;
    xp *= x2;
  }
  return sum;
}

}  // namespace

EvalMode parse_eval_mode(const std::string& s) {
  if (s == "direct") return EvalMode::Direct;
  if (s == "series") return EvalMode::Series;
  if (s == "auto") return EvalMode::Auto;
  throw std::invalid_argument("unknown evaluation mode '" + s + "'");
}

std::string to_string(EvalMode m) {
  switch (m) {
    case EvalMode::Direct: return "direct";
    case EvalMode::Series: return "series";
    case EvalMode::Auto: return "auto";
  }
  return "?";
}

// ---- kpp ---------------------------------------------------------------------

double kpp_weight_direct(Index n) {
  require_n(n, 1, "kpp_weight");
  const double a = std::sqrt(static_cast<double>(n - 1));
  const double b = std::sqrt(static_cast<double>(n));
  const double c = std::sqrt(static_cast<double>(n + 1));
  return 2.0 / (b * (c + a) * (b + a) * (c + b));
}

double kpp_weight_series(Index n) {
  require_n(n, 2, "kpp_weight (series)");
  const auto r = central_ratios(kMaxTerms);
  const double x = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  return power_series([&](int k) { return 2.0 * r[k] / (4.0 * k - 1); }, x, 1, kMaxTerms);
}

double kpp_weight(Index n, EvalMode mode) {
  return use_direct(mode, n, kDefaultCrossover) ? kpp_weight_direct(n) : kpp_weight_series(n);
}

Rational kpp_coefficient(int k) {
  if (k < 1) throw std::invalid_argument("kpp_coefficient: k >= 1");
  return binom_int(4 * k, 2 * k) / (pow_int(2, 4 * k - 1) * Rational(4 * k - 1));
}

// ---- shifted Hardy -------------------------------------------------------------

std::vector<double> shifted_hardy_taylor(double alpha, int order) {
  const auto A = detail::binomials(alpha, order);
  const auto B = detail::binomials((1.0 + alpha) / 2.0, order);
  const auto C = detail::binomials((1.0 - alpha) / 2.0, order);
  std::vector<double> h(static_cast<std::size_t>(order) + 1, 0.0);
  for (int k = 2; k <= order; ++k) h[k] = ((k % 2) ? -1.0 : 1.0) * (A[k] - B[k]) - C[k];
  return h;
}

double shifted_hardy_weight(double alpha, Index n, EvalMode mode) {
  if (!(alpha < 0.0)) throw std::domain_error("shifted_hardy_weight: alpha must be negative (use direct_hardy_weight)");
  require_n(n, 2, "shifted_hardy_weight");
  const double x = 1.0 / static_cast<double>(n);
  const double scale = std::pow(static_cast<double>(n), alpha);
  if (use_direct(mode, n, kDefaultCrossover)) return scale * detail::H_kernel<double>(alpha, x);
  const auto h = shifted_hardy_taylor(alpha, kShiftedOrder);
  double s = 0.0;
  for (int k = kShiftedOrder; k >= 2; --k) s = (s + h[k]) * x;
  return scale * s * x;
}

// ---- direct Hardy --------------------------------------------------------------

BoundedValue direct_hardy_weight(double alpha, Index n, EvalMode mode) {
  if (!(alpha >= 0.0)) throw std::domain_error("direct_hardy_weight: alpha must be nonnegative");
  require_n(n, 1, "direct_hardy_weight");
  BoundedValue out;
  const double nd = static_cast<double>(n);
  out.bound = (alpha - 1.0) * (alpha - 1.0) / 4.0 * std::pow(nd, alpha - 2.0);
  const double scale = std::pow(nd, alpha);
  const double x = 1.0 / nd;
  const bool direct = use_direct(mode, n, kDefaultCrossover);

  if (alpha <= 1.0) {
    if (n == 1) {
      // f_0 = 0^{(1-α)/2}, which is 1 at α = 1.
      const double f0 = std::pow(0.0, (1.0 - alpha) / 2.0);
      out.value = (1.0 - f0) + std::pow(2.0, alpha) * (1.0 - std::pow(2.0, (1.0 - alpha) / 2.0));
      return out;
    }
    if (direct) {
      out.value = scale * detail::H_kernel<double>(alpha, -x);
    } else {
      const auto h = shifted_hardy_taylor(alpha, kMaxTerms);
      out.value = scale * power_series([&](int k) { return (k % 2 ? -1.0 : 1.0) * h[k]; }, x, 2, kMaxTerms - 1);
    }
    return out;
  }

  if (n == 1) {
    out.value = 1.0 + std::pow(2.0, alpha) * (1.0 - std::pow(2.0 / 3.0, (alpha - 1.0) / 2.0));
    return out;
  }
  if (direct) {
    out.value = scale * detail::F_kernel<double>(alpha, x);
    return out;
  }
  // 1 - (1+t)^{(α-1)/2} + (1+t)^α - (1+t)^{(3α-1)/2}(1+2t)^{(1-α)/2}.
  const auto A = detail::binomials(alpha, kMaxTerms);
  const auto B = detail::binomials((alpha - 1.0) / 2.0, kMaxTerms);
  const auto P = detail::binomials((3.0 * alpha - 1.0) / 2.0, kMaxTerms);
  const auto Q = detail::binomials((1.0 - alpha) / 2.0, kMaxTerms);
  auto coef = [&](int k) {
    double cauchy = 0.0, two = 1.0;
    for (int j = k; j >= 0; --j) {
      cauchy += P[j] * Q[k - j] * two;
      two *= 2.0;
    }
    return A[k] - B[k] - cauchy;
  };
  out.value = scale * power_series(coef, x, 2, kMaxTerms - 1);
  return out;
}

// ---- Leray ---------------------------------------------------------------------

LerayValue leray_weight(Index n, EvalMode mode, double eps) {
  require_n(n, 2, "leray_weight");
  LerayValue out;
  const double nd = static_cast<double>(n);
  const double L = std::log(nd);
  out.bound = 1.0 / (4.0 * nd * L * L);
  if (n == 2) {
    const DD l2 = log(DD(2.0)), l3 = log(DD(3.0));
    out.exact = (DD(5.0) - 3.0 * sqrt(l3 / l2) - 2.0 * eps / sqrt(l2)).to_double();
    return out;
  }
  if (use_direct(mode, n, kDefaultCrossover)) {
    const DD Ln = log(DD(nd));
    const DD dm = log1p(DD(-1.0) / DD(nd)) / Ln;
    const DD dp = log1p(DD(1.0) / DD(nd)) / Ln;
    const DD a = DD(nd) * (-dm) / (1.0 + sqrt(1.0 + dm));
    const DD b = DD(nd + 1.0) * (-dp) / (1.0 + sqrt(1.0 + dp));
    out.exact = (a + b).to_double();
    return out;
  }
  // √(1+δ(x)) = Σ s_j x^j with δ(x) = log1p(x)/L.
  std::vector<double> s(kMaxTerms + 2, 0.0);
  s[0] = 1.0;
  for (int j = 1; j <= kMaxTerms + 1; ++j) {
    double acc = ((j % 2) ? 1.0 : -1.0) / (j * L);
    for (int i = 1; i < j; ++i) acc -= s[i] * s[j - i];
    s[j] = acc / 2.0;
  }
  out.exact = power_series([&](int k) { return (k % 2) ? -s[k] - 2.0 * s[k + 1] : -s[k]; }, 1.0 / nd, 1, kMaxTerms);
  return out;
}

// ---- improved ℓ = 2 --------------------------------------------------------------

Rational improved_a(int k) {
  if (k < 2) throw std::invalid_argument("improved_a: k >= 2");
  const Rational q_k = binom_int(2 * k, k) / pow_int(4, k);
  const Rational q_km2 = binom_int(2 * k - 4, k - 2) / pow_int(4, k - 2);
  const Rational last = Rational(3) * q_km2 / Rational(4LL * k * (k - 1));
  return Rational(k + 1) - q_k - ((k % 2) ? -last : last);
}

double improved_a_double(int k) {
  if (k < 2) throw std::invalid_argument("improved_a: k >= 2");
  double q = 1.0, q2 = 1.0;  // q_k, q_{k-2}
  for (int i = 1; i <= k; ++i) {
    q *= (2.0 * i - 1) / (2.0 * i);
    if (i == k - 2) q2 = q;
  }
  if (k == 2) q2 = 1.0;
  const double last = 3.0 * q2 / (4.0 * k * (k - 1));
  return (k + 1) - q - ((k % 2) ? -last : last);
}

Rational improved_rellich2_coefficient(int j) {
  if (j < 4) throw std::invalid_argument("improved_rellich2_coefficient: j >= 4");
  Rational c = improved_a(j - 2) / Rational(4);
  if (j % 2 == 0 && (j - 2) / 2 >= 2) {
    const int k = (j - 2) / 2;
    const Rational r = binom_int(4 * k, 2 * k) / pow_int(16, k);
    c = c + r * Rational((2 * k + 1) * (2 * k + 1)) / Rational(2 * (4 * k - 1));
  }
  return c;
}

double improved_rellich2_weight(Index n, EvalMode mode, int terms) {
  require_n(n, 2, "improved_rellich2_weight");
  if (terms < 1) throw std::invalid_argument("improved_rellich2_weight: terms >= 1");
  const double x = 1.0 / static_cast<double>(n);
  const double tail = improved_tail(n, terms);
  if (use_direct(mode, n, kDefaultCrossover)) return 0.25 * x * x * detail::H_kernel<double>(-2.0, x) + tail;
  const double head = power_series([](int k) { return improved_a_double(k) / 4.0; }, x, 2, std::min(terms, kMaxTerms));
  return x * x * head + tail;
}

// ---- reference series ------------------------------------------------------------

Rational gks_coefficient(int k) {
  if (k < 1) throw std::invalid_argument("gks_coefficient: k >= 1");
  const Rational r = binom_int(4 * k, 2 * k) / pow_int(16, k);
  return Rational(6) * (pow_int(4, k) - Rational(1)) * r / Rational((2LL * k + 1) * (2LL * k + 2));
}

double gks_reference_weight(Index n, EvalMode mode, int terms) {
  require_n(n, 2, "gks_reference_weight");
  const double nd = static_cast<double>(n);
  if (mode == EvalMode::Direct || (mode == EvalMode::Auto && n < kDefaultCrossover)) {
    // Δ²(n^{3/2}) / n^{3/2} with the value at 0 equal to 0.
    if (n == 2) {
      auto g = [](double m) { return pow(DD(m), DD(1.5)); };
      const DD v = g(4) - 4.0 * g(3) + 6.0 * g(2) - 4.0 * g(1);
      return (v / g(2)).to_double();
    }
    const DD x = DD(1.0) / DD(nd);
    static constexpr double c[5] = {1, -4, 6, -4, 1};
    DD s(0.0);
    for (int j = -2; j <= 2; ++j) {
      if (j == 0) continue;
      s += c[j + 2] * expm1(log1p(x * static_cast<double>(j)) * 1.5);
    }
    return s.to_double();
  }
  if (n < 3) throw std::domain_error("gks_reference_weight: series diverges at n = 2");
  const auto r = central_ratios(kMaxTerms);
  const double x2 = 1.0 / (nd * nd);
  auto coef = [&](int k) { return 6.0 * (std::pow(4.0, k) - 1.0) * r[k] / ((2.0 * k + 1) * (2.0 * k + 2)); };
  return x2 * power_series(coef, x2, 1, std::min(terms, kMaxTerms));
}

// ---- Landau --------------------------------------------------------------------------

double landau_weight(double p, Index n) {
  if (!(p > 1.0)) throw std::domain_error("landau_weight: p must exceed 1");
  require_n(n, 1, "landau_weight");
  return std::pow((p - 1.0) / p, p) * std::pow(static_cast<double>(n), -p);
}

// ---- WeightModel ---------------------------------------------------------------------

WeightModel::WeightModel(Family family, double param, EvalMode mode, Index crossover_n)
    : family_(family), param_(param), mode_(mode), crossover_n_(crossover_n) {
  if (crossover_n < 2) throw std::invalid_argument("crossover_n must be at least 2");
  if (family == Family::ShiftedHardy && !(param < 0.0)) throw std::domain_error("shifted_hardy needs alpha < 0");
  if (family == Family::DirectHardy && !(param >= 0.0)) throw std::domain_error("direct_hardy needs alpha >= 0");
  if (family == Family::LandauConstant && !(param > 1.0)) throw std::domain_error("landau_constant needs p > 1");
}

std::vector<std::string> WeightModel::family_names() {
  return {"kpp", "gks_reference", "shifted_hardy", "direct_hardy", "leray", "improved_rellich2", "landau_constant"};
}

WeightModel WeightModel::parse(const std::string& name, double param) {
  if (name == "kpp") return WeightModel(Family::Kpp);
  if (name == "gks_reference" || name == "gks") return WeightModel(Family::GksReference);
  if (name == "shifted_hardy") return WeightModel(Family::ShiftedHardy, param);
  if (name == "direct_hardy") return WeightModel(Family::DirectHardy, param);
  if (name == "leray") return WeightModel(Family::Leray);
  if (name == "improved_rellich2") return WeightModel(Family::ImprovedRellich2);
  if (name == "landau_constant" || name == "landau") return WeightModel(Family::LandauConstant, param);
  throw std::invalid_argument("unknown weight family '" + name + "'");
}

std::string WeightModel::name() const {
  switch (family_) {
    case Family::Kpp: return "kpp";
    case Family::GksReference: return "gks_reference";
    case Family::ShiftedHardy: return "shifted_hardy";
    case Family::DirectHardy: return "direct_hardy";
    case Family::Leray: return "leray";
    case Family::ImprovedRellich2: return "improved_rellich2";
    case Family::LandauConstant: return "landau_constant";
  }
  return "?";
}

Index WeightModel::min_n() const {
  switch (family_) {
    case Family::Kpp:
    case Family::DirectHardy:
    case Family::LandauConstant: return 1;
    default: return 2;
  }
}

int WeightModel::leading_zeros() const {
  switch (family_) {
    case Family::Kpp:
    case Family::DirectHardy:
    case Family::LandauConstant: return 1;
    default: return 2;
  }
}

double WeightModel::eval(Index n, EvalMode m) const {
  switch (family_) {
    case Family::Kpp: return m == EvalMode::Direct ? kpp_weight_direct(n) : kpp_weight_series(n);
    case Family::GksReference: return gks_reference_weight(n, m);
    case Family::ShiftedHardy: return shifted_hardy_weight(param_, n, m);
    case Family::DirectHardy: return direct_hardy_weight(param_, n, m).value;
    case Family::Leray: return leray_weight(n, m).exact;
    case Family::ImprovedRellich2: return improved_rellich2_weight(n, m);
    case Family::LandauConstant: return landau_weight(param_, n);
  }
  return 0.0;
}

double WeightModel::direct(Index n) const { return eval(n, EvalMode::Direct); }
double WeightModel::series(Index n) const { return eval(n, EvalMode::Series); }

double WeightModel::operator()(Index n) const {
  if (mode_ == EvalMode::Auto) return eval(n, n < crossover_n_ ? EvalMode::Direct : EvalMode::Series);
  return eval(n, mode_);
}

double WeightModel::bound(Index n) const {
  require_n(n, min_n(), "WeightModel::bound");
  const double nd = static_cast<double>(n);
  switch (family_) {
    case Family::Kpp: return 1.0 / (4.0 * nd * nd);
    case Family::GksReference:
    case Family::ImprovedRellich2: return 9.0 / (16.0 * nd * nd * nd * nd);
    case Family::ShiftedHardy:
    case Family::DirectHardy: return (param_ - 1.0) * (param_ - 1.0) / 4.0 * std::pow(nd, param_ - 2.0);
    case Family::Leray: return 1.0 / (4.0 * nd * std::log(nd) * std::log(nd));
    case Family::LandauConstant: return landau_weight(param_, n);
  }
  return 0.0;
}

}  // namespace hardy
