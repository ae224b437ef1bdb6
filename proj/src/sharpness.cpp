#include "hardy/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hardy/parallel.hpp"
#include "hardy/sum.hpp"

namespace hardy {

// ---- form assembly -------------------------------------------------------------

BandedForm::BandedForm(int ell, Index N) : ell_(ell), N_(N) {
  if (ell < 1) throw std::invalid_argument("assemble_form: ell must be >= 1");
  if (N < ell) throw std::invalid_argument("assemble_form: N must be >= ell");
  const FiniteSequence t = half_laplace_power(FiniteSequence::delta(0), BoundaryOrder(ell));
  t_ = t.values();
  t_lo_ = t.first_index();
  const Index t_hi = t.last_index();

  const std::size_t K = size();
  const std::size_t w = static_cast<std::size_t>(ell) + 1;
  band_.assign(K * w, 0.0);
  b_.resize(K);
  for (std::size_t i = 0; i < K; ++i) b_[i] = std::pow(static_cast<double>(ell + static_cast<Index>(i)), -2.0 * ell);

  // Row n touches u_k for n - t_hi <= k <= n - t_lo.
  for (Index n = row_lo(); n <= row_hi(); ++n) {
    const Index k_lo = std::max<Index>(ell, n - t_hi);
    const Index k_hi = std::min<Index>(N, n - t_lo_);
    for (Index k = k_lo; k <= k_hi; ++k) {
      const double tk = t_[static_cast<std::size_t>(n - k - t_lo_)];
      for (Index k2 = k_lo; k2 <= k; ++k2) {
        const double tk2 = t_[static_cast<std::size_t>(n - k2 - t_lo_)];
        band_[static_cast<std::size_t>(k - ell) * w + static_cast<std::size_t>(k - k2)] += tk * tk2;
      }
    }
  }
}

double BandedForm::A(std::size_t i, std::size_t j) const {
  if (i < j) std::swap(i, j);
  const std::size_t d = i - j;
  if (d > static_cast<std::size_t>(ell_) || i >= size()) return 0.0;
  return band_[i * (static_cast<std::size_t>(ell_) + 1) + d];
}

namespace {

void require_in_range(const BandedForm& f, const FiniteSequence& u) {
  if (u.is_zero()) return;
  if (u.first_index() < f.first() || u.last_index() > f.N())
    throw std::invalid_argument("sequence support outside [ell, N]");
}

}  // namespace

double BandedForm::quadratic_A(const FiniteSequence& u) const {
  require_in_range(*this, u);
  // Successive differences rather than the assembled band: uᵀAu cancels badly for smooth u.
  return sum_squares_from(half_laplace_power(u, BoundaryOrder(ell_)), row_lo());
}

double BandedForm::quadratic_B(const FiniteSequence& u) const {
  require_in_range(*this, u);
  CompensatedSum s;
  for (std::size_t i = 0; i < size(); ++i) {
    const double ui = u.at(first() + static_cast<Index>(i));
    s.add_product(b_[i] * ui, ui);
  }
  return s.value();
}

BandedForm assemble_form(int ell, Index N) { return BandedForm(ell, N); }

// ---- eigen solver ----------------------------------------------------------------

namespace {

using DVec = std::vector<DD>;

// Lower band factor L of A - σB, L[i*(w+1) + d] = L(i, i-d).
bool banded_cholesky(const BandedForm& f, const DD& sigma, std::vector<DD>& L) {
  const std::size_t K = f.size();
  const std::size_t w = static_cast<std::size_t>(f.halfwidth());
  L.assign(K * (w + 1), DD(0.0));
  for (std::size_t i = 0; i < K; ++i) {
    const std::size_t j0 = i > w ? i - w : 0;
    for (std::size_t j = j0; j <= i; ++j) {
      DD s = DD(f.A(i, j));
      if (i == j) s -= sigma * f.B(i);
      // Σ_k L(i,k) L(j,k) for k in [max(j0, j-w), j)
      const std::size_t k0 = std::max(j0, j > w ? j - w : 0);
      for (std::size_t k = k0; k < j; ++k) s -= L[i * (w + 1) + (i - k)] * L[j * (w + 1) + (j - k)];
      if (i == j) {
        if (!(s.hi > 0.0)) return false;
        L[i * (w + 1)] = sqrt(s);
      } else {
        L[i * (w + 1) + (i - j)] = s / L[j * (w + 1)];
      }
    }
  }
  return true;
}

void banded_solve(const BandedForm& f, const std::vector<DD>& L, DVec& x) {
  const std::size_t K = f.size();
  const std::size_t w = static_cast<std::size_t>(f.halfwidth());
  for (std::size_t i = 0; i < K; ++i) {
    DD s = x[i];
    const std::size_t k0 = i > w ? i - w : 0;
    for (std::size_t k = k0; k < i; ++k) s -= L[i * (w + 1) + (i - k)] * x[k];
    x[i] = s / L[i * (w + 1)];
  }
  for (std::size_t ii = K; ii-- > 0;) {
    DD s = x[ii];
    for (std::size_t k = ii + 1; k <= std::min(K - 1, ii + w); ++k) s -= L[k * (w + 1) + (k - ii)] * x[k];
    x[ii] = s / L[ii * (w + 1)];
  }
}

DVec apply_A(const BandedForm& f, const DVec& v) {
  const std::size_t K = f.size();
  const std::size_t w = static_cast<std::size_t>(f.halfwidth());
  DVec r(K, DD(0.0));
  for (std::size_t i = 0; i < K; ++i) {
    const std::size_t lo = i > w ? i - w : 0;
    const std::size_t hi = std::min(K - 1, i + w);
    DD s(0.0);
    for (std::size_t j = lo; j <= hi; ++j) s += v[j] * f.A(i, j);
    r[i] = s;
  }
  return r;
}

// ‖Sv‖² where S is the difference operator; equals vᵀAv.
DD stencil_energy(const BandedForm& f, const DVec& v) {
  const auto& t = f.stencil();
  const Index t_lo = f.stencil_lo();
  const Index t_hi = t_lo + static_cast<Index>(t.size()) - 1;
  DD total(0.0);
  for (Index n = f.row_lo(); n <= f.row_hi(); ++n) {
    const Index k_lo = std::max<Index>(f.first(), n - t_hi);
    const Index k_hi = std::min<Index>(f.N(), n - t_lo);
    DD s(0.0);
    for (Index k = k_lo; k <= k_hi; ++k) s += v[static_cast<std::size_t>(k - f.first())] * t[static_cast<std::size_t>(n - k - t_lo)];
    total += s * s;
  }
  return total;
}

DD b_norm2(const BandedForm& f, const DVec& v) {
  DD s(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) s += sqr(v[i]) * f.B(i);
  return s;
}

void normalize_b(const BandedForm& f, DVec& v) {
  const DD n = sqrt(b_norm2(f, v));
  for (auto& x : v) x /= n;
}

struct Shifted {
  DD sigma;
  std::vector<DD> L;
};

// Factorizes A - σB, pulling σ back toward `good` on breakdown.
Shifted factor_with_retry(const BandedForm& f, DD sigma, const DD& good) {
  Shifted s;
  for (int attempt = 0; attempt <= 5; ++attempt) {
    if (banded_cholesky(f, sigma, s.L)) {
      s.sigma = sigma;
      return s;
    }
    sigma = good + (sigma - good) * 0.5;
  }
  throw std::runtime_error("min_generalized_eig: factorization breakdown after 5 retries");
}

}  // namespace

RayleighResult min_generalized_eig(const BandedForm& form, const EigOptions& opt) {
  const std::size_t K = form.size();
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  DVec v(K);
  for (auto& x : v) x = DD(unif(rng));
  normalize_b(form, v);

  auto step = [&](const Shifted& s) {
    for (std::size_t i = 0; i < K; ++i) v[i] *= form.B(i);
    banded_solve(form, s.L, v);
    normalize_b(form, v);
  };
  auto rayleigh = [&] { return stencil_energy(form, v) / b_norm2(form, v); };

  RayleighResult res;
  Shifted sh = factor_with_retry(form, DD(0.0), DD(0.0));
  for (int i = 0; i < 3; ++i) step(sh);
  DD good(0.0);
  DD rq = rayleigh();
  sh = factor_with_retry(form, rq * 0.9, good);
  good = sh.sigma;

  DD prev = rq;
  for (int it = 1; it <= opt.max_iter; ++it) {
    step(sh);
    rq = rayleigh();
    res.iterations = it;
    const double change = std::abs((rq - prev).to_double()) / std::abs(rq.to_double());
    prev = rq;

    const DVec Av = apply_A(form, v);
    DD r2(0.0), a2(0.0);
    for (std::size_t i = 0; i < K; ++i) {
      r2 += sqr(Av[i] - rq * (v[i] * form.B(i)));
      a2 += sqr(Av[i]);
    }
    res.residual = std::sqrt(r2.to_double());
    res.residual_rel = res.residual / std::sqrt(a2.to_double());
    if (change < opt.tol && res.residual_rel <= 1e-10) break;
    if (it == opt.max_iter) throw std::runtime_error("min_generalized_eig: no convergence within max_iter");

    // Move the shift halfway toward the current estimate.
    if (it % 2 == 0) {
      sh = factor_with_retry(form, sh.sigma + (rq - sh.sigma) * 0.5, good);
      good = sh.sigma;
    }
  }

  res.lambda_min = rq.to_double();
  double peak = 0.0;
  std::vector<double> vals(K);
  for (std::size_t i = 0; i < K; ++i) {
    vals[i] = v[i].to_double();
    if (std::abs(vals[i]) > std::abs(peak)) peak = vals[i];
  }
  for (auto& x : vals) x /= peak;
  res.eigvec = FiniteSequence(form.first(), std::move(vals));
  return res;
}

// ---- sharp constant ----------------------------------------------------------------

DD sharp_constant_dd(int ell) {
  if (ell < 1) throw std::invalid_argument("sharp_constant: ell >= 1");
  // (2ℓ)!/(4^ℓ ℓ!) = (2ℓ-1)!!/2^ℓ
  DD c(1.0);
  for (int j = 1; j <= ell; ++j) c = c * (2.0 * j - 1.0) / 2.0;
  return c * c;
}

double sharp_constant(int ell) {
  if (ell < 1) throw std::invalid_argument("sharp_constant: ell >= 1");
  if (ell > 12) return sharp_constant_dd(ell).to_double();
  std::uint64_t odd = 1;
  for (int j = 1; j <= ell; ++j) odd *= static_cast<std::uint64_t>(2 * j - 1);
  const double c = std::ldexp(static_cast<double>(odd), -ell);
  return c * c;
}

Rational sharp_constant_rational(int ell) {
  if (ell < 1 || ell > 10) throw std::invalid_argument("sharp_constant_rational: 1 <= ell <= 10");
  std::int64_t odd = 1;
  for (int j = 1; j <= ell; ++j) odd *= 2 * j - 1;
  return Rational(odd) * Rational(odd) / Rational(std::int64_t{1} << (2 * ell));
}

SweepReport eig_sweep(int ell, const std::vector<Index>& N_list, const EigOptions& opt, int threads) {
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1]) throw std::invalid_argument("eig_sweep: N_list must be increasing");
  SweepReport rep;
  rep.ell = ell;
  rep.rows.resize(N_list.size());
  parallel_for(
      N_list.size(),
      [&](std::size_t i) {
        rep.rows[i].N = N_list[i];
        rep.rows[i].result = min_generalized_eig(assemble_form(ell, N_list[i]), opt);
      },
      threads);
  const double C = sharp_constant(ell);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const double l = rep.rows[i].result.lambda_min;
    if (!(l > C)) rep.above_constant = false;
    if (i > 0) {
      const double p = rep.rows[i - 1].result.lambda_min;
      if (l > p) rep.nonincreasing = false;
      if (!(l < p)) rep.strictly_decreasing = false;
    }
  }
  return rep;
}

// ---- continuum limit -------------------------------------------------------------------

namespace {

using Jet = std::vector<double>;  // truncated Taylor coefficients

Jet jet_mul(const Jet& a, const Jet& b) {
  Jet r(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Jet jet_recip(const Jet& a) {
  Jet r(a.size(), 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

Jet jet_exp(const Jet& a) {
  Jet r(a.size(), 0.0);
  r[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * r[k - j];
    r[k] = s / static_cast<double>(k);
  }
  return r;
}

Jet jet_pow(const Jet& a, int p) {
  Jet r(a.size(), 0.0);
  r[0] = 1.0;
  for (int i = 0; i < p; ++i) r = jet_mul(r, a);
  return r;
}

std::vector<double> gauss_legendre_nodes(int n, std::vector<double>& weights) {
  std::vector<double> x(static_cast<std::size_t>(n));
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
  return x;
}

// ∫_0^1 g by trapezoid with doubling (spectral for smooth compactly supported g).
template <class G>
double trapezoid_smooth(G g) {
  double prev = 0.0;
  for (int level = 6; level <= 22; ++level) {
    const std::size_t n = std::size_t{1} << level;
    CompensatedSum s;
    for (std::size_t i = 1; i < n; ++i) s.add(g(static_cast<double>(i) / static_cast<double>(n)));
    const double cur = s.value() / static_cast<double>(n);
    if (level > 6 && std::abs(cur - prev) <= 1e-15 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

TestFunction TestFunction::parse(const std::string& s) {
  if (s == "bump") return bump();
  if (s == "zero") return zero();
  if (s.rfind("poly:", 0) == 0) {
    const auto comma = s.find(',', 5);
    if (comma == std::string::npos) throw std::invalid_argument("expected poly:P,Q");
    return polynomial(std::stoi(s.substr(5, comma - 5)), std::stoi(s.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown test function '" + s + "' (bump, zero, poly:P,Q)");
}

std::string TestFunction::name() const {
  switch (kind) {
    case Kind::Bump: return "bump";
    case Kind::Zero: return "zero";
    case Kind::Polynomial: return "poly:" + std::to_string(p) + "," + std::to_string(q);
  }
  return "?";
}

double TestFunction::derivative(double x, int k) const {
  if (kind == Kind::Zero || !(x > 0.0 && x < 1.0)) return 0.0;
  Jet X(static_cast<std::size_t>(k) + 1, 0.0);
  X[0] = x;
  if (k >= 1) X[1] = 1.0;
  Jet one_minus = X;
  for (auto& c : one_minus) c = -c;
  one_minus[0] += 1.0;
  Jet r;
  if (kind == Kind::Bump) {
    Jet e = jet_recip(jet_mul(X, one_minus));
    for (auto& c : e) c = -c;
    e[0] += 4.0;
    r = jet_exp(e);
  } else {
    r = jet_mul(jet_pow(X, p), jet_pow(one_minus, q));
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return r[static_cast<std::size_t>(k)] * fact;
}

ContinuumResult continuum_probe(const TestFunction& phi, Index M, int ell) {
  if (ell < 1) throw std::invalid_argument("continuum_probe: ell >= 1");
  if (M < 32) throw std::invalid_argument("continuum_probe: M must be >= 32");
  if (phi.kind == TestFunction::Kind::Polynomial && (phi.p <= ell || phi.q <= ell))
    throw std::invalid_argument("continuum_probe: polynomial test function must vanish to order > ell at both ends");
  ContinuumResult r;
  if (phi.kind == TestFunction::Kind::Zero) return r;

  const double scale = std::pow(static_cast<double>(M), ell - 0.5);
  std::vector<double> w(static_cast<std::size_t>(M - ell));
  for (Index n = ell; n < M; ++n) w[static_cast<std::size_t>(n - ell)] = scale * phi.derivative(static_cast<double>(n) / M, 0);
  const FiniteSequence ws(ell, std::move(w));
  r.discrete_lhs = sum_squares_from(half_laplace_power(ws, BoundaryOrder(ell)), ell - 1);
  r.discrete_rhs = weighted_sum(ws, ws, [ell](Index n) { return std::pow(static_cast<double>(n), -2.0 * ell); },
                                IndexRange{ell, M});

  auto lhs_integrand = [&](double x) {
    const double d = phi.derivative(x, ell);
    return d * d;
  };
  auto rhs_integrand = [&](double x) {
    const double v = phi.derivative(x, 0);
    return v * v * std::pow(x, -2.0 * ell);
  };
  if (phi.kind == TestFunction::Kind::Bump) {
    r.continuous_lhs = trapezoid_smooth(lhs_integrand);
    r.continuous_rhs = trapezoid_smooth(rhs_integrand);
  } else {
    std::vector<double> gw;
    const auto gx = gauss_legendre_nodes(phi.p + phi.q + 2, gw);
    CompensatedSum a, b;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      a.add_product(gw[i], lhs_integrand(gx[i]));
      b.add_product(gw[i], rhs_integrand(gx[i]));
    }
    r.continuous_lhs = a.value();
    r.continuous_rhs = b.value();
  }
  return r;
}

// ---- counterexample ------------------------------------------------------------------------

CounterexampleResult counterexample_build(Index M) {
  if (M < 2) throw std::invalid_argument("counterexample_build: M >= 2");
  CounterexampleResult r;
  r.M = M;
  r.W.assign(static_cast<std::size_t>(5 * M + 2), 0);
  for (Index n = 1; n <= 5 * M; ++n) {
    std::int64_t W;
    if (n <= M) W = 2 * M + 1;
    else if (n <= 3 * M) W = 4 * M - 2 * n;
    else W = n - 5 * M;
    r.W[static_cast<std::size_t>(n)] = W;
    r.sum_W += W;
  }
  // u_n = U_n/(2M) with integer prefix sums U_n.
  const double inv = 1.0 / (2.0 * static_cast<double>(M));
  std::vector<double> u(static_cast<std::size_t>(5 * M));
  std::int64_t U = 0;
  for (Index n = 1; n <= 5 * M; ++n) {
    U += r.W[static_cast<std::size_t>(n)];
    u[static_cast<std::size_t>(n - 1)] = static_cast<double>(U) * inv;
  }
  r.u = FiniteSequence(1, std::move(u));
  // Δu_n = w_n - w_{n+1} for n >= 1.
  std::int64_t lhs_int = 0;
  for (Index n = 1; n <= 5 * M; ++n) {
    const std::int64_t d = r.W[static_cast<std::size_t>(n)] - r.W[static_cast<std::size_t>(n + 1)];
    lhs_int += d * d;
  }
  r.lhs = static_cast<double>(lhs_int) * inv * inv;
  r.rhs_partial = weighted_sum(r.u, r.u, [](Index n) { return std::pow(static_cast<double>(n), -4.0); }, IndexRange{2, M});
  return r;
}

// ---- proof chain -------------------------------------------------------------------------------

std::size_t ChainReport::violations() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const ChainStep& s) { return !s.holds; }));
}

namespace {

// Σ_{n >= a} X_n² · n^{-p} (shift = 0) or (n-1)^{-p} (shift = 1).
double wsum(const FiniteSequence& X, Index a, double p, int shift = 0) {
  if (X.is_zero() || X.last_index() < a) return 0.0;
  return weighted_sum(X, X, [p, shift](Index n) { return std::pow(static_cast<double>(n - shift), -p); },
                      IndexRange{std::max(a, X.first_index()), X.last_index()});
}

struct ChainBuilder {
  double tol;
  std::vector<ChainStep>& out;

  void push(const std::string& label, bool eq, double lhs, double rhs) {
    ChainStep s;
    s.label = label;
    s.equality = eq;
    s.lhs = lhs;
    s.rhs = rhs;
    s.slack = lhs - rhs;
    const double scale = std::abs(lhs) + std::abs(rhs);
    s.holds = eq ? std::abs(s.slack) <= tol * scale : s.slack >= -tol * scale;
    out.push_back(s);
  }

  void run(int ell, const FiniteSequence& u, const std::string& pre) {
    const std::string P = pre + "[ell=" + std::to_string(ell) + "] ";
    if (ell == 1) {
      push(P + "sum_{n>=0}|grad u|^2 >= 1/4 sum_{n>=1} u^2/n^2", false, sum_squares_from(grad(u), 0), 0.25 * wsum(u, 1, 2));
      return;
    }
    if (ell == 2) {
      const FiniteSequence v = divergence(u);
      const double a = sum_squares_from(laplace(u), 1);
      const double b = sum_squares_from(grad(v), 1);
      const double c = 0.25 * wsum(v, 1, 2);
      const double d = 0.25 * wsum(grad(u), 2, 2, 1);
      const double e = 9.0 / 16.0 * wsum(u, 2, 4);
      push(P + "sum_{n>=1}|lap u|^2 = sum_{n>=1}|grad v|^2, v = div u", true, a, b);
      push(P + "sum_{n>=1}|grad v|^2 >= 1/4 sum_{n>=1} v^2/n^2", false, b, c);
      push(P + "1/4 sum_{n>=1} v^2/n^2 = 1/4 sum_{n>=2} |grad u|^2/(n-1)^2", true, c, d);
      push(P + "1/4 sum_{n>=2} |grad u|^2/(n-1)^2 >= 9/16 sum_{n>=2} u^2/n^4 (alpha=-2)", false, d, e);
      return;
    }
    const int m = (ell - 1) / 2;
    if (ell % 2 == 1) {
      const FiniteSequence v = shift(u, 1);
      const FiniteSequence gv = grad(v);
      const double C = sharp_constant(2 * m);
      const double cm = 4.0 * m;
      const double a = sum_squares_from(grad(laplace_power(u, m)), 2 * m);
      const double b = sum_squares_from(grad(laplace_power(v, m)), 2 * m - 1);
      const double c = sum_squares_from(laplace_power(gv, m), 2 * m - 1);
      const double d = C * wsum(gv, 2 * m, cm);
      const double e = C * wsum(grad(u), 2 * m + 1, cm, 1);
      const double f = C * wsum(grad(u), 2, cm, 1);
      const double g = C * (cm + 1) * (cm + 1) / 4.0 * wsum(u, 2, cm + 2);
      const double h = sharp_constant(ell) * wsum(u, 2 * m + 1, cm + 2);
      push(P + "E1 sum_{n>=2m}|grad lap^m u|^2 = sum_{n>=2m-1}|grad lap^m v|^2, v = tau_1 u", true, a, b);
      push(P + "E2 = sum_{n>=2m-1}|lap^m grad v|^2", true, b, c);
      push(P + "G1 >= C_{2m} sum_{n>=2m} (grad v)^2/n^{4m}", false, c, d);
      run(2 * m, gv, P);
      push(P + "E3 = C_{2m} sum_{n>=2m+1} (grad u)^2/(n-1)^{4m}", true, d, e);
      push(P + "E4 = C_{2m} sum_{n>=2} (grad u)^2/(n-1)^{4m}", true, e, f);
      push(P + "G2 >= C_{2m} (4m+1)^2/4 sum_{n>=2} u^2/n^{4m+2} (alpha=-4m)", false, f, g);
      push(P + "E5 = C_{2m+1} sum_{n>=2m+1} u^2/n^{4m+2}", true, g, h);
      return;
    }
    // ell = 2m + 2 with m >= 1
    const int mm = (ell - 2) / 2;
    const FiniteSequence v = divergence(u);
    const double C = sharp_constant(2 * mm + 1);
    const double cm = 4.0 * mm + 2.0;
    const double a = sum_squares_from(laplace_power(u, mm + 1), 2 * mm + 1);
    const double b = sum_squares_from(grad(laplace_power(v, mm)), 2 * mm);
    const double c = C * wsum(v, 2 * mm + 1, cm);
    const double d = C * wsum(grad(u), 2, cm, 1);
    const double e = C * (cm + 1) * (cm + 1) / 4.0 * wsum(u, 2 * mm + 2, cm + 2);
    const double f = sharp_constant(ell) * wsum(u, 2 * mm + 2, cm + 2);
    push(P + "E1 sum_{n>=2m+1}|lap^{m+1} u|^2 = sum_{n>=2m}|grad lap^m v|^2, v = div u", true, a, b);
    push(P + "G1 sum_{n>=2m}|grad lap^m v|^2 >= C_{2m+1} sum_{n>=2m+1} v^2/n^{4m+2}", false, b, c);
    run(2 * mm + 1, v, P);
    push(P + "E2 = C_{2m+1} sum_{n>=2} (grad u)^2/(n-1)^{4m+2}", true, c, d);
    push(P + "G2 >= C_{2m+1} (4m+3)^2/4 sum_{n>=2m+2} u^2/n^{4m+4} (alpha=-4m-2)", false, d, e);
    push(P + "E3 = C_{2m+2} sum_{n>=2m+2} u^2/n^{4m+4}", true, e, f);
  }
};

}  // namespace

ChainReport iteration_chain_check(int ell, const FiniteSequence& u, double rel_tol) {
  if (ell < 1) throw std::invalid_argument("iteration_chain_check: ell >= 1");
  if (!u.is_zero() && u.first_index() < ell)
    throw std::invalid_argument("iteration_chain_check: u_k must vanish for k <= ell-1 (first nonzero index " +
                                std::to_string(u.first_index()) + ")");
  ChainReport rep;
  rep.ell = ell;
  ChainBuilder b{rel_tol, rep.steps};
  b.run(ell, u, "");
  rep.all_hold = rep.violations() == 0;
  return rep;
}

}  // namespace hardy
