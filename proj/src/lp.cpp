#include "hardy/lp.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <stdexcept>
#include <string>

#include "hardy/sum.hpp"

namespace hardy {

namespace {

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must be a finite real > 1");
}

double positive_f(const VertexFunction& f, Vertex x) {
  const double v = vf(f, x);
  if (!(v > 0.0)) throw std::domain_error("f must be positive at vertex " + std::to_string(x));
  return v;
}

}  // namespace

double signed_power(double t, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("signed_power: beta must be > 0");
  if (t == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(t), beta), t);
}

double lp_grad_norm(const Graph& g, const VertexFunction& u, double p, Vertex x) {
  check_p(p);
  g.check_vertex(x);
  const double ux = vf(u, x);
  CompensatedSum s;
  for (const auto& nb : g.neighbors(x)) {
    const double d = std::abs(ux - vf(u, nb.v));
    if (d == 0.0) continue;
    s.add(0.5 * std::pow(nb.b, p - 1.0) * std::pow(d, p));
  }
  return s.value();
}

double picone_residual(const Graph& g, const VertexFunction& u, const VertexFunction& f, double p, Vertex x, Vertex y) {
  check_p(p);
  if (g.weight(x, y) == 0.0) throw std::invalid_argument("picone_residual: vertices are not adjacent");
  const double fx = positive_f(f, x), fy = positive_f(f, y);
  const double ux = vf(u, x), uy = vf(u, y);
  const double grad_u = std::pow(std::abs(ux - uy), p);
  const double q = signed_power(ux, p) / std::pow(fx, p - 1.0) - signed_power(uy, p) / std::pow(fy, p - 1.0);
  return grad_u - q * signed_power(fx - fy, p - 1.0);
}

double lp_hardy_weight(const Graph& g, const VertexFunction& V, const VertexFunction& f, double p, Vertex x) {
  check_p(p);
  g.check_vertex(x);
  const double fx = positive_f(f, x);
  // -div F with F(x,y) = V(x) b^{p-2} (f(x) - f(y))^{p-1} reduces, by antisymmetry,
  // to ½ Σ b^{p-1} (V(x) + V(y)) (f(x) - f(y))^{p-1}.
  const EdgeFunction F = EdgeFunction::from(g, [&](Vertex a, Vertex b) {
    return vf(V, a) * std::pow(g.weight(a, b), p - 2.0) * signed_power(vf(f, a) - vf(f, b), p - 1.0);
  });
  return -edge_divergence(g, F, x) / std::pow(fx, p - 1.0);
}

LpHardyCheck lp_hardy_check(const Graph& g, const VertexFunction& V, const VertexFunction& f, const VertexFunction& u,
                            double p) {
  check_p(p);
  CompensatedSum lhs, rhs;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const double ux = vf(u, x);
    if (ux < 0.0) throw std::invalid_argument("lp_hardy_check: u must be nonnegative");
    const double vx = vf(V, x);
    if (vx != 0.0) lhs.add(vx * lp_grad_norm(g, u, p, x));
    if (ux != 0.0) rhs.add(lp_hardy_weight(g, V, f, p, x) * std::pow(ux, p));
  }
  LpHardyCheck r;
  r.lhs = lhs.value();
  r.rhs = rhs.value();
  r.margin = (lhs.value_dd() - rhs.value_dd()).to_double();
  r.scale = std::abs(r.lhs) + std::abs(r.rhs);
  return r;
}

namespace {

// Σ_{n >= M} n^{-p} by Euler-Maclaurin; `err` bounds the truncation error.
double zeta_tail(double p, double M, double& err) {
  const double mp = std::pow(M, -p);
  double s = M * mp / (p - 1.0) + 0.5 * mp;
  s += p * mp / M / 12.0;
  s -= p * (p + 1) * (p + 2) * mp / (M * M * M) / 720.0;
  s += p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * mp / std::pow(M, 5) / 30240.0;
  err = p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * (p + 5) * (p + 6) * mp / std::pow(M, 7) / 1209600.0;
  return s;
}

// Σ_{n=N+1}^{N+kLandauExplicitTail} n^{-p}, memoized per thread.
double explicit_tail(double p, Index N) {
  thread_local std::map<std::pair<double, Index>, double> cache;
  const auto key = std::make_pair(p, N);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CompensatedSum s;
  for (Index n = N + 1; n <= N + kLandauExplicitTail; ++n) s.add(std::pow(static_cast<double>(n), -p));
  if (cache.size() > 4096) cache.clear();
  return cache[key] = s.value();
}

}  // namespace

LandauResult landau_check(const FiniteSequence& a, double p) {
  check_p(p);
  LandauResult r;
  if (a.is_zero()) return r;
  if (a.first_index() < 1) throw std::invalid_argument("landau_check: sequence must be supported in n >= 1");
  for (double v : a.values())
    if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("landau_check: entries must be finite and nonnegative");

  const double c = std::pow((p - 1.0) / p, p);
  const Index N = a.last_index();
  CompensatedSum prefix, lhs, rhs;
  for (Index n = 1; n <= N; ++n) {
    const double an = a.at(n);
    prefix.add(an);
    if (an != 0.0) rhs.add(std::pow(an, p));
    lhs.add(std::pow(prefix.value() / static_cast<double>(n), p));
  }
  const double S = prefix.value();
  const double Sp = std::pow(S, p);
  lhs.add(Sp * explicit_tail(p, N));
  double err = 0.0;
  r.tail = Sp * zeta_tail(p, static_cast<double>(N + kLandauExplicitTail + 1), err);
  r.tail_error = Sp * err;
  lhs.add(r.tail);

  r.lhs = c * lhs.value();
  r.tail *= c;
  r.tail_error *= c;
  r.rhs = rhs.value();
  r.margin = r.rhs - r.lhs;
  r.scale = std::abs(r.lhs) + std::abs(r.rhs);
  return r;
}

}  // namespace hardy
