#include "hardy/identities.hpp"

#include <cmath>
#include <string>

#include "hardy/sum.hpp"

namespace hardy {

IdentitySpec IdentitySpec::parse(const std::string& name, int m) {
  if (name == "first" || name == "first_order") return first_order();
  if (name == "second" || name == "second_order") return second_order();
  if (name == "iterated") {
    if (m < 1) throw std::invalid_argument("iterated identity needs m >= 1");
    return iterated(m);
  }
  if (name == "odd" || name == "odd_order") {
    if (m < 0) throw std::invalid_argument("odd-order identity needs m >= 0");
    return odd_order(m);
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::string IdentitySpec::name() const {
  switch (kind) {
    case IdentityKind::FirstOrder: return "first_order";
    case IdentityKind::SecondOrder: return "second_order";
    case IdentityKind::Iterated: return "iterated(" + std::to_string(m) + ")";
    case IdentityKind::OddOrder: return "odd_order(" + std::to_string(m) + ")";
  }
  return "?";
}

HypothesisError::HypothesisError(Vertex v, int kk, double val)
    : std::domain_error("hypothesis violated: Laplacian power k=" + std::to_string(kk) + " of f is not positive at vertex " +
                        std::to_string(v) + " (value " + std::to_string(val) + ")"),
      vertex(v),
      k(kk),
      value(val) {}

namespace {

constexpr double kStrictTol = 1e-13;

void require_positive(const Graph& g, const VertexFunction& h, int k, const std::vector<Vertex>& seeds, int radius) {
  const auto region = ball(g, seeds, radius);
  double scale = 0.0;
  for (Vertex x : region) scale = std::max(scale, std::abs(h[x]));
  for (Vertex x : region)
    if (!(h[x] > kStrictTol * scale)) throw HypothesisError(x, k, h[x]);
}

void require_nonnegative(const Graph& g, const VertexFunction& h, int k, const std::vector<Vertex>& seeds, int radius) {
  for (Vertex x : ball(g, seeds, radius))
    if (h[x] < 0.0) throw HypothesisError(x, k, h[x]);
}

VertexFunction product(const VertexFunction& a, const VertexFunction& b) {
  VertexFunction r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = vf(a, i) * vf(b, i);
  return r;
}

// Sum over supp u of q(x)/f(x) u(x)^2.
double mass_term(const VertexFunction& q, const VertexFunction& f, const VertexFunction& u) {
  CompensatedSum s;
  for (Vertex x = 0; x < u.size(); ++x) {
    if (u[x] == 0.0) continue;
    s.add_product(q[x] / f[x], u[x] * u[x]);
  }
  return s.value();
}

// Sum over x of V(x) |h(x)|^2.
double weighted_square(const VertexFunction& V, const VertexFunction& h) {
  CompensatedSum s;
  for (Vertex x = 0; x < h.size(); ++x) {
    if (h[x] == 0.0) continue;
    s.add_product(vf(V, x), h[x] * h[x]);
  }
  return s.value();
}

// Sum_{k<m} [ Σ_x q_k/Δ^{k+1}f |Δ^{k+1}u - L(Δ^k f)Δ^k u|^2 + 2 F(q_k/Δ^k f, Δ^k f, Δ^k u) ]
// where q_k = Q[m-1-k].
double iterated_remainder(const Graph& g, const std::vector<VertexFunction>& Df, const std::vector<VertexFunction>& Du,
                          const std::vector<VertexFunction>& Q, int m) {
  CompensatedSum s;
  const std::size_t n = g.num_vertices();
  for (int k = 0; k < m; ++k) {
    const VertexFunction& q = Q[m - 1 - k];
    for (Vertex x = 0; x < n; ++x) {
      double r = Du[k + 1][x];
      if (Du[k][x] != 0.0) r -= Df[k + 1][x] / Df[k][x] * Du[k][x];
      if (r == 0.0) continue;
      s.add_product(q[x] / Df[k + 1][x], r * r);
    }
    const auto near = ball(g, support(Du[k]), 1);
    VertexFunction W(n, 0.0);
    for (Vertex x : near) W[x] = q[x] / Df[k][x];
    s.add(2.0 * f_functional(g, W, Df[k], Du[k]));
  }
  return s.value();
}

IdentityResult first_order(const Graph& g, const VertexFunction& V, const VertexFunction& f, const VertexFunction& u) {
  const auto supp = support(u);
  require_positive(g, f, 0, supp, 0);
  require_nonnegative(g, f, 0, supp, 1);
  const VertexFunction T = t_functional(g, V, f);
  IdentityResult r;
  CompensatedSum lhs;
  lhs.add(weighted_dirichlet_energy(g, V, u));
  lhs.add(-mass_term(T, f, u));
  r.lhs = lhs.value();
  r.rhs = f_functional(g, V, f, u);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

IdentityResult second_order(const Graph& g, const VertexFunction& V, const VertexFunction& f, const VertexFunction& u) {
  const std::size_t n = g.num_vertices();
  const auto supp = support(u);
  require_positive(g, f, 0, supp, 1);
  const VertexFunction Lf = graph_laplacian(g, f);
  const VertexFunction Lu = graph_laplacian(g, u);
  const VertexFunction q = graph_laplacian(g, product(V, Lf));
  VertexFunction L(n, 0.0);
  VertexFunction VL(n, 0.0);
  for (Vertex x : ball(g, supp, 1)) {
    L[x] = Lf[x] / f[x];
    VL[x] = vf(V, x) * L[x];
  }
  VertexFunction resid(n, 0.0);
  for (Vertex x = 0; x < n; ++x) resid[x] = Lu[x] - (vf(u, x) != 0.0 ? L[x] * vf(u, x) : 0.0);
  IdentityResult r;
  r.lhs = weighted_square(V, Lu);
  CompensatedSum rhs;
  rhs.add(mass_term(q, f, u));
  rhs.add(2.0 * f_functional(g, VL, f, u));
  rhs.add(weighted_square(V, resid));
  r.rhs = rhs.value();
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

IdentityResult iterated_or_odd(const Graph& g, const VertexFunction& V, const VertexFunction& f, const VertexFunction& u,
                               int m, bool odd) {
  const std::size_t n = g.num_vertices();
  const auto supp = support(u);
  std::vector<VertexFunction> Df{f}, Du{u};
  Df[0].resize(n, 0.0);
  Du[0].resize(n, 0.0);
  for (int k = 1; k <= m; ++k) {
    Df.push_back(graph_laplacian(g, Df.back()));
    Du.push_back(graph_laplacian(g, Du.back()));
  }
  for (int j = 0; j < m; ++j) require_positive(g, Df[j], j, supp, j + 1);
  require_positive(g, Df[m], m, supp, m);
  if (odd) require_nonnegative(g, Df[m], m, supp, m + 1);

  std::vector<VertexFunction> Q{odd ? t_functional(g, V, Df[m]) : product(V, Df[m])};
  for (int j = 1; j <= m; ++j) Q.push_back(graph_laplacian(g, Q.back()));

  IdentityResult r;
  CompensatedSum lhs;
  lhs.add(odd ? weighted_dirichlet_energy(g, V, Du[m]) : weighted_square(V, Du[m]));
  lhs.add(-mass_term(Q[m], f, u));
  r.lhs = lhs.value();
  CompensatedSum rhs;
  rhs.add(iterated_remainder(g, Df, Du, Q, m));
  if (odd) rhs.add(f_functional(g, V, Df[m], Du[m]));
  r.rhs = rhs.value();
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace

IdentityResult identity_residual(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                                 const VertexFunction& u, IdentitySpec which) {
  VertexFunction ff = f, uu = u;
  ff.resize(g.num_vertices(), 0.0);
  uu.resize(g.num_vertices(), 0.0);
  switch (which.kind) {
    case IdentityKind::FirstOrder: return first_order(g, V, ff, uu);
    case IdentityKind::SecondOrder: return second_order(g, V, ff, uu);
    case IdentityKind::Iterated:
      if (which.m < 1) throw std::invalid_argument("iterated identity needs m >= 1");
      return iterated_or_odd(g, V, ff, uu, which.m, false);
    case IdentityKind::OddOrder:
      if (which.m < 0) throw std::invalid_argument("odd-order identity needs m >= 0");
      return iterated_or_odd(g, V, ff, uu, which.m, true);
  }
  throw std::invalid_argument("unknown identity");
}

GreenLeibnizResult leibniz_green_residual(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  const std::size_t n = g.num_vertices();
  VertexFunction ff = f, hh = h;
  ff.resize(n, 0.0);
  hh.resize(n, 0.0);
  const VertexFunction Lf = graph_laplacian(g, ff);
  const VertexFunction Lh = graph_laplacian(g, hh);
  const VertexFunction Lfh = graph_laplacian(g, product(ff, hh));

  CompensatedSum a, b, c;
  double mag_a = 0.0, mag_b = 0.0, mag_c = 0.0;
  GreenLeibnizResult r;
  for (Vertex x = 0; x < n; ++x) {
    a.add_product(Lf[x], hh[x]);
    mag_a += std::abs(Lf[x] * hh[x]);
    b.add_product(ff[x], Lh[x]);
    mag_b += std::abs(ff[x] * Lh[x]);
    const double pair = grad_pairing(g, ff, hh, x);
    c.add(pair);
    for (const auto& nb : g.neighbors(x)) mag_c += 0.5 * nb.b * std::abs((ff[x] - ff[nb.v]) * (hh[x] - hh[nb.v]));

    const double rhs = ff[x] * Lh[x] + hh[x] * Lf[x] - 2.0 * pair;
    const double defect = std::abs(Lfh[x] - rhs);
    const double local = std::abs(Lfh[x]) + std::abs(ff[x] * Lh[x]) + std::abs(hh[x] * Lf[x]) + 2.0 * std::abs(pair);
    r.leibniz = std::max(r.leibniz, defect);
    if (local > 0.0) r.leibniz_rel = std::max(r.leibniz_rel, defect / local);
  }
  const double ga = std::abs(a.value() - c.value());
  const double gb = std::abs(b.value() - c.value());
  r.green = std::max(ga, gb);
  const double scale = std::max({mag_a, mag_b, mag_c});
  r.green_rel = scale > 0.0 ? r.green / scale : 0.0;
  return r;
}

double lemma21_residual(const Graph& g, const VertexFunction& V, const VertexFunction& f) {
  double worst = 0.0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const double t = t_functional(g, V, f, x);
    const double d = t_functional_divergence_form(g, V, f, x);
    double scale = 0.0;
    for (const auto& nb : g.neighbors(x))
      scale += 0.5 * nb.b * (std::abs(vf(V, x)) + std::abs(vf(V, nb.v))) * std::abs(vf(f, x) - vf(f, nb.v));
    if (scale > 0.0) worst = std::max(worst, std::abs(t - d) / scale);
    else if (t != d) worst = std::max(worst, std::abs(t - d));
  }
  return worst;
}

RellichWeight rellich_weight_from_f(const Graph& g, const VertexFunction& f, int ell, const std::vector<Vertex>& region) {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> reg = region;
  if (reg.empty())
    for (Vertex x = 0; x < n; ++x) reg.push_back(x);
  std::vector<VertexFunction> Df{f};
  Df[0].resize(n, 0.0);
  for (int k = 1; k <= ell; ++k) Df.push_back(graph_laplacian(g, Df.back()));

  RellichWeight out;
  out.weight.assign(n, 0.0);
  for (Vertex x : reg) {
    g.check_vertex(x);
    if (!(Df[0][x] > 0.0)) throw std::domain_error("rellich_weight_from_f: f is not positive at vertex " + std::to_string(x));
    out.weight[x] = Df[ell][x] / Df[0][x];
  }
  out.hypotheses_hold = true;
  for (int k = 1; k <= ell && out.hypotheses_hold; ++k) {
    for (Vertex x : reg) {
      const bool ok = (k <= ell / 2) ? Df[k][x] > 0.0 : Df[k][x] >= 0.0;
      if (!ok) {
        out.hypotheses_hold = false;
        out.failed_k = k;
        out.failed_vertex = x;
        break;
      }
    }
  }
  return out;
}

}  // namespace hardy
