// ℓ^p Hardy machinery on weighted graphs and the Landau-Hardy inequality on N.
#pragma once

#include "hardy/graph.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

// |t|^{β-1} t; requires β > 0.
double signed_power(double t, double beta);

// ½ Σ_{y~x} b(x,y)^{p-1} |u(x) - u(y)|^p.
double lp_grad_norm(const Graph& g, const VertexFunction& u, double p, Vertex x);

// |∇u|^p - ∇(u^p/f^{p-1}) (∇f)^{p-1} on the edge x~y, with ∇h(x,y) = h(x) - h(y)
// and signed powers. Nonnegative for u >= 0, zero for u = c f.
double picone_residual(const Graph& g, const VertexFunction& u, const VertexFunction& f, double p, Vertex x, Vertex y);

// -div[V (∇f)_b^{p-1}](x) / f(x)^{p-1}, with (∇f)_b^{p-1}(x,y) = b^{p-2} (∇f(x,y))^{p-1}.
// Throws std::domain_error when f(x) <= 0.
double lp_hardy_weight(const Graph& g, const VertexFunction& V, const VertexFunction& f, double p, Vertex x);

struct LpHardyCheck {
  double lhs = 0.0;     // Σ V |∇u|_p^p
  double rhs = 0.0;     // Σ w u^p
  double margin = 0.0;  // lhs - rhs
  double scale = 0.0;   // |lhs| + |rhs|
};
// Σ V|∇u|_p^p >= Σ w u^p for u >= 0 finitely supported; w is evaluated on supp u, where f > 0 is required.
LpHardyCheck lp_hardy_check(const Graph& g, const VertexFunction& V, const VertexFunction& f, const VertexFunction& u,
                            double p);

struct LandauResult {
  double lhs = 0.0;  // ((p-1)/p)^p Σ_{n>=1} (A_n/n)^p, A_n = a_1 + ... + a_n
  double rhs = 0.0;  // Σ a_n^p
  double margin = 0.0;
  double scale = 0.0;
  double tail = 0.0;        // part of lhs beyond the explicit terms (Euler-Maclaurin)
  double tail_error = 0.0;  // bound on the error of `tail`
};
inline constexpr Index kLandauExplicitTail = 10000;

// Requires p > 1 and a_n >= 0, with a supported in n >= 1.
LandauResult landau_check(const FiniteSequence& a, double p);

}  // namespace hardy
