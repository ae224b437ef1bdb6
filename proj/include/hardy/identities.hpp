// Residual checks for the first-order, second-order and iterated
// Hardy-Rellich equalities on graphs.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hardy/graph.hpp"

namespace hardy {

enum class IdentityKind { FirstOrder, SecondOrder, Iterated, OddOrder };

struct IdentitySpec {
  IdentityKind kind = IdentityKind::FirstOrder;
  int m = 1;  // iterated: m >= 1; odd order: m >= 0

  static IdentitySpec first_order() { return {IdentityKind::FirstOrder, 0}; }
  static IdentitySpec second_order() { return {IdentityKind::SecondOrder, 1}; }
  static IdentitySpec iterated(int m) { return {IdentityKind::Iterated, m}; }
  static IdentitySpec odd_order(int m) { return {IdentityKind::OddOrder, m}; }
  static IdentitySpec parse(const std::string& name, int m);
  [[nodiscard]] std::string name() const;
};

class HypothesisError : public std::domain_error {
 public:
  HypothesisError(Vertex vertex, int k, double value);
  Vertex vertex;
  int k;
  double value;
};

struct IdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
  // residual / (|lhs| + |rhs| + 1), the contract quantity.
  [[nodiscard]] double relative() const { return residual / (std::abs(lhs) + std::abs(rhs) + 1.0); }
};

// Evaluates both sides exactly as written. Throws HypothesisError when some
// Δ^k f fails strict positivity within stencil reach of supp u.
IdentityResult identity_residual(const Graph& g, const VertexFunction& V, const VertexFunction& f,
                                 const VertexFunction& u, IdentitySpec which);

struct GreenLeibnizResult {
  double green = 0.0;        // max of |<Δf,g> - <∇f,∇g>| and |<f,Δg> - <∇f,∇g>|
  double leibniz = 0.0;      // max over x of the pointwise Leibniz defect
  double green_rel = 0.0;    // green relative to the summed term magnitudes
  double leibniz_rel = 0.0;  // pointwise defect relative to the local term magnitudes
  [[nodiscard]] double relative() const { return std::max(green_rel, leibniz_rel); }
};

GreenLeibnizResult leibniz_green_residual(const Graph& g, const VertexFunction& f, const VertexFunction& h);

// Max over x of |T(V,f)(x) + div(V∇f)(x)| relative to the edge magnitudes.
double lemma21_residual(const Graph& g, const VertexFunction& V, const VertexFunction& f);

struct RellichWeight {
  VertexFunction weight;  // Δ^ℓ f / f on the queried region, 0 elsewhere
  bool hypotheses_hold = false;
  int failed_k = -1;
  Vertex failed_vertex = 0;
};

// Δ^ℓ f / f with certificate of Δ^k f > 0 (k <= ℓ/2) and Δ^i f >= 0 (ℓ/2 < i <= ℓ)
// on the region (all vertices when empty).
RellichWeight rellich_weight_from_f(const Graph& g, const VertexFunction& f, int ell,
                                    const std::vector<Vertex>& region = {});

}  // namespace hardy
