// Weighted Hardy weights on Z^d (d >= 2) for V = |x|^α, f = |x|^{2γ}, the
// Z^2 Leray weight, and box-truncated checks of the weighted Hardy inequality.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardy/dd.hpp"
#include "hardy/graph.hpp"

namespace hardy {

using Point = std::vector<std::int64_t>;

double norm2(const Point& x);  // |x|², exact for |x|² < 2^53
double norm(const Point& x);

// The box [-R, R]^d. Points with |x|_∞ = R form the collar, where lattice
// functions are forced to zero, so every stencil of a support point is inside.
class BoxDomain {
 public:
  BoxDomain(int d, std::int64_t R, std::vector<Point> excluded = {});
  // Box with the origin excluded.
  static BoxDomain punctured(int d, std::int64_t R);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] std::int64_t R() const { return R_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] const std::vector<Point>& excluded() const { return excluded_; }
  [[nodiscard]] bool contains(const Point& x) const;
  [[nodiscard]] bool in_collar(const Point& x) const;
  [[nodiscard]] bool is_excluded(const Point& x) const;
  [[nodiscard]] std::size_t index(const Point& x) const;  // throws out_of_range outside the box
  [[nodiscard]] Point point(std::size_t i) const;
  [[nodiscard]] std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

 private:
  int d_;
  std::int64_t R_;
  std::vector<Point> excluded_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

class LatticeFunction {
 public:
  explicit LatticeFunction(BoxDomain box);
  [[nodiscard]] const BoxDomain& box() const { return box_; }
  // Zero outside the box.
  [[nodiscard]] double at(const Point& x) const;
  // Rejects collar and excluded points (std::invalid_argument).
  void set(const Point& x, double value);
  [[nodiscard]] const std::vector<double>& values() const { return values_; }

 private:
  BoxDomain box_;
  std::vector<double> values_;
};

// Σ_{i,±} (u(x) - u(x ± e_i)); x must lie in the box minus its collar.
double zd_laplacian(const LatticeFunction& u, const Point& x);

// The box as a graph_core graph with b ≡ 1; vertex ids are box indices.
Graph box_graph(const BoxDomain& box);

// γ = (2 - d - α)/4.
double zd_gamma(double alpha, int d);

// -div(V∇f)(x)/f(x) with V = |x|^α, f = |x|^{2γ}; neighbors equal to the
// origin are skipped. Throws invalid_argument for α <= 2 - d or x = 0.
double zd_weight_exact(double alpha, int d, const Point& x);
DD zd_weight_exact_dd(double alpha, int d, const Point& x);

enum class AnisotropicCoefficient { Derived, Printed };

// Coefficients of |x|^{α-2}, |x|^{α-4} and of Σx_i⁴ |x|^{α-8}.
double zd_leading_coefficient(double alpha, int d);
double zd_isotropic_coefficient(double alpha, int d);
double zd_anisotropic_coefficient(double alpha, int d, AnisotropicCoefficient which = AnisotropicCoefficient::Derived);

// order 1: leading term; order 2: adds both |x|^{α-4}-order terms.
// Empty when |x| < 5.
std::optional<double> zd_weight_asymptotic(double alpha, int d, const Point& x, int order,
                                           AnisotropicCoefficient which = AnisotropicCoefficient::Derived);

struct ZdTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double lhs = 0.0;            // Σ_{x≠0} |x|^α |∇u|²(x)
  double rhs = 0.0;            // Σ w(x) u(x)²
  double margin = 0.0;         // lhs - rhs
  double scale = 0.0;          // |lhs| + |rhs|
  double f_functional = 0.0;   // F(V, f, u) on Z^d \ {0}
  double origin_term = 0.0;    // ½ Σ_{x~0} V(x) u(x)²
  double identity_residual = 0.0;  // |margin - F - origin_term| / scale
};

struct ZdReport {
  double alpha = 0.0;
  int d = 2;
  std::int64_t R = 0;
  std::uint64_t seed = 0;
  std::vector<ZdTrial> trials;
  double min_margin_rel = 0.0;  // min margin/scale over nonzero trials
  double max_identity_residual = 0.0;
  bool pass = true;             // every margin >= -1e-12 · scale
};

// Trial t uses seed + t. Supports cycle through dense random, sparse random
// and near-optimal u = f·(cutoff)·(1 + noise).
ZdReport zd_inequality_check(double alpha, int d, std::int64_t R, std::size_t trials, std::uint64_t seed,
                             int threads = 0);

struct LeadingRatioRow {
  std::int64_t t = 0;
  double exact = 0.0;
  double ratio = 0.0;   // w_exact · |x|^{2-α} / ((d-2+α)²/4) on x = (t, 0, ..., 0)
  double remainder = 0.0;  // w_exact - order-2 asymptotic
};
std::vector<LeadingRatioRow> leading_ratio_table(double alpha, int d, const std::vector<std::int64_t>& ts);

struct PowerFit {
  double exponent = 0.0;
  double prefactor = 0.0;
};
// Least-squares fit of log|y| = log c + e log x.
PowerFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

// Δf(x)/f(x) on Z^2 with f = (ln|x|)^{1/2}; requires |x| >= 2.
double leray_z2_weight(const Point& x);
// 1/(4|x|²ln²|x|) + (2S - 3/2)/(|x|⁴ ln|x|), S = Σx_i⁴/|x|⁴.
double leray_z2_asymptotic(const Point& x);
// Smallest c such that w >= 1/(4|x|²ln²) - 12/(|x|⁴ ln) - c/(|x|⁴ ln²) on the
// lattice points with r_min <= |x| <= r_max.
double leray_z2_fit_c(double r_min, double r_max);

}  // namespace hardy
