// Optimality probes for the order-ℓ Rellich inequality on N: banded
// generalized eigenproblems, the continuum limit, the boundary-condition
// counterexample and the inductive proof chain.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/dd.hpp"
#include "hardy/rational.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

// Quadratic forms over unknowns u_ℓ..u_N (all other u_k = 0):
//   uᵀAu = Σ_{n >= ℓ-1} |Δ^{ℓ/2}u_n|²,  uᵀBu = Σ_{n=ℓ}^N u_n²/n^{2ℓ}.
class BandedForm {
 public:
  BandedForm(int ell, Index N);

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] Index N() const { return N_; }
  [[nodiscard]] Index first() const { return ell_; }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(N_ - ell_ + 1); }
  [[nodiscard]] int halfwidth() const { return ell_; }
  // Entry A(i,j) by unknown index (0 ↔ u_ℓ); 0 outside the band.
  [[nodiscard]] double A(std::size_t i, std::size_t j) const;
  [[nodiscard]] double B(std::size_t i) const { return b_[i]; }
  // Coefficients t_j of (Δ^{ℓ/2}u)_n = Σ_k t_{n-k} u_k, j from stencil_lo().
  [[nodiscard]] const std::vector<double>& stencil() const { return t_; }
  [[nodiscard]] Index stencil_lo() const { return t_lo_; }
  // First and last row n of the difference operator.
  [[nodiscard]] Index row_lo() const { return ell_ - 1; }
  [[nodiscard]] Index row_hi() const { return N_ + (ell_ + 1) / 2; }

  // uᵀAu and uᵀBu for a sequence supported in [ℓ, N] (throws otherwise).
  [[nodiscard]] double quadratic_A(const FiniteSequence& u) const;
  [[nodiscard]] double quadratic_B(const FiniteSequence& u) const;

 private:
  int ell_;
  Index N_;
  std::vector<double> band_;  // band_[i*(ell+1) + d] = A(i, i-d)
  std::vector<double> b_;
  std::vector<double> t_;
  Index t_lo_ = 0;
};

BandedForm assemble_form(int ell, Index N);

struct RayleighResult {
  double lambda_min = 0.0;
  FiniteSequence eigvec;  // normalized to max |v| = 1, positive at its peak
  int iterations = 0;
  double residual = 0.0;      // ‖Av - λBv‖
  double residual_rel = 0.0;  // residual / ‖Av‖
};

struct EigOptions {
  double tol = 1e-12;
  int max_iter = 2000;
  std::uint64_t seed = 0;
};

// Smallest λ with Av = λBv by shifted inverse iteration on a double-double
// banded Cholesky factorization of A - σB.
RayleighResult min_generalized_eig(const BandedForm& form, const EigOptions& opt = {});

// [(2ℓ)!/(4^ℓ ℓ!)]².
double sharp_constant(int ell);
DD sharp_constant_dd(int ell);
Rational sharp_constant_rational(int ell);  // ℓ <= 10

struct SweepRow {
  Index N = 0;
  RayleighResult result;
};
struct SweepReport {
  int ell = 1;
  std::vector<SweepRow> rows;
  bool nonincreasing = true;
  bool strictly_decreasing = true;
  bool above_constant = true;
};
// Rows are returned in the order of N_list; solves run on up to `threads` threads.
SweepReport eig_sweep(int ell, const std::vector<Index>& N_list, const EigOptions& opt = {}, int threads = 0);

// ---- continuum limit -----------------------------------------------------------

struct TestFunction {
  enum class Kind { Bump, Zero, Polynomial };
  Kind kind = Kind::Bump;
  int p = 0, q = 0;  // Polynomial: x^p (1-x)^q on [0,1]

  static TestFunction bump() { return {}; }
  static TestFunction zero() { return {Kind::Zero, 0, 0}; }
  static TestFunction polynomial(int p, int q) { return {Kind::Polynomial, p, q}; }
  static TestFunction parse(const std::string& s);
  [[nodiscard]] std::string name() const;
  // k-th derivative at x (k = 0 gives the value); 0 outside (0,1).
  [[nodiscard]] double derivative(double x, int k) const;
};

struct ContinuumResult {
  double discrete_lhs = 0.0;    // Σ_{n >= ℓ-1} |Δ^{ℓ/2} w_n|²
  double discrete_rhs = 0.0;    // Σ_{n >= ℓ} w_n² / n^{2ℓ}
  double continuous_lhs = 0.0;  // ∫ |φ^{(ℓ)}|²
  double continuous_rhs = 0.0;  // ∫ φ² / x^{2ℓ}
};
// w_n = M^{ℓ-1/2} φ(n/M), with w_k = 0 forced for k < ℓ.
ContinuumResult continuum_probe(const TestFunction& phi, Index M, int ell);

// ---- counterexample --------------------------------------------------------------

struct CounterexampleResult {
  Index M = 0;
  std::vector<std::int64_t> W;  // W[n] = 2M·w_n, n = 0..5M
  std::int64_t sum_W = 0;
  FiniteSequence u;  // u_n = Σ_{k<=n} w_k
  double lhs = 0.0;  // Σ_{n>=1} |Δu_n|²
  double rhs_partial = 0.0;  // Σ_{n=2}^M u_n²/n⁴
  [[nodiscard]] double ratio() const { return rhs_partial / lhs; }
};
CounterexampleResult counterexample_build(Index M);

// ---- proof chain -------------------------------------------------------------------

struct ChainStep {
  std::string label;
  bool equality = false;  // '=' step, otherwise '>='
  double lhs = 0.0, rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool holds = true;
};
struct ChainReport {
  int ell = 1;
  std::vector<ChainStep> steps;
  bool all_hold = true;
  [[nodiscard]] std::size_t violations() const;
};
// Throws std::invalid_argument unless u_k = 0 for k <= ℓ-1 and k < 0.
ChainReport iteration_chain_check(int ell, const FiniteSequence& u, double rel_tol = 1e-12);

}  // namespace hardy
