// Hardy and Rellich weight sequences on N with paired closed-form and series
// evaluation, plus their exact leading coefficients.
#pragma once

#include <string>
#include <vector>

#include "hardy/dd.hpp"
#include "hardy/rational.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

enum class EvalMode { Direct, Series, Auto };

EvalMode parse_eval_mode(const std::string& s);
std::string to_string(EvalMode m);

// ---- kpp: w_n = Δ√n/√n -------------------------------------------------
double kpp_weight(Index n, EvalMode mode = EvalMode::Auto);
double kpp_weight_direct(Index n);
double kpp_weight_series(Index n);
// Coefficient of n^{-2k}: C(4k,2k) / (2^{4k-1}(4k-1)), k >= 1.
Rational kpp_coefficient(int k);

// ---- shifted Hardy: V_n = (n-1)^α, f_n = n^{(1-α)/2}, α < 0 --------------
// n^α H_α(1/n).
double shifted_hardy_weight(double alpha, Index n, EvalMode mode = EvalMode::Auto);
// Taylor coefficients h_k of H_α about 0 (h_0 = h_1 = 0).
std::vector<double> shifted_hardy_taylor(double alpha, int order);

// ---- direct Hardy: V_n = n^α, α >= 0 -------------------------------------
struct BoundedValue {
  double value = 0.0;
  double bound = 0.0;
  [[nodiscard]] double margin() const { return value - bound; }
};
// α <= 1 uses f_n = n^{(1-α)/2}; α > 1 uses f_n = (n+1)^{(1-α)/2}, f_0 = 0.
BoundedValue direct_hardy_weight(double alpha, Index n, EvalMode mode = EvalMode::Auto);

// ---- Leray: V_n = n, f_n = √(ln n), f_1 = ε, f_0 = 0 ---------------------
struct LerayValue {
  double bound = 0.0;  // 1/(4 n (ln n)^2)
  double exact = 0.0;  // -div(V∇f)_n / f_n
  [[nodiscard]] double margin() const { return exact - bound; }
};
inline constexpr double kLerayEpsilon = 1e-6;
LerayValue leray_weight(Index n, EvalMode mode = EvalMode::Auto, double eps = kLerayEpsilon);

// ---- improved ℓ = 2 weight -------------------------------------------------
// (1/4) n^{-2} H_{-2}(1/n) + Σ_{k>=2} C(4k,2k)(2k+1)^2/((4k-1)2^{4k+1}) n^{-2k-2}.
double improved_rellich2_weight(Index n, EvalMode mode = EvalMode::Auto, int terms = 64);
// a_k = (k+1) - C(2k,k)/4^k - (-1)^k 3 C(2k-4,k-2)/(4^{k-1} k(k-1)), k >= 2.
Rational improved_a(int k);
double improved_a_double(int k);
// Exact coefficient of n^{-j} in the improved weight, j >= 4.
Rational improved_rellich2_coefficient(int j);

// ---- reference series w̃_n ---------------------------------------------------
double gks_reference_weight(Index n, EvalMode mode = EvalMode::Series, int terms = 64);
// Coefficient of n^{-2k-2}: 6 (4^k - 1)/4^{2k} · (4k)!/((2k)!(2k+2)!).
Rational gks_coefficient(int k);

// ---- Landau constant ((p-1)/p)^p n^{-p} ------------------------------------
double landau_weight(double p, Index n);

// Named family with parameter, evaluation mode and validity range.
class WeightModel {
 public:
  enum class Family { Kpp, GksReference, ShiftedHardy, DirectHardy, Leray, ImprovedRellich2, LandauConstant };

  WeightModel(Family family, double param = 0.0, EvalMode mode = EvalMode::Auto, Index crossover_n = 64);
  static WeightModel parse(const std::string& name, double param = 0.0);
  static std::vector<std::string> family_names();

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] double param() const { return param_; }
  [[nodiscard]] EvalMode mode() const { return mode_; }
  [[nodiscard]] Index crossover_n() const { return crossover_n_; }
  [[nodiscard]] std::string name() const;
  // Smallest n at which the weight is defined.
  [[nodiscard]] Index min_n() const;
  // Number of leading u_k (k = 0, 1, ...) that must vanish.
  [[nodiscard]] int leading_zeros() const;

  [[nodiscard]] double direct(Index n) const;
  [[nodiscard]] double series(Index n) const;
  [[nodiscard]] double operator()(Index n) const;
  // Certified lower bound proven for the family.
  [[nodiscard]] double bound(Index n) const;

 private:
  [[nodiscard]] double eval(Index n, EvalMode m) const;
  Family family_;
  double param_;
  EvalMode mode_;
  Index crossover_n_;
};

}  // namespace hardy
