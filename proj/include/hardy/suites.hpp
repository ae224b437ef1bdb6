// Randomized property suites shared by the CLI, the acceptance runner and the
// Python bindings. Instance i of a suite with master seed s uses seed s + i.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/identities.hpp"
#include "hardy/sequence.hpp"
#include "hardy/weights.hpp"

namespace hardy {

struct SuiteSummary {
  std::string name;
  std::size_t instances = 0;
  double worst = 0.0;        // max relative residual, or min relative margin
  std::size_t worst_instance = 0;
  double tolerance = 0.0;
  bool pass = true;
};

// ---- graph identities -----------------------------------------------------------

SuiteSummary identity_suite(IdentitySpec spec, std::size_t instances, std::uint64_t seed, double tol = 1e-10,
                            std::size_t max_vertices = 200, int threads = 0);
SuiteSummary lemma21_suite(std::size_t instances, std::uint64_t seed, double tol = 1e-10, std::size_t max_vertices = 200,
                           int threads = 0);
SuiteSummary green_leibniz_suite(std::size_t instances, std::uint64_t seed, double tol = 1e-10,
                                 std::size_t max_vertices = 200, int threads = 0);

// The same suites on one fixed graph (e.g. read from the interchange format);
// only the functions are random. Iterated and odd-order kinds need a vertex
// whose eccentricity exceeds the stencil reach.
SuiteSummary identity_suite_on(const Graph& g, IdentitySpec spec, std::size_t instances, std::uint64_t seed,
                               double tol = 1e-10, int threads = 0);
SuiteSummary lemma21_suite_on(const Graph& g, std::size_t instances, std::uint64_t seed, double tol = 1e-10,
                              int threads = 0);
SuiteSummary green_leibniz_suite_on(const Graph& g, std::size_t instances, std::uint64_t seed, double tol = 1e-10,
                                    int threads = 0);

// ---- inequalities on N ----------------------------------------------------------------

struct InequalityForm {
  enum class Kind { Rellich, ShiftedHardy, DirectHardy, Leray };
  Kind kind = Kind::Rellich;
  int ell = 1;         // Rellich order
  double alpha = 0.0;  // Hardy exponent

  static InequalityForm rellich(int ell) { return {Kind::Rellich, ell, 0.0}; }
  static InequalityForm shifted_hardy(double alpha) { return {Kind::ShiftedHardy, 1, alpha}; }
  static InequalityForm direct_hardy(double alpha) { return {Kind::DirectHardy, 1, alpha}; }
  static InequalityForm leray() { return {Kind::Leray, 1, 1.0}; }
  [[nodiscard]] std::string name() const;
  // Number of leading entries u_0, u_1, ... forced to zero.
  [[nodiscard]] Index first_free() const;
};

struct FormValue {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double scale = 0.0;
  [[nodiscard]] double relative() const { return scale > 0.0 ? margin / scale : 0.0; }
};

// Both sides of the theorem's inequality with its sharp constant.
// Throws std::invalid_argument when u violates the boundary conditions.
FormValue evaluate_form(const InequalityForm& form, const FiniteSequence& u);

// Σ V_n |∇u_n|² - Σ w_n u_n² for the first-order families (kpp, shifted,
// direct, leray), with w the exact weight; the value equals F >= 0.
FormValue weight_form(const WeightModel& model, const FiniteSequence& u);

// Random sequences cycling through uniform noise, sparse spikes, positive
// walks and cut-off near-optimizers.
FiniteSequence random_admissible(const InequalityForm& form, std::size_t kind, std::uint64_t seed);

// Passes iff every margin >= -tol · scale. `worst` is the min relative margin.
SuiteSummary inequality_suite(const InequalityForm& form, std::size_t trials, std::uint64_t seed, double tol = 1e-12,
                              int threads = 0);
SuiteSummary weight_form_suite(const WeightModel& model, std::size_t trials, std::uint64_t seed, double tol = 1e-12,
                               int threads = 0);

// ---- ℓ^p -------------------------------------------------------------------------------

// Picone residual on random edges with u >= 0, f > 0; `worst` = min residual / scale.
SuiteSummary picone_suite(double p, std::size_t edges, std::uint64_t seed, double tol = 1e-12);
// Landau margins on random nonnegative sequences; `worst` = min margin / scale.
SuiteSummary landau_suite(double p, std::size_t trials, std::uint64_t seed, double tol = 1e-12, int threads = 0);
// Max deviation of the p = 2 ℓ^p quantities from the quadratic ones.
SuiteSummary p2_reduction_suite(std::size_t instances, std::uint64_t seed, double tol = 1e-13);
// Weighted l^p Hardy inequality for u >= 0 on random graphs; `worst` = min margin / scale.
SuiteSummary lp_hardy_suite(double p, std::size_t instances, std::uint64_t seed, double tol = 1e-10);

}  // namespace hardy
