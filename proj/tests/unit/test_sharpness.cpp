#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/sharpness.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::Real;

namespace {

FiniteSequence random_admissible(std::mt19937_64& rng, int ell, Index N) {
  std::uniform_real_distribution<double> U(-1, 1);
  std::vector<double> v(static_cast<std::size_t>(N - ell + 1));
  for (auto& x : v) x = U(rng);
  return {ell, v};
}

double lhs_energy(const FiniteSequence& u, int ell) {
  const auto h = half_laplace_power(u, BoundaryOrder(ell));
  double s = 0.0;
  for (Index n = ell - 1; n <= h.last_index(); ++n) s += h.at(n) * h.at(n);
  return s;
}

}  // namespace

TEST_SUITE("sharpness") {
  TEST_CASE("assemble_form: l = 1, N = 2") {
    const auto F = assemble_form(1, 2);
    REQUIRE(F.size() == 2);
    CHECK(F.A(0, 0) == 2.0);
    CHECK(F.A(1, 1) == 2.0);
    CHECK(F.A(0, 1) == -1.0);
    CHECK(F.A(1, 0) == -1.0);
    CHECK(F.B(0) == 1.0);
    CHECK(F.B(1) == 0.25);
  }

  TEST_CASE("assemble_form: l = 2 interior band is the squared Laplacian stencil") {
    const auto F = assemble_form(2, 40);
    const std::size_t i = 20;
    CHECK(F.A(i, i) == 6.0);
    CHECK(F.A(i, i - 1) == -4.0);
    CHECK(F.A(i, i + 1) == -4.0);
    CHECK(F.A(i, i - 2) == 1.0);
    CHECK(F.A(i, i + 2) == 1.0);
    CHECK(F.A(i, i + 3) == 0.0);
    CHECK_THROWS(assemble_form(0, 10));
    CHECK_THROWS(assemble_form(3, 2));
  }

  TEST_CASE("u^T A u equals the half-Laplacian energy") {
    std::mt19937_64 rng(1);
    for (int ell = 1; ell <= 5; ++ell) {
      for (int t = 0; t < 100 / 5; ++t) {
        const Index N = ell + 1 + static_cast<Index>(rng() % 60);
        const auto F = assemble_form(ell, N);
        const auto u = random_admissible(rng, ell, N);
        const double e = lhs_energy(u, ell);
        CHECK(std::abs(F.quadratic_A(u) - e) <= 1e-12 * e);
        double b = 0.0;
        for (Index n = ell; n <= N; ++n) b += u.at(n) * u.at(n) * std::pow(double(n), -2.0 * ell);
        CHECK(F.quadratic_B(u) == doctest::Approx(b).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("min_generalized_eig") {
    const auto r = min_generalized_eig(assemble_form(1, 2));
    CHECK(std::abs(r.lambda_min - (5.0 - std::sqrt(13.0))) <= 1e-12);
    CHECK(r.residual_rel <= 1e-10);

    const auto a = min_generalized_eig(assemble_form(1, 1000));
    const auto b = min_generalized_eig(assemble_form(1, 10000));
    CHECK(b.lambda_min > 0.25);
    CHECK(b.lambda_min < 5.0 - std::sqrt(13.0));
    CHECK(b.lambda_min < a.lambda_min);
    CHECK(min_generalized_eig(assemble_form(2, 1000)).lambda_min > 9.0 / 16.0);
  }

  TEST_CASE("eigenvector is a Rayleigh minimizer") {
    const auto F = assemble_form(2, 200);
    const auto r = min_generalized_eig(F);
    const double rq = F.quadratic_A(r.eigvec) / F.quadratic_B(r.eigvec);
    CHECK(rq == doctest::Approx(r.lambda_min).epsilon(1e-10));
    double peak = 0.0;
    for (double v : r.eigvec.values()) peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("sharp_constant") {
    CHECK(sharp_constant(1) == 0.25);
    CHECK(sharp_constant(2) == 9.0 / 16.0);
    CHECK(sharp_constant(3) == 225.0 / 64.0);
    for (int ell = 1; ell <= 10; ++ell) {
      const auto want = oracle::sharp_constant(ell);
      const auto got = sharp_constant_rational(ell);
      CHECK(oracle::BigInt(got.num()) == want.numerator());
      CHECK(oracle::BigInt(got.den()) == want.denominator());
      CHECK(sharp_constant(ell) == doctest::Approx(oracle::to_double(want)).epsilon(1e-15));
      const DD dd = sharp_constant_dd(ell);
      const oracle::Real q = oracle::Real(want.numerator()) / oracle::Real(want.denominator());
      CHECK(oracle::to_double(abs((oracle::Real(dd.hi) + oracle::Real(dd.lo) - q) / q)) <= 1e-30);
    }
  }

  TEST_CASE("eig_sweep") {
    const auto s1 = eig_sweep(1, {100, 1000, 10000});
    CHECK(s1.strictly_decreasing);
    CHECK(s1.above_constant);
    for (const auto& row : s1.rows) CHECK(row.result.lambda_min > 0.25);

    const auto s2 = eig_sweep(2, {100, 1000});
    CHECK(s2.nonincreasing);
    CHECK(s2.rows[1].result.lambda_min > 0.5625);

    const auto one = eig_sweep(3, {300});
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].result.lambda_min == min_generalized_eig(assemble_form(3, 300)).lambda_min);
  }

  TEST_CASE("with rows n >= l-1 the constant fails at l = 4") {
    // Rows n < ℓ-1 of Δ²u still see u_ℓ.. for ℓ = 4, and dropping them breaks the bound.
    const auto s = eig_sweep(4, {50, 200, 500});
    CHECK(s.strictly_decreasing);
    CHECK(s.rows[0].result.lambda_min > sharp_constant(4));
    const auto& r = s.rows[2].result;
    CHECK(r.lambda_min < sharp_constant(4));

    // Certify with 50-digit arithmetic on the (rounded) eigenvector itself.
    std::vector<Real> d(510, Real(0));
    for (Index n = r.eigvec.first_index(); n <= r.eigvec.last_index(); ++n) d[static_cast<std::size_t>(n)] = r.eigvec.at(n);
    Real a = 0, b = 0;
    for (Index n = 3; n <= 503; ++n) {
      const Real t = oracle::half_laplace_at(d, 4, n);
      a += t * t;
    }
    for (Index n = 4; n <= 500; ++n) b += d[static_cast<std::size_t>(n)] * d[static_cast<std::size_t>(n)] / boost::multiprecision::pow(Real(n), 8);
    const double rq = oracle::to_double(a / b);
    CHECK(rq == doctest::Approx(r.lambda_min).epsilon(1e-9));
    CHECK(rq < 0.6 * oracle::to_double(Real(oracle::sharp_constant(4).numerator()) / Real(oracle::sharp_constant(4).denominator())));
  }

  TEST_CASE("continuum_probe") {
    const auto z = continuum_probe(TestFunction::zero(), 64, 2);
    CHECK(z.discrete_lhs == 0.0);
    CHECK(z.discrete_rhs == 0.0);
    CHECK(z.continuous_lhs == 0.0);
    CHECK(z.continuous_rhs == 0.0);

    const auto a = continuum_probe(TestFunction::bump(), 512, 2);
    const auto b = continuum_probe(TestFunction::bump(), 1024, 2);
    const double ea = std::abs(a.discrete_lhs - a.continuous_lhs), eb = std::abs(b.discrete_lhs - b.continuous_lhs);
    CHECK(eb < ea);
    CHECK(std::log2(ea / eb) >= 0.9);
    CHECK(b.discrete_lhs / b.discrete_rhs >= 9.0 / 16.0);
    CHECK_THROWS(continuum_probe(TestFunction::bump(), 16, 2));
  }

  TEST_CASE("continuum_probe polynomial test functions integrate exactly") {
    // φ = x^3 (1-x)^3, ℓ = 2: ∫|φ''|² and ∫φ²/x⁴ are rational.
    const auto r = continuum_probe(TestFunction::polynomial(3, 3), 64, 2);
    // φ'' = 6x - 36x² + 60x³ - 30x⁴; ∫φ''² = 2/35 and ∫φ²/x⁴ = ∫x²(1-x)⁶ = 1/252.
    CHECK(r.continuous_lhs == doctest::Approx(2.0 / 35.0).epsilon(1e-13));
    CHECK(r.continuous_rhs == doctest::Approx(1.0 / 252.0).epsilon(1e-13));
  }

  TEST_CASE("counterexample_build") {
    const auto c2 = counterexample_build(2);
    const std::vector<std::int64_t> W{5, 5, 2, 0, -2, -4, -3, -2, -1, 0};  // 4·w_n, n = 1..10
    for (std::size_t n = 1; n <= 10; ++n) CHECK(c2.W[n] == W[n - 1]);
    CHECK(c2.sum_W == 0);
    for (Index M : {2, 10, 100, 1000}) {
      const auto c = counterexample_build(M);
      CHECK(c.sum_W == 0);
      CHECK(c.u.at(1) == doctest::Approx(1.0 + 1.0 / (2.0 * double(M))).epsilon(1e-15));
      double z = 0.0;
      for (Index n = 2; n <= M; ++n) z += 1.0 / double(n * n);
      CHECK(c.rhs_partial >= z * (1.0 - 1e-15));
    }
    const auto a = counterexample_build(100), b = counterexample_build(10000);
    const double Ka = a.lhs * 100, Kb = b.lhs * 10000;
    CHECK(std::max(Ka, Kb) / std::min(Ka, Kb) <= 1.5);
    CHECK(b.ratio() > 10.0 * a.ratio());
    CHECK_THROWS(counterexample_build(1));
  }

  TEST_CASE("iteration_chain_check") {
    const auto z = iteration_chain_check(2, FiniteSequence());
    for (const auto& s : z.steps) CHECK(s.slack == 0.0);
    CHECK(z.all_hold);

    for (auto u : {FiniteSequence(2, {1.0, 1.0}), FiniteSequence(2, {1.0, -0.5}), FiniteSequence(2, {0.3, 2.0, -1.0})}) {
      const auto r = iteration_chain_check(2, u);
      CHECK(r.all_hold);
      for (const auto& s : r.steps)
        if (!s.equality) CHECK(s.slack > 0.0);
    }

    std::mt19937_64 rng(3);
    std::size_t violated = 0;
    for (int t = 0; t < 100; ++t) violated += iteration_chain_check(3, random_admissible(rng, 3, 3 + rng() % 40)).violations();
    CHECK(violated == 0);
    CHECK_THROWS(iteration_chain_check(3, FiniteSequence(2, {1.0})));
  }
}
