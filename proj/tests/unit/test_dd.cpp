#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/dd.hpp"
#include "hardy/rational.hpp"
#include "hardy/sum.hpp"
#include "oracles.hpp"

using hardy::DD;
using oracle::Real;

namespace {

Real to_real(const DD& a) { return Real(a.hi) + Real(a.lo); }

double rel_err(const DD& got, const Real& want) {
  return oracle::to_double(abs((to_real(got) - want) / want));
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("double-double arithmetic against 50-digit floats") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
      const DD a = DD(U(rng)) / DD(3.0), b = DD(U(rng)) / DD(7.0);
      const Real ra = to_real(a), rb = to_real(b);
      CHECK(rel_err(a + b, ra + rb) < 1e-31);
      CHECK(rel_err(a * b, ra * rb) < 1e-31);
      CHECK(rel_err(a / b, ra / rb) < 1e-31);
      CHECK(rel_err(sqrt(a), boost::multiprecision::sqrt(ra)) < 1e-31);
      CHECK(rel_err(exp(a), boost::multiprecision::exp(ra)) < 1e-30);
      CHECK(rel_err(log(a), boost::multiprecision::log(ra)) < 1e-29);
      CHECK(rel_err(pow(a, b), boost::multiprecision::pow(ra, rb)) < 1e-29);
    }
  }

  TEST_CASE("expm1 and log1p keep relative accuracy near zero") {
    for (double t : {1e-3, -1e-7, 3e-12, -2e-15}) {
      const Real rt(t);
      CHECK(rel_err(expm1(DD(t)), boost::multiprecision::expm1(rt)) < 1e-30);
      CHECK(rel_err(log1p(DD(t)), boost::multiprecision::log1p(rt)) < 1e-30);
    }
  }

  TEST_CASE("compensated sum recovers cancelled terms") {
    hardy::CompensatedSum s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i) s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == 1000.0);
  }

  TEST_CASE("rational arithmetic is exact and reports overflow") {
    using hardy::Rational;
    CHECK(Rational(1, 4) + Rational(5, 64) == Rational(21, 64));
    CHECK(Rational(-6, 8) == Rational(3, -4));
    CHECK((Rational(2, 3) / Rational(4, 9)).str() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
  }
}
