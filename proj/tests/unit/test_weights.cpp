#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardy/scalar.hpp"
#include "hardy/weights.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::Q;

namespace {

bool same(const Rational& r, const Q& q) {
  return oracle::BigInt(r.num()) == q.numerator() && oracle::BigInt(r.den()) == q.denominator();
}

double rel(double got, const oracle::Real& want) { return std::abs(got - oracle::to_double(want)) / std::abs(oracle::to_double(want)); }

const std::vector<Index> kSampleN = {2, 3, 5, 8, 13, 31, 63, 64, 65, 100, 128, 1000, 123457, 10000000};

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("kpp weight") {
    CHECK(kpp_weight(1) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(kpp_weight(2) == doctest::Approx(2.0 - (1.0 + std::sqrt(3.0)) / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(kpp_weight(2) == doctest::Approx(0.0681483).epsilon(1e-6));
    CHECK(same(kpp_coefficient(1), oracle::q(1, 4)));
    CHECK(same(kpp_coefficient(2), oracle::q(5, 64)));
    CHECK(same(kpp_coefficient(3), oracle::q(21, 512)));
    for (int k = 1; k <= 12; ++k) CHECK(same(kpp_coefficient(k), oracle::kpp_coefficient(k)));
    for (Index n : kSampleN) CHECK(rel(kpp_weight(n), oracle::kpp(n)) <= 1e-13);
  }

  TEST_CASE("shifted Hardy weight") {
    for (double a : {-0.5, -2.0, -4.0, -7.25}) {
      CHECK(scalar_eval(ScalarFunction{ScalarId::H, a}, 0.0) == 0.0);
      for (Index n : kSampleN) CHECK(rel(shifted_hardy_weight(a, n), oracle::shifted_hardy(a, n)) <= 1e-13);
    }
    CHECK((-2.0 - 1.0) * (-2.0 - 1.0) / 4.0 == 2.25);
    CHECK(shifted_hardy_weight(-2.0, 10) >= 2.25e-4);
    CHECK_THROWS(shifted_hardy_weight(0.5, 3));
    CHECK_THROWS(shifted_hardy_weight(-1.0, 1));
  }

  TEST_CASE("direct Hardy weight") {
    const auto one = direct_hardy_weight(1.0, 7);
    CHECK(one.bound == 0.0);
    CHECK(one.value >= 0.0);
    const auto w = direct_hardy_weight(3.0, 1);
    CHECK(w.value == doctest::Approx(1.0 + 8.0 / 3.0).epsilon(1e-15));
    CHECK(w.bound == 1.0);
    CHECK(direct_hardy_weight(0.0, 5).value ==
          doctest::Approx(scalar_eval(ScalarFunction{ScalarId::G, 0.0}, 0.2)).epsilon(1e-14));
    for (double a : {0.0, 0.5, 1.0, 2.0, 3.5, 6.0})
      for (Index n : kSampleN) {
        if (a > 1.0 && n > 100000) continue;  // n^α overflows nothing, but keep the oracle cheap
        if (a == 1.0) CHECK(direct_hardy_weight(a, n).value == 0.0);  // f ≡ 1
        else CHECK(rel(direct_hardy_weight(a, n).value, oracle::direct_hardy(a, n)) <= 1e-13);
      }
  }

  TEST_CASE("Leray weight") {
    const double eps = kLerayEpsilon;
    const auto w2 = leray_weight(2);
    const double l2 = std::log(2.0);
    CHECK(w2.bound == doctest::Approx(1.0 / (8.0 * l2 * l2)).epsilon(1e-15));
    CHECK(w2.exact == doctest::Approx(5.0 - 3.0 * std::sqrt(std::log(3.0) / l2) - 2.0 * eps / std::sqrt(l2)).epsilon(1e-15));
    CHECK(w2.margin() > 0.0);
    CHECK(leray_weight(8).bound == doctest::Approx(1.0 / (32.0 * std::pow(std::log(8.0), 2))).epsilon(1e-15));
    CHECK(leray_weight(100).margin() > 0.0);
    for (Index n : kSampleN) CHECK(rel(leray_weight(n).exact, oracle::leray(n, eps)) <= 1e-12);
  }

  TEST_CASE("improved second-order weight coefficients") {
    CHECK(improved_a(2) == Rational(9, 4));
    CHECK(improved_a(3) == Rational(15, 4));
    CHECK(improved_rellich2_coefficient(4) == Rational(9, 16));
    CHECK(improved_rellich2_coefficient(5) == Rational(15, 16));
    CHECK(improved_rellich2_coefficient(6) == Rational(213, 128));
    for (int k = 2; k <= 18; ++k) {
      CHECK(same(improved_a(k), oracle::H_coefficient(oracle::q(-2), k)));
      CHECK(improved_a_double(k) == doctest::Approx(improved_a(k).to_double()).epsilon(1e-15));
    }
    for (int k = 2; k <= 64; ++k) CHECK(improved_a_double(k) > 0.0);
    for (Index n : kSampleN) CHECK(rel(improved_rellich2_weight(n), oracle::improved_rellich2(n)) <= 1e-12);
  }

  TEST_CASE("reference second-order weight") {
    CHECK(gks_coefficient(1) == Rational(9, 16));
    CHECK(gks_coefficient(2) == Rational(210, 256));
    for (int k = 1; k <= 10; ++k) CHECK(same(gks_coefficient(k), oracle::gks_series_coefficient(2 * k + 2)));
    for (int j = 1; j <= 3; ++j) CHECK(oracle::gks_series_coefficient(j) == oracle::q(0));
    CHECK(gks_reference_weight(100) * 1e8 == doctest::Approx(9.0 / 16.0 + 210.0 / 256.0 * 1e-4).epsilon(1e-8));
    for (Index n : kSampleN) {
      if (n >= 2) CHECK(rel(gks_reference_weight(n, EvalMode::Auto), oracle::gks(n)) <= 1e-12);
    }
  }

  TEST_CASE("every family agrees with itself across evaluation modes") {
    std::vector<WeightModel> models = {
        WeightModel(WeightModel::Family::Kpp),
        WeightModel(WeightModel::Family::GksReference),
        WeightModel(WeightModel::Family::ShiftedHardy, -2.0),
        WeightModel(WeightModel::Family::ShiftedHardy, -0.5),
        WeightModel(WeightModel::Family::DirectHardy, 0.5),
        WeightModel(WeightModel::Family::DirectHardy, 3.5),
        WeightModel(WeightModel::Family::Leray),
        WeightModel(WeightModel::Family::ImprovedRellich2),
        WeightModel(WeightModel::Family::LandauConstant, 3.0),
    };
    for (const auto& m : models)
      for (Index n = 32; n <= 128; ++n) {
        const double d = m.direct(n), s = m.series(n);
        CHECK_MESSAGE(std::abs(d - s) <= 1e-12 * std::abs(d), m.name() << " n=" << n);
      }
  }

  TEST_CASE("certified lower bounds on n <= 10^6") {
    bool ok = true;
    for (Index n = 1; n <= 1000000 && ok; ++n) {
      ok = ok && kpp_weight(n) >= 0.25 / (double(n) * double(n));
      if (n >= 2) ok = ok && shifted_hardy_weight(-2.0, n) >= 2.25 * std::pow(double(n), -4.0);
      const auto d = direct_hardy_weight(0.5, n);
      ok = ok && d.value >= d.bound;
      if (n >= 3) ok = ok && leray_weight(n).margin() >= 0.0;
      if (!ok) MESSAGE("bound fails at n = " << n);
    }
    CHECK(ok);
  }

  TEST_CASE("WeightModel parsing and validation") {
    CHECK(WeightModel::parse("kpp").family() == WeightModel::Family::Kpp);
    CHECK(WeightModel::parse("gks").family() == WeightModel::Family::GksReference);
    CHECK_THROWS_AS(WeightModel::parse("nope"), std::invalid_argument);
    CHECK_THROWS(WeightModel::parse("shifted_hardy", 1.0));
    CHECK_THROWS(WeightModel::parse("landau", 1.0));
    CHECK(parse_eval_mode("series") == EvalMode::Series);
    CHECK_THROWS(parse_eval_mode("fast"));
  }
}

TEST_SUITE("weights") {
  TEST_CASE("scalar functions at their base points") {
    for (double a : {-3.0, -0.5, 0.0, 0.7, 2.0}) {
      CHECK(scalar_eval(ScalarFunction{ScalarId::H, a}, 0.0) == 0.0);
      CHECK(scalar_eval(ScalarFunction{ScalarId::G, a}, 0.0) == 0.0);
      CHECK(scalar_eval(ScalarFunction{ScalarId::F, a}, 1.0) == 0.0);
    }
    CHECK(scalar_eval(ScalarFunction{ScalarId::g}, 1.0) == doctest::Approx(27.0 / 8.0).epsilon(1e-15));
    const double q2 = scalar_eval(ScalarFunction{ScalarId::Q}, 2.0);
    CHECK(q2 == doctest::Approx(0.6747).epsilon(1e-4));
    CHECK(q2 > 0.5);
  }

  TEST_CASE("H agrees with the 50-digit definition") {
    for (double a : {-6.0, -2.0, -0.5})
      for (double x : {1e-6, 0.01, 0.3, 0.9}) {
        const double got = scalar_eval(ScalarFunction{ScalarId::H, a}, x);
        CHECK(rel(got, oracle::H(oracle::Real(a), oracle::Real(x))) <= 1e-13);
        CHECK(oracle::to_double(abs(oracle::Real(scalar_eval_dd(ScalarFunction{ScalarId::H, a}, DD(x)).hi) -
                                    oracle::H(oracle::Real(a), oracle::Real(x)))) <=
              1e-15 * std::abs(got));
      }
  }

  TEST_CASE("lower_bound_scan confirms the scalar lower bounds") {
    CHECK(scan_H(-2.0).pass);
    CHECK(scan_H(-2.0).min_margin > 0.0);
    CHECK(scan_Q().pass);
    CHECK(scan_G_cubic().pass);
    CHECK(scan_g().pass);
    for (double a : {0.0, 0.5, 1.0}) CHECK(scan_G(a).pass);
    for (double a : {1.5, 2.5, 3.0, 5.0}) CHECK(scan_F(a).pass);
  }

  TEST_CASE("lower_bound_scan flags a failing margin") {
    const auto r = lower_bound_scan("x - 0.5", [](double x) { return x - 0.5; }, 0.0, 1.0, 100, true, true, true);
    CHECK_FALSE(r.pass);
    CHECK(r.min_margin == doctest::Approx(-0.5));
  }
}
