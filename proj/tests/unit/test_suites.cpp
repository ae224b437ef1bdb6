#include <cmath>

#include "doctest.h"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"

using namespace hardy;

TEST_SUITE("suites") {
  TEST_CASE("evaluate_form matches the banded form for Rellich") {
    for (int ell = 1; ell <= 4; ++ell) {
      const auto form = InequalityForm::rellich(ell);
      for (std::size_t k = 0; k < 8; ++k) {
        const auto u = random_admissible(form, k, 100 + k);
        REQUIRE(u.first_index() >= form.first_free());
        const auto B = assemble_form(ell, u.last_index());
        const auto v = evaluate_form(form, u);
        CHECK(v.lhs == doctest::Approx(B.quadratic_A(u)).epsilon(1e-12));
        CHECK(v.rhs == doctest::Approx(sharp_constant(ell) * B.quadratic_B(u)).epsilon(1e-12));
        CHECK(v.margin >= -1e-12 * v.scale);
      }
    }
    CHECK_THROWS_AS(evaluate_form(InequalityForm::rellich(2), FiniteSequence::delta(1)), std::invalid_argument);
  }

  TEST_CASE("form names and boundary conditions") {
    CHECK(InequalityForm::rellich(3).first_free() == 3);
    CHECK(InequalityForm::shifted_hardy(-2).first_free() == 2);
    CHECK(InequalityForm::direct_hardy(0.5).first_free() == 1);
    CHECK(InequalityForm::leray().first_free() == 2);
    CHECK_THROWS(evaluate_form(InequalityForm::shifted_hardy(0.5), FiniteSequence::delta(3)));
  }

  TEST_CASE("weight_form is the nonnegative ground-state remainder") {
    for (const auto& m : {WeightModel(WeightModel::Family::Kpp), WeightModel(WeightModel::Family::ShiftedHardy, -2.0),
                          WeightModel(WeightModel::Family::DirectHardy, 3.5), WeightModel(WeightModel::Family::Leray)}) {
      const auto s = weight_form_suite(m, 200, 5);
      CHECK_MESSAGE(s.pass, m.name() << " worst " << s.worst);
    }
    CHECK_THROWS(weight_form(WeightModel(WeightModel::Family::GksReference), FiniteSequence::delta(3)));
  }

  TEST_CASE("suites are deterministic in the seed") {
    const auto a = inequality_suite(InequalityForm::direct_hardy(2.0), 300, 9);
    const auto b = inequality_suite(InequalityForm::direct_hardy(2.0), 300, 9);
    CHECK(a.worst == b.worst);
    CHECK(a.worst_instance == b.worst_instance);
    CHECK(a.pass);
    const auto i = identity_suite(IdentitySpec::iterated(2), 20, 3, 1e-10, 80);
    const auto j = identity_suite(IdentitySpec::iterated(2), 20, 3, 1e-10, 80, 1);
    CHECK(i.worst == j.worst);
    CHECK(i.pass);
  }

  TEST_CASE("small lp suites pass") {
    CHECK(picone_suite(1.5, 200, 1).pass);
    CHECK(landau_suite(1.1, 200, 2).pass);
    CHECK(p2_reduction_suite(20, 3).pass);
    CHECK(lp_hardy_suite(3.0, 20, 4).pass);
  }
}
