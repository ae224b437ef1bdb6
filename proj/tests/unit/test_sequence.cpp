#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/sequence.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

FiniteSequence random_sequence(std::mt19937_64& rng, Index first, Index len) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = U(rng);
  return {first, v};
}

void check_values(const FiniteSequence& s, Index first, const std::vector<double>& want) {
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(s.at(first + static_cast<Index>(i)) == want[i]);
}

}  // namespace

TEST_SUITE("seq_core") {
  TEST_CASE("grad") {
    const auto g = grad(FiniteSequence::delta(1));
    check_values(g, 0, {0, 1, -1, 0});
    CHECK(grad(FiniteSequence()).is_zero());
    check_values(grad(FiniteSequence(1, {1, 1, 1})), 1, {1, 0, 0, -1});
    CHECK(grad(FiniteSequence(1, {1, 1, 1})).at(5) == 0.0);
  }

  TEST_CASE("divergence") {
    check_values(divergence(FiniteSequence::delta(1)), 0, {1, -1, 0});
    CHECK(divergence(FiniteSequence()).is_zero());
    check_values(divergence(FiniteSequence(0, {2, 5})), 0, {3, -5});
  }

  TEST_CASE("shift") {
    CHECK(shift(FiniteSequence::delta(1), 1) == FiniteSequence::delta(0));
    const FiniteSequence u(2, {0.5, -1, 3});
    CHECK(shift(u, 0) == u);
    CHECK(shift(FiniteSequence(3, {1, 2}), 2) == FiniteSequence(1, {1, 2}));
  }

  TEST_CASE("laplace") {
    check_values(laplace(FiniteSequence::delta(2)), 1, {-1, 2, -1});
    CHECK(laplace(FiniteSequence()).is_zero());
    check_values(laplace(FiniteSequence(1, {1, 2, 3})), 0, {-1, 0, 0, 4, -3});
  }

  TEST_CASE("half_laplace_power") {
    std::mt19937_64 rng(1);
    const auto u = random_sequence(rng, 1, 12);
    CHECK(half_laplace_power(u, BoundaryOrder(1)) == grad(u));
    check_values(half_laplace_power(FiniteSequence::delta(2), BoundaryOrder(2)), 1, {-1, 2, -1});
    check_values(half_laplace_power(FiniteSequence::delta(3), BoundaryOrder(3)), 2, {-1, 3, -3, 1});
    CHECK_THROWS(BoundaryOrder(0));
  }

  TEST_CASE("half_laplace_power matches explicit binomial stencils") {
    std::mt19937_64 rng(2);
    for (int ell = 1; ell <= 6; ++ell) {
      const auto u = random_sequence(rng, ell, 20);
      std::vector<oracle::Real> dense(static_cast<std::size_t>(u.end()), oracle::Real(0));
      for (Index n = u.first_index(); n < u.end(); ++n) dense[static_cast<std::size_t>(n)] = u.at(n);
      const auto h = half_laplace_power(u, BoundaryOrder(ell));
      for (Index n = 0; n < u.end() + ell; ++n) {
        const double want = oracle::to_double(oracle::half_laplace_at(dense, ell, n));
        CHECK(std::abs(h.at(n) - want) <= 1e-13 * std::pow(2.0, ell));
      }
    }
  }

  TEST_CASE("weighted_sum") {
    const auto one = [](Index) { return 1.0; };
    CHECK(weighted_sum(FiniteSequence::delta(1), FiniteSequence::delta(1), one) == 1.0);
    CHECK(weighted_sum(FiniteSequence(), FiniteSequence(), one) == 0.0);
    const FiniteSequence u(1, {1, 1});
    CHECK(weighted_sum(u, u, [](Index n) { return 1.0 / double(n * n); }) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(weighted_sum(u, u, one, IndexRange{2, 10}) == 1.0);
  }

  TEST_CASE("operators commute: div grad = grad div = -laplace") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const auto u = random_sequence(rng, static_cast<Index>(rng() % 5), 1 + static_cast<Index>(rng() % 30));
      const auto a = divergence(grad(u)), b = grad(divergence(u)), c = scale(laplace(u), -1.0);
      for (Index n = u.first_index() - 2; n <= u.last_index() + 2; ++n) {
        CHECK(std::abs(a.at(n) - c.at(n)) <= 1e-14);
        CHECK(std::abs(b.at(n) - c.at(n)) <= 1e-14);
      }
    }
  }

  TEST_CASE("Green's formula on N: sum (Δu) v = sum ∇u ∇v when u0 = v0 = 0") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
      const auto u = random_sequence(rng, 1, 40), v = random_sequence(rng, 1, 35);
      const auto one = [](Index) { return 1.0; };
      const double lhs = weighted_sum(laplace(u), v, one);
      const double rhs = weighted_sum(grad(u), grad(v), one);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + std::abs(rhs) + 1.0));
    }
  }

  TEST_CASE("shift preserves weighted sums with shifted weights") {
    std::mt19937_64 rng(5);
    const auto u = random_sequence(rng, 3, 10), v = random_sequence(rng, 4, 10);
    const auto w = [](Index n) { return 1.0 + 0.1 * double(n); };
    const double base = weighted_sum(u, v, w);
    for (Index k : {-3, 0, 2}) {
      const double shifted = weighted_sum(shift(u, k), shift(v, k), [&](Index n) { return w(n + k); });
      CHECK(shifted == base);
    }
  }

  TEST_CASE("canonical form trims exact zeros and is idempotent") {
    const FiniteSequence u(0, {0.0, 0.0, 1.5, 0.0, -2.0, 0.0});
    CHECK(u.first_index() == 2);
    CHECK(u.last_index() == 4);
    CHECK(u.canonical() == u);
    CHECK(u.canonical().canonical() == u.canonical());
    CHECK(FiniteSequence(5, {0.0, 0.0}).is_zero());
    CHECK(FiniteSequence(0, {1e-300}).size() == 1);
  }
}
