#include <cmath>
#include <random>

#include "doctest.h"
#include "hardy/lattice.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::Real;

namespace {

// -div(V∇f)(x)/f(x) on Z^d \ {0}, V = |x|^α, f = |x|^{2γ}, summed edge by edge.
Real zd_weight_oracle(double alpha, int d, const Point& x) {
  const Real g = (Real(2) - d - alpha) / 4;
  auto n2 = [](const Point& p) {
    Real s = 0;
    for (auto c : p) s += Real(c) * Real(c);
    return s;
  };
  const Real rx = n2(x);
  const Real fx = boost::multiprecision::pow(rx, g);
  const Real Vx = boost::multiprecision::pow(rx, Real(alpha) / 2);
  Real s = 0;
  for (int i = 0; i < d; ++i)
    for (int sgn : {-1, 1}) {
      Point y = x;
      y[static_cast<std::size_t>(i)] += sgn;
      const Real ry = n2(y);
      if (ry == 0) continue;
      const Real fy = boost::multiprecision::pow(ry, g);
      const Real Vy = boost::multiprecision::pow(ry, Real(alpha) / 2);
      s += (Vx + Vy) / 2 * (fx - fy);
    }
  return s / fx;
}

}  // namespace

TEST_SUITE("lattice_zd") {
  TEST_CASE("zd_laplacian") {
    const BoxDomain box(2, 5);
    LatticeFunction u(box);
    u.set({1, -2}, 1.0);
    CHECK(zd_laplacian(u, {1, -2}) == 4.0);
    for (Point y : {Point{0, -2}, Point{2, -2}, Point{1, -1}, Point{1, -3}}) CHECK(zd_laplacian(u, y) == -1.0);
    CHECK(zd_laplacian(u, {3, 3}) == 0.0);

    LatticeFunction c(box), x1(box);
    for (std::size_t i = 0; i < box.size(); ++i) {
      const Point p = box.point(i);
      if (box.in_collar(p)) continue;
      c.set(p, 2.5);
      x1.set(p, double(p[0]));
    }
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b) {
        CHECK(zd_laplacian(c, {a, b}) == 0.0);
        CHECK(zd_laplacian(x1, {a, b}) == 0.0);
      }
    CHECK_THROWS_AS(zd_laplacian(c, {5, 0}), std::out_of_range);
    CHECK_THROWS(u.set({5, 0}, 1.0));
  }

  TEST_CASE("zd_laplacian equals the graph Laplacian of the box graph") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int d = 2; d <= 3; ++d) {
      const BoxDomain box(d, 4);
      LatticeFunction u(box);
      VertexFunction f(box.size(), 0.0);
      for (std::size_t i = 0; i < box.size(); ++i) {
        const Point p = box.point(i);
        if (box.in_collar(p)) continue;
        const double v = U(rng);
        u.set(p, v);
        f[i] = v;
      }
      const Graph g = box_graph(box);
      const auto L = graph_laplacian(g, f);
      for (std::size_t i = 0; i < box.size(); ++i) {
        const Point p = box.point(i);
        if (box.in_collar(p)) continue;
        CHECK(std::abs(zd_laplacian(u, p) - L[g.index_of(static_cast<VertexId>(i))]) <= 1e-14);
      }
    }
  }

  TEST_CASE("zd_weight_exact against the 50-digit definition") {
    for (auto [d, a] : {std::pair{2, 1.0}, {3, 0.0}, {4, 2.0}, {3, 1.5}, {2, 0.5}})
      for (std::int64_t t : {1, 2, 3, 7, 20, 100, 1000}) {
        Point x(static_cast<std::size_t>(d), 0);
        x[0] = t;
        if (d > 1) x[1] = t / 3;
        const double want = oracle::to_double(zd_weight_oracle(a, d, x));
        CHECK(zd_weight_exact(a, d, x) == doctest::Approx(want).epsilon(1e-12));
        const DD dd = zd_weight_exact_dd(a, d, x);
        CHECK(dd.hi + dd.lo == doctest::Approx(want).epsilon(1e-15));
      }
  }

  TEST_CASE("zd weight symmetry") {
    const Point x{7, -3, 2};
    const double w = zd_weight_exact(0.5, 3, x);
    for (const Point& y : {Point{-7, -3, 2}, Point{-3, 7, 2}, Point{2, -3, 7}, Point{3, 2, -7}})
      CHECK(zd_weight_exact(0.5, 3, y) == doctest::Approx(w).epsilon(1e-15));
  }

  TEST_CASE("zd asymptotics") {
    CHECK(zd_leading_coefficient(0.0, 3) == 0.25);
    CHECK(zd_isotropic_coefficient(0.0, 3) == doctest::Approx(15.0 / 8.0).epsilon(1e-15));
    for (int d = 2; d <= 5; ++d) CHECK(zd_isotropic_coefficient(0.0, d) == doctest::Approx(3.0 * (d * d - 4) / 8.0));
    // The printed anisotropic coefficient agrees with the derived one only at α = 0.
    for (int d = 2; d <= 5; ++d)
      CHECK(zd_anisotropic_coefficient(0.0, d, AnisotropicCoefficient::Printed) ==
            doctest::Approx(zd_anisotropic_coefficient(0.0, d, AnisotropicCoefficient::Derived)).epsilon(1e-14));
    CHECK(zd_anisotropic_coefficient(2.0, 4, AnisotropicCoefficient::Printed) -
              zd_anisotropic_coefficient(2.0, 4, AnisotropicCoefficient::Derived) ==
          doctest::Approx(16.0));

    const Point x{37, 11, 0};
    CHECK(*zd_weight_asymptotic(1.0, 3, x, 1) ==
          doctest::Approx(zd_leading_coefficient(1.0, 3) * std::pow(norm(x), -1.0)).epsilon(1e-15));
    CHECK_FALSE(zd_weight_asymptotic(1.0, 2, {3, 3}, 2).has_value());

    const double w10 = zd_weight_exact(1.0, 2, {10, 0});
    CHECK(*zd_weight_asymptotic(1.0, 2, {10, 0}, 2) == doctest::Approx(w10).epsilon(1e-2));

    // d = 3, α = 0: w |x|² → 1/4.
    CHECK(zd_weight_exact(0.0, 3, {2000, 0, 0}) * 4e6 == doctest::Approx(0.25).epsilon(1e-6));
  }

  TEST_CASE("asymptotic remainder decays like |x|^(α-6)") {
    for (auto [d, a] : {std::pair{2, 1.0}, {3, 0.0}, {4, 2.0}}) {
      std::vector<std::int64_t> ts;
      for (std::int64_t t = 20; t <= 200; t += 20) ts.push_back(t);
      const auto rows = leading_ratio_table(a, d, ts);
      std::vector<double> xs, ys;
      for (const auto& r : rows) {
        xs.push_back(double(r.t));
        ys.push_back(std::abs(r.remainder));
      }
      const auto fit = fit_power_law(xs, ys);
      CHECK_MESSAGE(std::abs(fit.exponent - (a - 6.0)) <= 0.3, "d=" << d << " alpha=" << a << " fit=" << fit.exponent);
    }
  }

  TEST_CASE("sanity envelope: exact weight >= half the leading term for |x| >= 20") {
    for (auto [d, a] : {std::pair{2, 1.0}, {3, 0.0}, {4, 2.0}})
      for (std::int64_t t : {20, 35, 80}) {
        Point x(static_cast<std::size_t>(d), 0);
        x[0] = t;
        x[1] = t / 2;
        CHECK(zd_weight_exact(a, d, x) >= 0.5 * zd_leading_coefficient(a, d) * std::pow(norm(x), a - 2.0));
      }
  }

  TEST_CASE("zd_inequality_check") {
    const auto r = zd_inequality_check(1.0, 2, 20, 200, 11);
    CHECK(r.pass);
    CHECK(r.trials.size() == 200);
    CHECK(r.max_identity_residual <= 1e-10);
    for (const auto& t : r.trials) CHECK(t.f_functional >= -1e-14 * t.scale);
    const auto s = zd_inequality_check(0.0, 3, 15, 20, 12);
    CHECK(s.pass);
    CHECK_THROWS(zd_inequality_check(0.0, 3, 3, 1, 0));
  }

  TEST_CASE("leray_z2") {
    const Point x{100, 0};
    const double L = std::log(100.0);
    CHECK(leray_z2_weight(x) * 1e4 * L * L == doctest::Approx(0.25).epsilon(5e-2 / 0.25));
    for (const Point& y : {Point{0, 100}, Point{-100, 0}, Point{0, -100}})
      CHECK(leray_z2_weight(y) == doctest::Approx(leray_z2_weight(x)).epsilon(1e-15));
    CHECK(leray_z2_weight({30, 41}) == doctest::Approx(leray_z2_weight({-41, 30})).epsilon(1e-15));
    // Correction (2S - 3/2)/(r⁴ ln r): S = 1 on the axis, 1/2 on the diagonal.
    const double r = 400.0;
    const double axis = leray_z2_asymptotic({400, 0});
    const Point diag{283, 283};
    const double rd = norm(diag);
    const double lead_axis = 1.0 / (4 * r * r * std::pow(std::log(r), 2));
    const double lead_diag = 1.0 / (4 * rd * rd * std::pow(std::log(rd), 2));
    CHECK((axis - lead_axis) * std::pow(r, 4) * std::log(r) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK((leray_z2_asymptotic(diag) - lead_diag) * std::pow(rd, 4) * std::log(rd) ==
          doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(std::isfinite(leray_z2_fit_c(20, 200)));
  }
}
