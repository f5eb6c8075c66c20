#include "orthozeros/normal_form.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "orthozeros/zeros.hpp"

using namespace orthozeros;

TEST_CASE("normal_form_generic recovers F from the raw ODE coefficients") {
  SUBCASE("already in normal form") {
    ODECoefficients c;
    c.g = [](double) { return 0.0; };
    c.g_prime = [](double) { return 0.0; };
    c.f = [](double) { return 1.0; };
    c.domain = Interval{-1.0, 1.0};
    CHECK(normal_form_generic(c, 0.7) == 1.0);
    CHECK_THROWS_AS(normal_form_generic(c, 1.5), DomainViolation);
  }
  SUBCASE("laguerre alpha=0 n=3 at t=1") {
    const auto c = ode_coefficients(FamilySpec::laguerre(0.0, 3));
    CHECK(normal_form_generic(c, 1.0) == doctest::Approx(3.5).epsilon(1e-14));
  }
  SUBCASE("jacobi alpha=beta=0 n=2 at t=0: (-2x-2y+z)/4 = 7") {
    const auto c = ode_coefficients(FamilySpec::jacobi(0.0, 0.0, 2));
    CHECK(normal_form_generic(c, 0.0) == doctest::Approx(7.0).epsilon(1e-14));
  }
}

TEST_CASE("F_eval closed forms") {
  CHECK(F_eval(FamilySpec::laguerre(0.0, 3), 1.0) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(F_eval(FamilySpec::ultraspherical(7.0, 2), 0.0) == doctest::Approx(42.0).epsilon(1e-15));
  CHECK(F_eval(FamilySpec::jacobi(0.0, 0.0, 2), 0.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(F_eval(FamilySpec::ultraspherical(0.0, 2), 0.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK_THROWS_AS(F_eval(FamilySpec::laguerre(0.0, 3), -1.0), DomainViolation);
  CHECK_THROWS_AS(F_eval(FamilySpec::jacobi(0.0, 0.0, 2), 1.0), DomainViolation);
}

TEST_CASE("generic and closed-form F agree on grids of random specs") {
  oracles::ParamRng rng(0x5eed0003);
  for (int trial = 0; trial < 12; ++trial) {
    FamilySpec spec = FamilySpec::laguerre(0.0, 1);
    double lo = 0.0, hi = 0.0;
    switch (trial % 3) {
      case 0: {
        const double a = rng.uniform(-0.9, 10.0);
        spec = FamilySpec::laguerre(a, rng.uniform_int(1, 60));
        lo = 1e-3;
        hi = 4.0 * spec.degree + 2.0 * a + 10.0;
        break;
      }
      case 1:
        spec = FamilySpec::jacobi(rng.uniform(-0.9, 10.0), rng.uniform(-0.9, 10.0),
                                  rng.uniform_int(1, 60));
        lo = -1.0 + 1e-3;
        hi = 1.0 - 1e-3;
        break;
      default:
        spec = FamilySpec::ultraspherical(rng.uniform(-0.9, 10.0), rng.uniform_int(1, 60));
        lo = -1.0 + 1e-3;
        hi = 1.0 - 1e-3;
        break;
    }
    const auto coeffs = ode_coefficients(spec);
    for (int i = 1; i <= 200; ++i) {
      const double t = lo + (hi - lo) * i / 201.0;
      const double closed = F_eval(spec, t);
      const double generic = normal_form_generic(coeffs, t);
      CHECK(std::abs(generic - closed) <= 1e-10 * std::max(1.0, std::abs(closed)));
    }
  }
}

TEST_CASE("j_eval endpoint values and family consistency") {
  const FamilySpec spec = FamilySpec::jacobi(2.0, 0.5, 5);
  CHECK(j_eval(spec, -1.0) == doctest::Approx(6.0).epsilon(1e-14));   // -8y = 8(1-beta^2)
  CHECK(j_eval(spec, 1.0) == doctest::Approx(24.0).epsilon(1e-14));   // 8x = 8(alpha^2-1)
  CHECK(j_eval(FamilySpec::ultraspherical(3.0, 4), 0.0) == 0.0);
  CHECK_THROWS_AS(j_eval(FamilySpec::laguerre(0.0, 3), 0.5), UnsupportedFamily);

  // the two closed forms coincide at beta = alpha
  for (double t : {-0.8, -0.3, 0.2, 0.9}) {
    CHECK(j_eval(FamilySpec::jacobi(4.0, 4.0, 6), t) ==
          doctest::Approx(j_eval(FamilySpec::ultraspherical(4.0, 6), t)).epsilon(1e-13));
  }
}

TEST_CASE("sign of F' equals -sign of j away from the roots of j") {
  for (const FamilySpec& spec :
       {FamilySpec::jacobi(0.5, 2.0, 7), FamilySpec::ultraspherical(3.0, 5),
        FamilySpec::jacobi(2.0, 2.0, 10)}) {
    const double h = 1e-7;
    for (int i = 1; i < 400; ++i) {
      const double t = -0.99 + 1.98 * i / 400.0;
      const double jv = j_eval(spec, t);
      if (std::abs(jv) < 1e-2) continue;  // skip neighborhoods of j's roots
      const double dF = F_eval(spec, t + h) - F_eval(spec, t);
      CHECK(dF * jv < 0.0);
    }
  }
}

TEST_CASE("ultraspherical j is odd and F is even") {
  const FamilySpec spec = FamilySpec::ultraspherical(2.5, 9);
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.98 * i / 50.0;
    CHECK(j_eval(spec, -t) == doctest::Approx(-j_eval(spec, t)).epsilon(1e-13));
    CHECK(F_eval(spec, -t) == doctest::Approx(F_eval(spec, t)).epsilon(1e-13));
  }
}

TEST_CASE("jacobi(alpha,alpha) F matches ultraspherical F pointwise") {
  oracles::ParamRng rng(0x5eed0004);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = rng.uniform(-0.9, 10.0);
    const int n = rng.uniform_int(1, 60);
    const FamilySpec jac = FamilySpec::jacobi(a, a, n);
    const FamilySpec ult = FamilySpec::ultraspherical(a, n);
    for (int i = 1; i <= 300; ++i) {
      const double t = -1.0 + 1e-3 + (2.0 - 2e-3) * i / 301.0;
      const double fj = F_eval(jac, t);
      const double fu = F_eval(ult, t);
      CHECK(std::abs(fj - fu) <= 1e-10 * std::max(1.0, std::abs(fu)));
    }
  }
}

TEST_CASE("discriminant closed forms") {
  CHECK(discriminant(FamilySpec::ultraspherical(7.0, 2)) == -103680.0);
  CHECK(discriminant(FamilySpec::jacobi(20.0, 0.0, 3)) == -1787904.0);
  CHECK(discriminant(FamilySpec::ultraspherical(1.0, 1)) == 6912.0);
  CHECK_THROWS_AS(discriminant(FamilySpec::laguerre(0.0, 3)), UnsupportedFamily);

  // jacobi(alpha,alpha) and ultraspherical discriminants share their sign
  oracles::ParamRng rng(0x5eed0005);
  for (int trial = 0; trial < 60; ++trial) {
    const double a = rng.uniform(-0.9, 12.0);
    const int n = rng.uniform_int(1, 50);
    const double dj = discriminant(FamilySpec::jacobi(a, a, n));
    const double du = discriminant(FamilySpec::ultraspherical(a, n));
    if (std::abs(du) > 1e-6) {
      CHECK(dj * du > 0.0);
    }
  }
}

TEST_CASE("critical_points per family") {
  SUBCASE("laguerre t0, reported even outside the support") {
    const auto p = critical_points(FamilySpec::laguerre(3.0, 5));
    CHECK(*p.t0 == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
    for (int n : {1, 4, 9}) {
      const auto q = critical_points(FamilySpec::laguerre(0.0, n));
      CHECK(*q.t0 == doctest::Approx(-1.0 / (2.0 * n + 1.0)).epsilon(1e-15));
      CHECK(*q.t0 < 0.0);
    }
  }
  SUBCASE("ultraspherical T12 and its relation to t12") {
    const auto p = critical_points(FamilySpec::ultraspherical(2.0, 5));
    REQUIRE(p.T12.has_value());
    const double T2 = (*p.T12)[1];
    CHECK(T2 == doctest::Approx(std::sqrt(25.0 / 28.0)).epsilon(1e-15));
    CHECK((*p.T12)[0] == -T2);
    CHECK(T2 == doctest::Approx((*p.t12)[1] * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(j_eval(FamilySpec::ultraspherical(2.0, 5), T2)) <= 1e-10);
    CHECK(p.t12_in_support[0]);
    CHECK(p.t12_in_support[1]);
    // small-alpha case: no T12, no stationary points for |alpha| <= 1 ... D < 0
    const auto q = critical_points(FamilySpec::ultraspherical(7.0, 2));
    CHECK_FALSE(q.T12.has_value());
    CHECK(q.discriminant_sign == -1);
    CHECK(*q.discriminant == -103680.0);
  }
  SUBCASE("jacobi aux constants and stationary points of j") {
    const FamilySpec spec = FamilySpec::jacobi(0.5, 2.0, 5);
    const auto p = critical_points(spec);
    CHECK(*p.x_aux == 0.5 * 0.5 - 1.0);
    CHECK(*p.y_aux == 3.0);
    CHECK(*p.z_aux == 12.5 * 14.5);
    CHECK(*p.z_aux > 0.0);
    if (p.t12) {
      // exact formula (6(y-x) +- sqrt(D)) / (6z), and j'(t12) ~ 0
      const double x = *p.x_aux, y = *p.y_aux, z = *p.z_aux;
      const double sq = std::sqrt(*p.discriminant);
      CHECK((*p.t12)[0] == (6.0 * (y - x) - sq) / (6.0 * z));
      CHECK((*p.t12)[1] == (6.0 * (y - x) + sq) / (6.0 * z));
      for (double t : *p.t12) {
        const double jp = 3.0 * z * t * t + 6.0 * (x - y) * t + 4.0 * x + 4.0 * y - z;
        CHECK(std::abs(jp) <= 1e-10 * (3.0 * z + 6.0 * std::abs(x - y) +
                                       std::abs(4.0 * x + 4.0 * y - z)));
      }
    }
    CHECK(*p.t0 == doctest::Approx((*p.y_aux - *p.x_aux) / *p.z_aux).epsilon(1e-15));
  }
}

TEST_CASE("F_supremum enumerates critical points and endpoint limits") {
  SUBCASE("laguerre alpha=3 n=5 on (t0, inf): F(t0) = 5.875") {
    const auto sup = F_supremum(FamilySpec::laguerre(3.0, 5),
                                Interval{4.0 / 7.0, std::numeric_limits<double>::infinity()});
    REQUIRE(sup.has_value());
    CHECK(*sup == doctest::Approx(5.875).epsilon(1e-14));
  }
  SUBCASE("ultraspherical alpha=7 n=2 on (-1,1): F(0) = 42") {
    const auto sup = F_supremum(FamilySpec::ultraspherical(7.0, 2), Interval{-1.0, 1.0});
    REQUIRE(sup.has_value());
    CHECK(*sup == doctest::Approx(42.0).epsilon(1e-14));
  }
  SUBCASE("laguerre alpha=0 n=3 on (0, inf): unbounded") {
    CHECK_FALSE(F_supremum(FamilySpec::laguerre(0.0, 3),
                           Interval{0.0, std::numeric_limits<double>::infinity()})
                    .has_value());
  }
  SUBCASE("interval containment enforced") {
    CHECK_THROWS_AS(F_supremum(FamilySpec::jacobi(0.0, 0.0, 2), Interval{-2.0, 0.5}),
                    DomainViolation);
  }
}

TEST_CASE("j roots found by the cubic path vanish and match the trig oracle") {
  const FamilySpec spec = FamilySpec::jacobi(0.5, 2.0, 5);
  const auto roots = j_roots_in_support(spec);
  const auto p = critical_points(spec);
  const double x = *p.x_aux, y = *p.y_aux, z = *p.z_aux;
  // monic coefficients of j for the independent trig oracle
  const auto oracle = oracles::cubic_roots(3.0 * (x - y) / z, (4.0 * x + 4.0 * y - z) / z,
                                           (x - y) / z);
  std::vector<double> expected;
  for (double r : oracle) {
    if (r > -1.0 && r < 1.0) expected.push_back(r);
  }
  REQUIRE(roots.size() == expected.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(roots[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    CHECK(std::abs(j_eval(spec, roots[i])) <= 1e-9 * z);
  }
}
