#include "orthozeros/zeros.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "orthozeros/normal_form.hpp"
#include "tridiagonal.hpp"

using namespace orthozeros;

TEST_CASE("compute_zeros matches closed-form witnesses") {
  SUBCASE("laguerre alpha=0 n=2: 2 +- sqrt(2)") {
    const auto zs = compute_zeros(FamilySpec::laguerre(0.0, 2));
    CHECK(std::abs(zs.zeros[0] - (2.0 - std::sqrt(2.0))) <= 1e-13);
    CHECK(std::abs(zs.zeros[1] - (2.0 + std::sqrt(2.0))) <= 1e-13);
  }
  SUBCASE("chebyshev-U n=3: {-sqrt(2)/2, 0, sqrt(2)/2}") {
    const auto zs = compute_zeros(FamilySpec::ultraspherical(0.5, 3));
    const auto exact = oracles::chebyshev_u_zeros(3);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(zs.zeros[k] - exact[k]) <= 1e-13);
    }
  }
  SUBCASE("legendre n=4 against the closed-form nodes") {
    const auto zs = compute_zeros(FamilySpec::jacobi(0.0, 0.0, 4));
    const auto exact = oracles::gauss_legendre4();
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(zs.zeros[k] - exact[k]) <= 1e-13);
    }
  }
}

TEST_CASE("spacing_profile on the cubic and quartic witnesses") {
  SUBCASE("laguerre alpha=0 n=3 via the cubic oracle") {
    // monic form of L_3: t^3 - 9t^2 + 18t - 6
    const auto exact = oracles::cubic_roots(-9.0, 18.0, -6.0);
    const auto zs = compute_zeros(FamilySpec::laguerre(0.0, 3));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(zs.zeros[k] - exact[k]) <= 1e-12);
    const auto [spacings, seconds] = spacing_profile(zs);
    CHECK(spacings[0] == doctest::Approx(1.8785058034955626).epsilon(1e-12));
    CHECK(spacings[1] == doctest::Approx(3.9956647226584375).epsilon(1e-12));
    CHECK(seconds[0] == doctest::Approx(2.1171589191628748).epsilon(1e-12));
    CHECK(seconds[0] > 0.0);  // increasing spacings: convex
  }
  SUBCASE("legendre n=4: convex then concave around 0") {
    const auto zs = compute_zeros(FamilySpec::jacobi(0.0, 0.0, 4));
    const auto [spacings, seconds] = spacing_profile(zs);
    CHECK(spacings[0] == doctest::Approx(0.52115526800919631).epsilon(1e-12));
    CHECK(spacings[1] == doctest::Approx(0.67996208716971253).epsilon(1e-12));
    CHECK(spacings[2] == doctest::Approx(0.52115526800919631).epsilon(1e-12));
    CHECK(seconds[0] == doctest::Approx(0.15880681916051622).epsilon(1e-11));
    CHECK(seconds[1] == doctest::Approx(-0.15880681916051622).epsilon(1e-11));
  }
  SUBCASE("chebyshev-U n=3: symmetric middle, zero second difference") {
    const auto zs = compute_zeros(FamilySpec::ultraspherical(0.5, 3));
    const auto [spacings, seconds] = spacing_profile(zs);
    CHECK(spacings[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-13));
    CHECK(std::abs(seconds[0]) <= 1e-13);
  }
  SUBCASE("degree too small") {
    CHECK_THROWS_AS(spacing_profile(compute_zeros(FamilySpec::laguerre(0.0, 1))),
                    DegreeTooSmall);
  }
}

TEST_CASE("newton polish stays within the eigenvalue basin") {
  for (const FamilySpec& spec :
       {FamilySpec::laguerre(2.0, 25), FamilySpec::jacobi(3.0, 0.5, 25),
        FamilySpec::ultraspherical(-0.5, 25)}) {
    const auto rc = recurrence_coefficients(spec);
    const auto seeds = detail::tridiagonal_eigenvalues(rc.diagonal, rc.offdiagonal);
    const auto zs = compute_zeros(spec);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      CHECK(std::abs(zs.zeros[k] - seeds[k]) <=
            1e-6 * std::max(1.0, std::abs(seeds[k])));
    }
  }
}

TEST_CASE("zeros of degree n and n+1 strictly interlace") {
  for (const FamilySpec& spec :
       {FamilySpec::laguerre(-0.5, 12), FamilySpec::jacobi(0.5, 2.0, 9),
        FamilySpec::ultraspherical(4.0, 15)}) {
    FamilySpec next = spec;
    next.degree += 1;
    const auto zn = compute_zeros(spec).zeros;
    const auto zn1 = compute_zeros(next).zeros;
    for (std::size_t k = 0; k < zn.size(); ++k) {
      CHECK(zn1[k] < zn[k]);
      CHECK(zn[k] < zn1[k + 1]);
    }
  }
}

TEST_CASE("symmetric families give +- pairs with 0 iff n odd") {
  for (int n : {4, 7}) {
    const auto zs = compute_zeros(FamilySpec::ultraspherical(1.5, n));
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(zs.zeros[k] + zs.zeros[n - 1 - k]) <= 1e-12);
    }
    if (n % 2 == 1) {
      CHECK(std::abs(zs.zeros[n / 2]) <= 1e-12);
    }
  }
}

TEST_CASE("residual bound and support membership hold across varied specs") {
  oracles::ParamRng rng(0x5eed0006);
  for (int trial = 0; trial < 12; ++trial) {
    const double a = rng.uniform(-0.9, 8.0);
    const int n = rng.uniform_int(2, 50);
    FamilySpec spec = FamilySpec::laguerre(a, n);
    if (trial % 3 == 1) spec = FamilySpec::jacobi(a, rng.uniform(-0.9, 8.0), n);
    if (trial % 3 == 2) spec = FamilySpec::ultraspherical(a, n);
    const auto zs = compute_zeros(spec);
    const Interval sup = support(spec);
    for (double z : zs.zeros) {
      CHECK(sup.contains(z));
      const EvalResult e = evaluate(spec, z);
      CHECK(std::abs(e.value) <=
            1e-10 * std::abs(e.derivative) * std::max(1.0, std::abs(z)));
    }
    for (double s : zs.spacings) CHECK(s > 0.0);
  }
}

TEST_CASE("refinement settles at the parameter caps") {
  // At the scale caps the Newton step can dither at the recurrence's rounding
  // floor; the pipeline must still deliver residual-clean, ordered zeros.
  const FamilySpec spec = FamilySpec::laguerre(30.0, 200);
  const auto zs = compute_zeros(spec);
  REQUIRE(zs.zeros.size() == 200);
  for (double z : zs.zeros) {
    const EvalResult e = evaluate(spec, z);
    CHECK(std::abs(e.value) <=
          1e-10 * std::abs(e.derivative) * std::max(1.0, std::abs(z)));
  }
  for (double s : zs.spacings) CHECK(s > 0.0);
}

TEST_CASE("laguerre first-zero bounds") {
  SUBCASE("closed forms at alpha=2 n=4") {
    const auto b = first_zero_bounds(FamilySpec::laguerre(2.0, 4));
    CHECK(b.lower == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(b.upper_a == doctest::Approx(12.0 / 7.0).epsilon(1e-15));
    CHECK(b.upper_b == doctest::Approx(15.0 / 11.0).epsilon(1e-15));
  }
  SUBCASE("t0 sits below the x1 upper bounds at alpha=3 n=5") {
    const auto b = first_zero_bounds(FamilySpec::laguerre(3.0, 5));
    CHECK(b.t0_below_upper_bounds);
    CHECK(4.0 / 7.0 < std::min(b.upper_a, b.upper_b));
  }
  SUBCASE("computed x1 falls between the bounds at alpha=0 n=3") {
    const auto b = first_zero_bounds(FamilySpec::laguerre(0.0, 3));
    const auto zs = compute_zeros(FamilySpec::laguerre(0.0, 3));
    CHECK(zs.zeros[0] > b.lower);
    CHECK(zs.zeros[0] < b.upper_b);
    CHECK(zs.zeros[0] == doctest::Approx(0.41577455678347908).epsilon(1e-12));
  }
  SUBCASE("x1 > (alpha+1)/n across parameters") {
    for (double a : {-0.5, 0.0, 2.0, 6.0}) {
      // n = 1 attains the bound exactly: the only zero of L_1 is alpha+1
      CHECK(compute_zeros(FamilySpec::laguerre(a, 1)).zeros[0] ==
            doctest::Approx(a + 1.0).epsilon(1e-14));
      for (int n : {2, 3, 10, 30}) {
        const auto zs = compute_zeros(FamilySpec::laguerre(a, n));
        CHECK(zs.zeros[0] > (a + 1.0) / n);
      }
    }
  }
  SUBCASE("unsupported family") {
    CHECK_THROWS_AS(first_zero_bounds(FamilySpec::jacobi(0.0, 0.0, 3)), UnsupportedFamily);
  }
}
