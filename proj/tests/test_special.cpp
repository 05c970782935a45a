#include <cmath>

#include "doctest.h"

#include "cclab/errors.hpp"
#include "cclab/special.hpp"

using namespace cclab;

TEST_CASE("regularized incomplete gamma against erf identity") {
    // P(1/2, x) = erf(sqrt(x))
    for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        CHECK(regularized_gamma_p(0.5, x) ==
              doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
    }
    // P(1, x) = 1 - e^{-x}
    for (double x : {0.2, 1.0, 3.0, 8.0}) {
        CHECK(regularized_gamma_p(1.0, x) == doctest::Approx(-std::expm1(-x)).epsilon(1e-12));
    }
    CHECK(regularized_gamma_p(2.5, 0.0) == 0.0);
    CHECK_THROWS_AS(regularized_gamma_p(-1.0, 1.0), InvalidInputError);
}

TEST_CASE("chi-square quantiles match reference values") {
    // reference values from an independent statistics library
    CHECK(chi2_quantile(0.999, 9) == doctest::Approx(27.877164871256568).epsilon(1e-9));
    CHECK(chi2_quantile(0.999, 184) == doctest::Approx(249.01803913472386).epsilon(1e-9));
    CHECK(chi2_quantile(0.999, 1) == doctest::Approx(10.827566170662733).epsilon(1e-9));
    CHECK(chi2_quantile(0.95, 10) == doctest::Approx(18.307038053275146).epsilon(1e-9));
    CHECK_THROWS_AS(chi2_quantile(1.5, 3), InvalidInputError);
}

TEST_CASE("adaptive quadrature on closed forms") {
    const double third = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(third == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    const double gauss =
        integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-12);
    CHECK(gauss == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}
