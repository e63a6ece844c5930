// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/numerics.hpp"

#include <doctest.h>

#include "sclag/errors.hpp"
#include "test_support.hpp"

using namespace sclag;
using namespace sclag::testing;

namespace {
const Prec P = kDefaultPrecision;
}

TEST_CASE("gamma at integers and half-integers") {
    check_close(gamma(Real(1L, P)), Real(1L, P), "1e-75", "gamma(1)");
    check_close(gamma(Real(0.5, P)), sqrt(Real::pi(P)), "1e-75", "gamma(1/2)");
    // Gamma(5/2) by recursion from Gamma(1/2): (3/2)(1/2) sqrt(pi).
    Real oracle = 3L * sqrt(Real::pi(P)) / 4L;
    check_close(gamma(Real(2.5, P)), oracle, "1e-75", "gamma(5/2)");
    check_close(gamma(Real(2.5, P)), lit("1.32934038817913702"), "1e-17",
                "gamma(5/2) digits");
}

TEST_CASE("gamma rejects the nonpositive axis") {
    CHECK_THROWS_AS(gamma(Real(0L, P)), DomainError);
    CHECK_THROWS_AS(gamma(Real(-1.5, P)), DomainError);
}

TEST_CASE("gamma recursion invariant over [0.25, 50]") {
    // gamma(s+1) = s gamma(s) to within 16 ulps.
    const Real rel_tol = Real::pow2(-(P - 6), P);
    for (double s : {0.25, 0.5, 1.75, 3.0, 7.3, 12.5, 26.0, 50.0}) {
        Real lhs = gamma(Real(s, P) + 1L);
        Real rhs = Real(s, P) * gamma(Real(s, P));
        check_close(lhs, rhs, rel_tol * abs(lhs), "recursion at s");
    }
}

TEST_CASE("half-line quadrature spot values at t = 0") {
    // Half-Gaussian and its integration-by-parts descendants.
    Real v0 = integrate_halfline(Real(0L, P), Real(0L, P));
    check_close(v0, sqrt(Real::pi(P)) / 2L, "1e-37", "s=0");
    check_close(v0, lit("0.88622692545275801"), "1e-17", "s=0 digits");
    Real v1 = integrate_halfline(Real(1L, P), Real(0L, P));
    check_close(v1, Real(0.5, P), "1e-37", "s=1");
    Real v2 = integrate_halfline(Real(2L, P), Real(0L, P));
    check_close(v2, sqrt(Real::pi(P)) / 4L, "1e-37", "s=2");
    check_close(v2, lit("0.44311346272637900"), "1e-17", "s=2 digits");
}

TEST_CASE("quadrature matches Gamma((s+1)/2)/2 for t = 0") {
    for (double s : {0.0, 0.5, 1.0, 2.0, 3.7}) {
        Real got = integrate_halfline(Real(s, P), Real(0L, P));
        Real want = gamma((Real(s, P) + 1L) / 2L) / 2L;
        check_close(got, want, "1e-37", "s = " + std::to_string(s));
    }
}

TEST_CASE("quadrature handles the integrable endpoint singularity") {
    // s in (-1, 0): x^s blows up at 0 but stays integrable.
    QuadratureOptions opts;
    opts.abs_tol = lit("1e-30");
    Real got = integrate_halfline(Real(-0.5, P), Real(0L, P), opts);
    Real want = gamma(Real(0.25, P)) / 2L;
    check_close(got, want, "1e-28", "s=-1/2 vs Gamma(1/4)/2");
}

TEST_CASE("quadrature with a shifted Gaussian, erf oracle") {
    // int_0^inf e^{-x^2+2x} dx = e * (sqrt(pi)/2) * (1 + erf(1)).
    Real erf1(P);
    mpfr_erf(erf1.raw(), Real(1L, P).raw(), MPFR_RNDN);
    Real want = exp(Real(1L, P)) * sqrt(Real::pi(P)) / 2L * (1L + erf1);
    Real got = integrate_halfline(Real(0L, P), Real(2L, P));
    check_close(got, want, "1e-36", "t=2 shifted Gaussian");
}

TEST_CASE("weighted and plain integrands are consistent") {
    auto square = [](const Real& x) { return sqr(x); };
    Real a = integrate_halfline_weighted(square, Real(0.5, P), Real(1L, P));
    Real b = integrate_halfline(Real(2.5, P), Real(1L, P));
    check_close(a, b, "1e-36", "x^2 * x^0.5 vs x^2.5");
}

TEST_CASE("quadrature errors") {
    CHECK_THROWS_AS(integrate_halfline(Real(-1L, P), Real(0L, P)), DomainError);
    CHECK_THROWS_AS(integrate_halfline(Real(-1.25, P), Real(0L, P)),
                    DomainError);
    QuadratureOptions starved;
    starved.max_panels = 3;
    starved.abs_tol = Real::pow2(-200, P);
    try {
        integrate_halfline(Real(0.5, P), Real(0L, P), starved);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved() > 0.0);
    }
}

TEST_CASE("monotone refinement: more bits never move settled digits") {
    QuadratureOptions lo;
    lo.precision_bits = 192;
    QuadratureOptions hi;
    hi.precision_bits = 256;
    Real a = integrate_halfline(Real(1.5, 192), Real(1L, 192), lo);
    Real b = integrate_halfline(Real(1.5, 256), Real(1L, 256), hi);
    // The 192-bit run promises 2^-96; the refined value must sit inside that.
    check_close(a.round_to(256), b, Real::pow2(-90, 256), "refinement");
}
