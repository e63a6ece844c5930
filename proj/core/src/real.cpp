// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/real.hpp"

#include <algorithm>
#include <ostream>

#include "sclag/errors.hpp"

namespace sclag {

namespace {
Prec wider(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

Real Real::parse(const std::string& s, Prec prec) {
    Real r(prec);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("not a valid decimal literal: '" + s + "'");
    return r;
}

Real Real::pi(Prec prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt2(Prec prec) {
    Real r(prec);
    mpfr_sqrt_ui(r.v_, 2, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, Prec prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real Real::round_to(Prec prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int significant_digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*g", significant_digits, MPFR_RNDN, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real exp(const Real& x) {
    Real r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real log(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real abs(const Real& x) {
    Real r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real sqr(const Real& x) {
    Real r(x.precision());
    mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real pow_int(const Real& x, long e) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
    return os << x.str(24);
}

} // namespace sclag
