// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_REAL_HPP
#define SCLAG_REAL_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace sclag {

using Prec = mpfr_prec_t;

/// Smallest mantissa width the library ever computes with.
inline constexpr Prec kMinPrecision = 64;
/// Default working precision, inherited by every module unless overridden.
inline constexpr Prec kDefaultPrecision = 256;

/// Arbitrary-precision real number backed by MPFR.
///
/// Every value carries its own mantissa width; binary operations round the
/// result to the wider of the two operand widths (round-to-nearest), so a
/// computation never silently narrows. Copying preserves the source width.
class Real {
public:
    Real() { mpfr_init2(v_, kMinPrecision); }
    explicit Real(Prec prec) { mpfr_init2(v_, clamp(prec)); }
    Real(double x, Prec prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(long x, Prec prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(int x, Prec prec) : Real(static_cast<long>(x), prec) {}

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(v_, kMinPrecision);
        mpfr_swap(v_, other.v_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    /// Parses a decimal literal at the given precision. Throws DomainError on
    /// malformed input.
    static Real parse(const std::string& s, Prec prec);
    static Real pi(Prec prec);
    static Real sqrt2(Prec prec);
    /// 2^e, exact.
    static Real pow2(long e, Prec prec);

    Prec precision() const { return mpfr_get_prec(v_); }
    /// The same value rounded to a different mantissa width.
    Real round_to(Prec prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Shortest-faithful decimal rendering with the given number of
    /// significant digits (printf %g semantics); deterministic.
    std::string str(int significant_digits) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(long a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator<=(const Real& a, const Real& b) {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const Real& a, const Real& b) {
        return mpfr_greater_p(a.v_, b.v_) != 0;
    }
    friend bool operator>=(const Real& a, const Real& b) {
        return mpfr_greaterequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator==(const Real& a, const Real& b) {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static Prec clamp(Prec prec) { return prec < kMinPrecision ? kMinPrecision : prec; }
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real abs(const Real& x);
Real sqr(const Real& x);
Real pow_int(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Prints ~24 significant digits; meant for diagnostics, not file formats.
std::ostream& operator<<(std::ostream& os, const Real& x);

} // namespace sclag

#endif
