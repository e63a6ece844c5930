// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_TEST_SUPPORT_HPP
#define SCLAG_TEST_SUPPORT_HPP

#include <doctest.h>

#include <string>

#include "sclag/real.hpp"

namespace sclag::testing {

inline Real lit(const char* s, Prec prec = kDefaultPrecision) {
    return Real::parse(s, prec);
}

/// |a - b| <= tol with a readable failure message.
inline void check_close(const Real& a, const Real& b, const Real& tol,
                        const std::string& what = "") {
    Real diff = abs(a - b);
    INFO(what << ": |" << a.str(36) << " - " << b.str(36) << "| = "
              << diff.str(6) << ", tol " << tol.str(3));
    CHECK(diff <= tol);
}

inline void check_close(const Real& a, const Real& b, const char* tol,
                        const std::string& what = "") {
    check_close(a, b, lit(tol, a.precision()), what);
}

/// Relative agreement: |a - b| <= tol * |b|.
inline void check_rel(const Real& a, const Real& b, const char* tol,
                      const std::string& what = "") {
    check_close(a, b, lit(tol, a.precision()) * abs(b), what);
}

} // namespace sclag::testing

#endif
