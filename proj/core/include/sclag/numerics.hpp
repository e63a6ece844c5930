// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_NUMERICS_HPP
#define SCLAG_NUMERICS_HPP

#include <functional>

#include "sclag/real.hpp"

namespace sclag {

/// Gamma function for positive real argument, correctly rounded at the
/// precision of `s`. Throws DomainError if s <= 0.
Real gamma(const Real& s);

struct QuadratureOptions {
    Prec precision_bits = kDefaultPrecision;
    /// Absolute tolerance. Default-constructed (NaN) means 2^-(precision_bits/2).
    Real abs_tol;
    /// Gauss-Legendre panel order; 0 derives it from the precision.
    int panel_order = 0;
    /// Budget: the adaptive bisection gives up past this many panels.
    long max_panels = 40000;
};

/// ∫_0^∞ x^s e^{-x^2+tx} dx by adaptive Gauss-Legendre bisection, split at
/// c = max(1, t) with the tail mapped through x = c + u/(1-u).
///
/// Cross-check oracle only; the production coefficient routes never call it.
/// Throws DomainError for s <= -1 (divergent at 0) and ConvergenceError,
/// carrying the achieved error estimate, when the panel budget runs out.
Real integrate_halfline(const Real& s, const Real& t,
                        const QuadratureOptions& opts = {});

/// ∫_0^∞ g(x) x^s e^{-x^2+tx} dx, same scheme as integrate_halfline.
Real integrate_halfline_weighted(const std::function<Real(const Real&)>& g,
                                 const Real& s, const Real& t,
                                 const QuadratureOptions& opts = {});

/// ∫_0^∞ f(x) dx for integrands decaying at least as fast as a Gaussian.
/// `split` separates the finite part (0, split] from the mapped tail and
/// must be positive.
Real integrate_to_infinity(const std::function<Real(const Real&)>& f,
                           const Real& split,
                           const QuadratureOptions& opts = {});

} // namespace sclag

#endif
