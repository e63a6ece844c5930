// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_TODA_HPP
#define SCLAG_TODA_HPP

#include <utility>
#include <vector>

#include "sclag/moments.hpp"

namespace sclag {

/// Analytic t-derivative of x_n on the orbit:
/// x' = (sqrt(2) t x - 4 y x^2 - 2) / (2 sqrt(2)).
Real xn_derivative(const Real& x, const Real& y, const Real& t);

/// Residuals of the Toda system at one grid point t:
///   r1[n] = FD[(a_n^2)'] - a_n^2 (b_n - b_{n-1}),  n = 1..N
///   r2[n] = FD[b_n']     - (a_{n+1}^2 - a_n^2),    n = 0..N-1
/// (central differences with step h on the Hankel-route coefficients; r1[0]
/// is unused and left NaN).
struct TodaResiduals {
    Real t;
    std::vector<Real> r1;
    std::vector<Real> r2;
};

struct TodaResidualReport {
    std::vector<TodaResiduals> at;
    Real h;
    Prec precision_bits;

    /// Largest |r1|, |r2| over the whole report.
    Real max_abs() const;
};

TodaResidualReport toda_residuals(const WeightParams& params, long N,
                                  const std::vector<Real>& t_grid,
                                  const Real& h,
                                  Prec prec = kDefaultPrecision);

/// Residual of the second-order ODE for x_n, with x'' obtained by central
/// differencing of the analytic first derivative:
/// x'' - [ (3/2) x'^2/x + (alpha^2/4) x^3 - (x/8)(t^2-4-8n-4alpha)
///         + t/sqrt(2) - 3/(4x) ].
Real xn_ode_residual(const WeightParams& params, long n, const Real& t,
                     const Real& h, Prec prec = kDefaultPrecision);

/// Integrates the Toda system for n = 0..N from t0 to t1 with an embedded
/// Cash-Karp 4(5) pair at local tolerance tol. The truncation closure
/// a_{N+1}^2(t) is supplied by the Hankel route at every stage; initial data
/// comes from the Hankel route at t0. Returns the accepted steps, route tag
/// `toda`. t0 == t1 returns the initial data unchanged.
std::vector<std::pair<Real, CoeffTable>> toda_integrate(
    const WeightParams& params, long N, const Real& t0, const Real& t1,
    const Real& tol, Prec prec = kDefaultPrecision);

/// Default finite-difference step: 2^-32 at 256 bits, 2^-(prec/8) otherwise.
Real default_fd_step(Prec prec);

} // namespace sclag

#endif
