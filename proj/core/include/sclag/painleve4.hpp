// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_PAINLEVE4_HPP
#define SCLAG_PAINLEVE4_HPP

#include "sclag/moments.hpp"
#include "sclag/real.hpp"

namespace sclag {

/// Parameter pair (A, B) of P_IV:
/// q'' = q'^2/(2q) + 3q^3/2 + 4z q^2 + 2(z^2 - A) q + B/q.
struct P4Params {
    Real A;
    Real B;
};

/// Solution sample (z, q, q', q'') with its parameters.
struct P4Point {
    Real z;
    Real q;
    Real q1;
    Real q2;
    P4Params params;
};

/// Parameters carried by the Laguerre orbit: A = 1 + 2n + alpha, B = -2 alpha^2.
P4Params laguerre_p4_params(long n, const Real& alpha);

/// q(z) = -sqrt(2)/x_n(2z) via the discrete orbit. q' is analytic
/// (chain rule through xn_derivative, dt = 2 dz); q'' is a central
/// difference of q' with z-step h/2 (t-step h), the only differencing
/// level, so residuals built on it bottom out at O(h^2).
P4Point q_from_orbit(const WeightParams& params, long n, const Real& z,
                     const Real& h, Prec prec = kDefaultPrecision);

/// Defect of the point under P_IV.
Real p4_residual(const P4Point& p);

/// q' + q^2 + 2zq - 2 alpha (vanishes on the n=0 orbit).
Real riccati_residual(const Real& q, const Real& q1, const Real& z,
                      const Real& alpha);

struct BacklundResult {
    Real q;
    P4Params params;
};

/// Backlund transformation T_{eps,mu} (eps, mu = +-1):
///   q~ = (q' - mu q^2 - 2 mu z q - eps sqrt(-2B)) / (2 mu q)
/// with A~ = (2mu - 2A + 3 mu eps sqrt(-2B))/4,
///      B~ = -(1 + A mu + eps sqrt(-2B)/2)^2 / 2.
/// Requires B <= 0 and q != 0.
BacklundResult backlund(const Real& q, const Real& q1, const Real& z,
                        const P4Params& params, int eps, int mu);

/// q_{n+1} from (q_n, q_n'); composition of three Backlund steps.
/// New parameters are (3 + 2n + alpha, -2 alpha^2).
Real ladder_up(const Real& q, const Real& q1, const Real& z, long n,
               const Real& alpha);

/// q_{n-1} from (q_n, q_n'); new parameters (2n + alpha - 1, -2 alpha^2).
/// On n = 0 orbit points the Riccati identity collapses both the first
/// numerator factor and the denominator, so the 0/0 form raises
/// SingularityError; there is no n = -1 member to land on.
Real ladder_down(const Real& q, const Real& q1, const Real& z, long n,
                 const Real& alpha);

/// The three-term relation E evaluated through the ladder: maps orbit
/// neighbors x_{n-1}, x_{n+1} to q_{n+-1} and returns
/// max(|ladder_up(q_n) - q_{n+1}|, |ladder_down(q_n) - q_{n-1}|).
Real relation_E_check(const WeightParams& params, long n, const Real& z,
                      Prec prec = kDefaultPrecision);

} // namespace sclag

#endif
