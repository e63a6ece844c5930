// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/painleve4.hpp"

#include <algorithm>
#include <string>

#include "sclag/discrete.hpp"
#include "sclag/errors.hpp"
#include "sclag/toda.hpp"

namespace sclag {

namespace {

void require_nonzero(const Real& v, const char* what) {
    if (abs(v) < Real::pow2(-v.precision() / 2, v.precision()))
        throw SingularityError(std::string(what) + " vanished");
}

} // namespace

P4Params laguerre_p4_params(long n, const Real& alpha) {
    return P4Params{alpha + (1 + 2 * n), -2L * sqr(alpha)};
}

P4Point q_from_orbit(const WeightParams& params, long n, const Real& z,
                     const Real& h, Prec prec) {
    prec = std::max(prec, kMinPrecision);
    const Real t = (2L * z).round_to(prec);
    const Real sqrt2 = Real::sqrt2(prec);

    auto q_and_q1 = [&](const Real& tt) {
        DiscreteState s = run_discrete(params.with_t(tt), n, prec).states.back();
        require_nonzero(s.x, "q_from_orbit: x_n");
        Real q = -sqrt2 / s.x;
        Real q1 = 2L * sqrt2 * xn_derivative(s.x, s.y, tt) / sqr(s.x);
        return std::pair<Real, Real>{std::move(q), std::move(q1)};
    };

    auto [q, q1] = q_and_q1(t);
    Real q1_hi = q_and_q1(t + h).second;
    Real q1_lo = q_and_q1(t - h).second;
    Real q2 = (q1_hi - q1_lo) / h; // dz = dt/2
    return P4Point{z.round_to(prec), std::move(q), std::move(q1), std::move(q2),
                   laguerre_p4_params(n, params.alpha.round_to(prec))};
}

Real p4_residual(const P4Point& p) {
    require_nonzero(p.q, "p4_residual: q");
    const Real& q = p.q;
    const Real& z = p.z;
    Real rhs = sqr(p.q1) / (2L * q) + 3L * pow_int(q, 3) / 2L +
               4L * z * sqr(q) + 2L * (sqr(z) - p.params.A) * q +
               p.params.B / q;
    return p.q2 - rhs;
}

Real riccati_residual(const Real& q, const Real& q1, const Real& z,
                      const Real& alpha) {
    return q1 + sqr(q) + 2L * z * q - 2L * alpha;
}

BacklundResult backlund(const Real& q, const Real& q1, const Real& z,
                        const P4Params& params, int eps, int mu) {
    if ((eps != 1 && eps != -1) || (mu != 1 && mu != -1))
        throw DomainError("backlund: eps and mu must be +-1");
    if (params.B > 0L)
        throw DomainError("backlund: needs B <= 0 for sqrt(-2B)");
    require_nonzero(q, "backlund: q");
    Real s = sqrt(-2L * params.B);
    Real q_new = (q1 - mu * sqr(q) - 2L * mu * z * q - eps * s) / (2L * mu * q);
    Real A_new = (2L * Real(mu, q.precision()) - 2L * params.A +
                  (3L * mu * eps) * s) / 4L;
    Real B_new = -sqr(1L + params.A * mu + eps * s / 2L) / 2L;
    return BacklundResult{std::move(q_new), {std::move(A_new), std::move(B_new)}};
}

Real ladder_up(const Real& q, const Real& q1, const Real& z, long n,
               const Real& alpha) {
    require_nonzero(q, "ladder_up: q");
    Real w = 2L * z * q + sqr(q) - q1;
    Real num = (2L * alpha + w) * (2L * alpha - w);
    Real den = 2L * q * (w - 4L - 4L * n - 2L * alpha);
    require_nonzero(den, "ladder_up: denominator");
    return num / den;
}

Real ladder_down(const Real& q, const Real& q1, const Real& z, long n,
                 const Real& alpha) {
    require_nonzero(q, "ladder_down: q");
    Real w = q1 + sqr(q) + 2L * z * q;
    Real num = (w - 2L * alpha) * (w + 2L * alpha);
    Real den = 2L * q * (w - 2L * (2L * n + alpha));
    require_nonzero(den, "ladder_down: denominator");
    return -num / den;
}

Real relation_E_check(const WeightParams& params, long n, const Real& z,
                      Prec prec) {
    if (n < 1) throw DomainError("relation_E_check: needs n >= 1");
    prec = std::max(prec, kMinPrecision);
    const Real t = (2L * z).round_to(prec);
    const Real sqrt2 = Real::sqrt2(prec);
    const Real alpha = params.alpha.round_to(prec);

    DiscreteRun run = run_discrete(params.with_t(t), n + 1, prec);
    auto q_of = [&](long m) {
        const DiscreteState& s = run.states[m];
        require_nonzero(s.x, "relation_E_check: x");
        return -sqrt2 / s.x;
    };
    const DiscreteState& sn = run.states[n];
    Real qn = q_of(n);
    Real q1n = 2L * sqrt2 * xn_derivative(sn.x, sn.y, t) / sqr(sn.x);
    Real up = ladder_up(qn, q1n, z.round_to(prec), n, alpha);
    Real down = ladder_down(qn, q1n, z.round_to(prec), n, alpha);
    return max(abs(up - q_of(n + 1)), abs(down - q_of(n - 1)));
}

} // namespace sclag
