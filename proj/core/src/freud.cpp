// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/freud.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sclag/errors.hpp"

namespace sclag {

FreudTable dpi_run(const WeightParams& params, long N, Prec prec) {
    if (N < 0) throw DomainError("dpi_run: N must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const Real alpha = params.alpha.round_to(prec);
    const Real t = params.t.round_to(prec);
    const Real floor = Real::pow2(-prec / 2, prec);

    FreudTable table{params, {}, prec};
    table.A2.push_back(Real(0L, prec));
    if (N == 0) return table;
    auto [mu0, mu1] = base_moments(params, prec);
    table.A2.push_back(mu1 / mu0);
    for (long n = 1; n + 1 <= N; ++n) {
        const Real& cur = table.A2[n];
        if (!(cur > floor))
            throw PrecisionError(
                "dpi_run: A_" + std::to_string(n) +
                "^2 lost positivity; forward dPI exhausted the precision");
        long delta = n % 2; // (1 - (-1)^n)/2
        Real rhs = (Real(n, prec) + (2L * alpha + 1L) * delta) / (4L * cur) -
                   table.A2[n - 1] - cur + t / 2L;
        table.A2.push_back(std::move(rhs));
    }
    if (!(table.A2[N] > 0L))
        throw PrecisionError("dpi_run: A_" + std::to_string(N) +
                             "^2 not positive; raise the precision");
    return table;
}

Real dpi_f2_residual(const WeightParams& params, long n, const Real& h,
                     Prec prec) {
    if (n < 1) throw DomainError("dpi_f2_residual: n must be >= 1");
    prec = std::max(prec, kMinPrecision);
    FreudTable lo = dpi_run(params.with_t(params.t - h), n, prec);
    FreudTable mid = dpi_run(params, n + 1, prec);
    FreudTable hi = dpi_run(params.with_t(params.t + h), n, prec);
    Real fd = (hi.A2[n] - lo.A2[n]) / (2L * h);
    return fd - mid.A2[n] * (mid.A2[n + 1] - mid.A2[n - 1]);
}

std::vector<FreudCrossRow> freud_cross_check(const WeightParams& params,
                                             long N, Prec prec) {
    if (N < 0) throw DomainError("freud_cross_check: N must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const long lagN = std::max(N, 1L);
    CoeffTable lag = hankel_route(params, lagN, prec);
    CoeffTable lag1 = hankel_route(params.shifted_alpha(1), lagN, prec);
    FreudTable fr = dpi_run(params, 2 * N + 2, prec);

    std::vector<FreudCrossRow> rows;
    for (long n = 0; n <= N; ++n) {
        FreudCrossRow row{n, Real(prec), Real(prec), Real(prec), Real(prec)};
        if (n >= 1)
            row.a_alpha = lag.a2[n] - fr.A2[2 * n] * fr.A2[2 * n - 1];
        row.b_alpha = lag.b[n] - (fr.A2[2 * n] + fr.A2[2 * n + 1]);
        row.a_alpha1 = lag1.a2[n] - fr.A2[2 * n] * fr.A2[2 * n + 1];
        row.b_alpha1 = lag1.b[n] - (fr.A2[2 * n + 2] + fr.A2[2 * n + 1]);
        rows.push_back(std::move(row));
    }
    return rows;
}

P4Params freud_p4_map(long n, const Real& alpha) {
    if (n < 1) throw DomainError("freud_p4_map: n must be >= 1");
    if (n % 2 == 0)
        return P4Params{-(2L + n + 4L * alpha) / 2L,
                        Real(-n * n, alpha.precision()) / 2L};
    return P4Params{(1L - n) / 2L + alpha, -sqr(1L + n + 2L * alpha) / 2L};
}

namespace {

// d f / dz for f(z) = -2 A_n^2(2z), analytic through the dPI flow (dt = 2 dz).
Real freud_f_deriv(const FreudTable& table, long n) {
    return -4L * table.A2[n] * (table.A2[n + 1] - table.A2[n - 1]);
}

} // namespace

P4Point freud_f_point(const WeightParams& params, long n, const Real& z,
                      const Real& h, Prec prec) {
    if (n < 1) throw DomainError("freud_f_point: n must be >= 1");
    prec = std::max(prec, kMinPrecision);
    const Real t = (2L * z).round_to(prec);
    FreudTable lo = dpi_run(params.with_t(t - h), n + 1, prec);
    FreudTable mid = dpi_run(params.with_t(t), n + 1, prec);
    FreudTable hi = dpi_run(params.with_t(t + h), n + 1, prec);
    Real f = -2L * mid.A2[n];
    Real f1 = freud_f_deriv(mid, n);
    Real f2 = (freud_f_deriv(hi, n) - freud_f_deriv(lo, n)) / h; // dz = dt/2
    return P4Point{z.round_to(prec), std::move(f), std::move(f1), std::move(f2),
                   freud_p4_map(n, params.alpha.round_to(prec))};
}

Real freud_q_direct(const WeightParams& params, long n, const Real& z,
                    Prec prec) {
    prec = std::max(prec, kMinPrecision);
    const Real t = (2L * z).round_to(prec);
    CoeffTable lag = hankel_route(params.with_t(t), std::max(n, 1L), prec);
    return -2L * z.round_to(prec) + 2L * lag.b[n];
}

FreudBacklundLink freud_backlund_link(const WeightParams& params, long n,
                                      const Real& z, const Real& h,
                                      FreudLink which, Prec prec) {
    if (n < 0) throw DomainError("freud_backlund_link: n must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const Real t = (2L * z).round_to(prec);
    const Real zr = z.round_to(prec);
    const long i1 = which == FreudLink::rel1 ? 2 * n : 2 * n + 2;
    const long top = std::max(i1, 2 * n + 1);

    FreudTable lo = dpi_run(params.with_t(t - h), top, prec);
    FreudTable mid = dpi_run(params.with_t(t), top, prec);
    FreudTable hi = dpi_run(params.with_t(t + h), top, prec);

    Real f1 = -2L * mid.A2[i1];
    if (abs(f1) < Real::pow2(-prec / 2, prec))
        throw SingularityError("freud_backlund_link: f1 = 0");
    // f1'(z) by central differences, dz = dt/2.
    Real f1p = -2L * (hi.A2[i1] - lo.A2[i1]) / h;
    Real f2_direct = -2L * mid.A2[2 * n + 1];

    Real f2_backlund(prec), q_direct(prec);
    if (which == FreudLink::rel1) {
        f2_backlund = (2L * n - 2L * zr * f1 - sqr(f1) - f1p) / (2L * f1);
        q_direct = freud_q_direct(params, n, z, prec);
    } else {
        f2_backlund = (2L + 2L * n - 2L * zr * f1 - sqr(f1) + f1p) / (2L * f1);
        q_direct = freud_q_direct(params.shifted_alpha(1), n, z, prec);
    }
    Real q_backlund = -2L * zr - f1 - f2_backlund;
    return FreudBacklundLink{std::move(f2_direct), std::move(f2_backlund),
                             std::move(q_direct), std::move(q_backlund)};
}

FreudTable freud_hankel_oracle(const WeightParams& params, long N, Prec prec) {
    if (N < 0) throw DomainError("freud_hankel_oracle: N must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const long M = N / 2 + 1; // largest determinant size needed
    const Prec wp = std::max(prec, 64 + 24 * M);
    MomentTable mt = moment_table(params, 2 * M + 1, wp);

    // E_k = det[mu_{i+j}]_{k x k}, O_k the same with all indices shifted by 1.
    auto dets = [&](long shift) {
        std::vector<Real> d;
        d.push_back(Real(1L, wp));
        for (long k = 1; k <= M + 1; ++k) {
            std::vector<std::vector<Real>> m(k);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    m[i].push_back(mt.mu[i + j + shift]);
            d.push_back(bareiss_determinant(std::move(m)));
            if (!(d.back() > 0L))
                throw PrecisionError(
                    "freud_hankel_oracle: split determinant not positive; "
                    "raise the precision");
        }
        return d;
    };
    std::vector<Real> E = dets(0), O = dets(1);

    FreudTable table{params, {}, prec};
    table.A2.push_back(Real(0L, prec));
    for (long idx = 1; idx <= N; ++idx) {
        long n = idx / 2;
        Real a2 = (idx % 2 == 0)
                      ? E[n + 1] * O[n - 1] / (E[n] * O[n])
                      : E[n] * O[n + 1] / (E[n + 1] * O[n]);
        table.A2.push_back(a2.round_to(prec));
    }
    return table;
}

} // namespace sclag
