// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/ladder.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sclag/discrete.hpp"
#include "sclag/errors.hpp"

namespace sclag {

LadderCoeffs ladder_from_coeffs(const CoeffTable& coeffs, long n,
                                const Real& t) {
    if (n < 0 || n > coeffs.n_max())
        throw DomainError("ladder_from_coeffs: index " + std::to_string(n) +
                          " outside table range");
    return LadderCoeffs{n, 2L * coeffs.b[n] - t, 2L * coeffs.a2[n] - n};
}

std::vector<ConditionRow> verify_conditions(const CoeffTable& coeffs, long N) {
    if (N < 0 || N + 1 > coeffs.n_max())
        throw DomainError("verify_conditions: table must cover 0..N+1");
    const Prec prec = coeffs.precision_bits;
    const Real alpha = coeffs.params.alpha.round_to(prec);
    const Real t = coeffs.params.t.round_to(prec);

    std::vector<Real> R, r;
    for (long j = 0; j <= N + 1; ++j) {
        LadderCoeffs lc = ladder_from_coeffs(coeffs, j, t);
        R.push_back(std::move(lc.R));
        r.push_back(std::move(lc.r));
    }
    auto beta = [&](long j) -> const Real& { return coeffs.a2[j]; };
    auto an = [&](long j) -> const Real& { return coeffs.b[j]; };

    std::vector<ConditionRow> rows;
    Real sumR(0L, prec), comp(0L, prec); // Kahan-compensated sum of R_j, j < n
    for (long n = 0; n <= N; ++n) {
        ConditionRow row{n, Real(prec), Real(prec), Real(prec), Real(prec),
                         Real(prec)};
        row.cond2 = r[n] + r[n + 1] - (alpha - an(n) * R[n]);
        row.cond3 = 1L + r[n + 1] - r[n] - 2L * (beta(n + 1) - beta(n));
        if (n >= 1) {
            row.cond4 = an(n) * (r[n] - r[n + 1]) -
                        (beta(n + 1) * R[n + 1] - beta(n) * R[n - 1]);
            row.cond6 = sumR - t * r[n] - 2L * beta(n) * (R[n - 1] + R[n]);
            row.cond7 = sqr(r[n]) - alpha * r[n] - beta(n) * R[n - 1] * R[n];
        }
        Real y = R[n] - comp;
        Real s = sumR + y;
        comp = (s - sumR) - y;
        sumR = std::move(s);
        rows.push_back(std::move(row));
    }
    return rows;
}

OrthonormalPolys::OrthonormalPolys(CoeffTable coeffs)
    : coeffs_(std::move(coeffs)) {
    const Prec prec = coeffs_.precision_bits;
    a_.reserve(coeffs_.a2.size());
    a_.push_back(Real(0L, prec));
    for (size_t n = 1; n < coeffs_.a2.size(); ++n)
        a_.push_back(sqrt(coeffs_.a2[n]));
    auto [mu0, mu1] = base_moments(coeffs_.params, prec);
    (void)mu1;
    p0_ = 1L / sqrt(mu0);
}

Real OrthonormalPolys::operator()(long n, const Real& x) const {
    if (n < 0 || n > coeffs_.n_max())
        throw DomainError("orthonormal evaluation: index outside table range");
    Real prev(0L, p0_.precision());
    Real cur = p0_;
    for (long k = 0; k < n; ++k) {
        Real next = ((x - coeffs_.b[k]) * cur - a_[k] * prev) / a_[k + 1];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real eval_orthonormal(const CoeffTable& coeffs, long n, const Real& x) {
    return OrthonormalPolys(coeffs)(n, x);
}

std::pair<Real, Real> w_equals_Rn_check(const WeightParams& params, long n,
                                        Prec prec,
                                        const QuadratureOptions& quad) {
    if (!(params.alpha > 0L))
        throw DomainError("w_equals_Rn_check: hypothesis alpha > 0 violated");
    prec = std::max(prec, kMinPrecision);

    DiscreteState s = run_discrete(params, n, prec).states.back();
    Real lhs = -Real::sqrt2(prec) / s.x;

    OrthonormalPolys polys(hankel_route(params, std::max(n, 1L), prec));
    QuadratureOptions opts = quad;
    if (opts.precision_bits == kDefaultPrecision) opts.precision_bits = prec;
    const Real alpha = params.alpha.round_to(prec);
    Real integral = integrate_halfline_weighted(
        [&](const Real& y) { return sqr(polys(n, y)); }, alpha - 1L,
        params.t.round_to(prec), opts);
    return {std::move(lhs), alpha * integral};
}

} // namespace sclag
