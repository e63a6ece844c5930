// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/toda.hpp"

#include <algorithm>
#include <array>

#include "sclag/discrete.hpp"
#include "sclag/errors.hpp"

namespace sclag {

Real default_fd_step(Prec prec) {
    return Real::pow2(-std::max<long>(prec / 8, 16), std::max(prec, kMinPrecision));
}

Real xn_derivative(const Real& x, const Real& y, const Real& t) {
    const Prec prec = std::max({x.precision(), y.precision(), t.precision()});
    const Real sqrt2 = Real::sqrt2(prec);
    return (sqrt2 * t * x - 4L * y * sqr(x) - 2L) / (2L * sqrt2);
}

Real TodaResidualReport::max_abs() const {
    Real m(0L, precision_bits);
    for (const TodaResiduals& g : at) {
        for (size_t n = 1; n < g.r1.size(); ++n) m = max(m, abs(g.r1[n]));
        for (const Real& r : g.r2) m = max(m, abs(r));
    }
    return m;
}

TodaResidualReport toda_residuals(const WeightParams& params, long N,
                                  const std::vector<Real>& t_grid,
                                  const Real& h, Prec prec) {
    if (N < 1) throw DomainError("toda_residuals: N must be >= 1");
    prec = std::max(prec, kMinPrecision);
    TodaResidualReport report{{}, h.round_to(prec), prec};
    for (const Real& t : t_grid) {
        CoeffTable lo = hankel_route(params.with_t(t - h), N, prec);
        CoeffTable mid = hankel_route(params.with_t(t), N, prec);
        CoeffTable hi = hankel_route(params.with_t(t + h), N, prec);
        TodaResiduals res{t.round_to(prec), {}, {}};
        res.r1.resize(1, Real(prec)); // r1[0] unused
        const Real two_h = 2L * h;
        for (long n = 1; n <= N; ++n)
            res.r1.push_back((hi.a2[n] - lo.a2[n]) / two_h -
                             mid.a2[n] * (mid.b[n] - mid.b[n - 1]));
        for (long n = 0; n < N; ++n)
            res.r2.push_back((hi.b[n] - lo.b[n]) / two_h -
                             (mid.a2[n + 1] - mid.a2[n]));
        report.at.push_back(std::move(res));
    }
    return report;
}

Real xn_ode_residual(const WeightParams& params, long n, const Real& t,
                     const Real& h, Prec prec) {
    if (n < 0) throw DomainError("xn_ode_residual: n must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const Real alpha = params.alpha.round_to(prec);
    auto state_at = [&](const Real& tt) {
        return run_discrete(params.with_t(tt), n, prec).states.back();
    };
    DiscreteState lo = state_at(t - h), mid = state_at(t), hi = state_at(t + h);
    if (mid.x.is_zero()) throw SingularityError("xn_ode_residual: x_n = 0");
    Real xp = xn_derivative(mid.x, mid.y, t.round_to(prec));
    Real xpp = (xn_derivative(hi.x, hi.y, (t + h).round_to(prec)) -
                xn_derivative(lo.x, lo.y, (t - h).round_to(prec))) /
               (2L * h);
    const Real& x = mid.x;
    Real rhs = 3L * sqr(xp) / (2L * x) + sqr(alpha) / 4L * pow_int(x, 3) -
               x / 8L * (sqr(t.round_to(prec)) - 4L - 8L * n - 4L * alpha) +
               t.round_to(prec) / Real::sqrt2(prec) - 3L / (4L * x);
    return xpp - rhs;
}

namespace {

// State layout for the truncated Toda system: [a2_1..a2_N, b_0..b_N].
struct TodaField {
    const WeightParams& params;
    long N;
    Prec prec;

    std::vector<Real> operator()(const Real& t,
                                 const std::vector<Real>& y) const {
        Real closure = hankel_route(params.with_t(t), N + 1, prec).a2[N + 1];
        std::vector<Real> dy;
        dy.reserve(y.size());
        auto a2 = [&](long n) -> const Real& { return y[n - 1]; };
        auto b = [&](long n) -> const Real& { return y[N + n]; };
        for (long n = 1; n <= N; ++n) dy.push_back(a2(n) * (b(n) - b(n - 1)));
        for (long n = 0; n <= N; ++n) {
            Real up = (n == N) ? closure : a2(n + 1);
            Real down = (n == 0) ? Real(0L, prec) : a2(n);
            dy.push_back(up - down);
        }
        return dy;
    }
};

CoeffTable pack_table(const WeightParams& params, const Real& t, long N,
                      const std::vector<Real>& y, Prec prec) {
    CoeffTable table{params.with_t(t), {}, {}, Route::toda, prec};
    table.a2.push_back(Real(0L, prec));
    for (long n = 1; n <= N; ++n) table.a2.push_back(y[n - 1]);
    for (long n = 0; n <= N; ++n) table.b.push_back(y[N + n]);
    return table;
}

} // namespace

std::vector<std::pair<Real, CoeffTable>> toda_integrate(
    const WeightParams& params, long N, const Real& t0, const Real& t1,
    const Real& tol, Prec prec) {
    if (N < 1) throw DomainError("toda_integrate: N must be >= 1");
    if (t1 < t0) throw DomainError("toda_integrate: needs t0 <= t1");
    prec = std::max(prec, kMinPrecision);

    CoeffTable init = hankel_route(params.with_t(t0), N, prec);
    init.route = Route::toda;
    std::vector<Real> y;
    for (long n = 1; n <= N; ++n) y.push_back(init.a2[n]);
    for (long n = 0; n <= N; ++n) y.push_back(init.b[n]);

    std::vector<std::pair<Real, CoeffTable>> trajectory;
    trajectory.emplace_back(t0.round_to(prec), init);
    if (t0 == t1) return trajectory;

    // Cash-Karp embedded 4(5) pair.
    auto rat = [&](long p, long q) { return Real(p, prec) / Real(q, prec); };
    const std::array<Real, 6> stage_c = {rat(0, 1),  rat(1, 5), rat(3, 10),
                                         rat(3, 5),  rat(1, 1), rat(7, 8)};
    const std::array<std::array<Real, 5>, 6> a = {{
        {rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)},
        {rat(1, 5), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)},
        {rat(3, 40), rat(9, 40), rat(0, 1), rat(0, 1), rat(0, 1)},
        {rat(3, 10), rat(-9, 10), rat(6, 5), rat(0, 1), rat(0, 1)},
        {rat(-11, 54), rat(5, 2), rat(-70, 27), rat(35, 27), rat(0, 1)},
        {rat(1631, 55296), rat(175, 512), rat(575, 13824), rat(44275, 110592),
         rat(253, 4096)},
    }};
    const std::array<Real, 6> b5 = {rat(37, 378),   rat(0, 1), rat(250, 621),
                                    rat(125, 594),  rat(0, 1), rat(512, 1771)};
    const std::array<Real, 6> b4 = {rat(2825, 27648),  rat(0, 1),
                                    rat(18575, 48384), rat(13525, 55296),
                                    rat(277, 14336),   rat(1, 4)};

    TodaField field{params, N, prec};
    Real t = t0.round_to(prec);
    const Real t_end = t1.round_to(prec);
    Real h = (t_end - t) / 16L;
    const Real h_min = (t_end - t) * Real::pow2(-prec / 2, prec);
    const Real safety = rat(9, 10);

    while (t < t_end) {
        if (h > t_end - t) h = t_end - t;
        std::array<std::vector<Real>, 6> k;
        for (int s = 0; s < 6; ++s) {
            std::vector<Real> ys = y;
            for (int j = 0; j < s; ++j) {
                if (a[s][j].is_zero()) continue;
                for (size_t i = 0; i < y.size(); ++i)
                    ys[i] += h * a[s][j] * k[j][i];
            }
            k[s] = field(t + stage_c[s] * h, ys);
        }
        // 5th-order solution and the embedded error estimate.
        std::vector<Real> y5 = y;
        Real err(0L, prec), scale(1L, prec);
        for (size_t i = 0; i < y.size(); ++i) {
            Real d5(0L, prec), d4(0L, prec);
            for (int s = 0; s < 6; ++s) {
                if (!b5[s].is_zero()) d5 += b5[s] * k[s][i];
                if (!b4[s].is_zero()) d4 += b4[s] * k[s][i];
            }
            y5[i] += h * d5;
            err = max(err, abs(h * (d5 - d4)));
            scale = max(scale, abs(y[i]));
        }
        Real budget = tol.round_to(prec) * scale;
        if (err <= budget) {
            t += h;
            y = std::move(y5);
            trajectory.emplace_back(t, pack_table(params, t, N, y, prec));
            if (err.is_zero()) {
                h = h * 5L;
            } else {
                Real grow = exp(log(budget / err) / 5L) * safety;
                h = h * min(grow, Real(5L, prec));
            }
        } else {
            Real shrink = exp(log(budget / err) / 4L) * safety;
            h = h * max(shrink, Real(1L, prec) / 5L);
        }
        if (h < h_min)
            throw ConvergenceError("toda_integrate: step size underflow (stiff)",
                                   err.to_double());
    }
    return trajectory;
}

} // namespace sclag
