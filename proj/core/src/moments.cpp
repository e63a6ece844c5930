// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/moments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sclag/errors.hpp"
#include "sclag/numerics.hpp"

namespace sclag {

WeightParams::WeightParams(Real alpha_, Real t_)
    : alpha(std::move(alpha_)), t(std::move(t_)) {
    if (!(alpha > -1L))
        throw DomainError("weight needs alpha > -1, got alpha = " + alpha.str(8));
    if (!t.is_finite()) throw DomainError("weight parameter t must be finite");
}

WeightParams WeightParams::make(double alpha, double t, Prec prec) {
    return {Real(alpha, prec), Real(t, prec)};
}

const char* route_name(Route route) {
    switch (route) {
        case Route::hankel: return "hankel";
        case Route::discrete: return "discrete";
        case Route::toda: return "toda";
    }
    return "?";
}

std::pair<Real, Real> base_moments(const WeightParams& params, Prec prec) {
    prec = std::max(prec, kMinPrecision);
    // For t < 0 the series alternates and cancels down to ~exp(-t^2/4) of its
    // largest term, costing about 0.37 t^2 bits; widen the guard accordingly.
    Prec guard = 64;
    if (params.t < 0L) {
        double td = params.t.to_double();
        guard += std::min<Prec>(static_cast<Prec>(0.37 * td * td) + 16, 1L << 20);
    }
    const Prec wp = prec + guard;
    const Real alpha = params.alpha.round_to(wp);
    const Real t = params.t.round_to(wp);
    const Real cutoff = Real::pow2(-(prec + 16), wp);

    // g_j = Gamma((j+alpha+1)/2)/2, extended by g_{j+2} = (j+alpha+1)/2 * g_j.
    std::vector<Real> g;
    g.push_back(gamma((alpha + 1L) / 2L) / 2L);
    g.push_back(gamma((alpha + 2L) / 2L) / 2L);
    auto g_at = [&](size_t j) -> const Real& {
        while (g.size() <= j) {
            size_t k = g.size() - 2;
            g.push_back((alpha + static_cast<long>(k) + 1L) / 2L * g[k]);
        }
        return g[j];
    };

    Real mu[2];
    for (long k = 0; k <= 1; ++k) {
        Real sum(0L, wp);
        Real coef(1L, wp); // t^m / m!
        long m = 0;
        for (;; ++m) {
            Real term = coef * g_at(static_cast<size_t>(k + m));
            sum += term;
            if (m >= 1 && abs(term) <= abs(sum) * cutoff) break;
            if (m > 20000)
                throw ConvergenceError("base_moments: series did not settle",
                                       abs(term).to_double());
            coef = coef * t / (m + 1);
        }
        mu[k] = sum.round_to(prec);
    }
    return {mu[0], mu[1]};
}

MomentTable moment_table(const WeightParams& params, long K, Prec prec) {
    if (K < 1) throw DomainError("moment_table: K must be >= 1");
    prec = std::max(prec, kMinPrecision);
    auto [mu0, mu1] = base_moments(params, prec);
    const Real alpha = params.alpha.round_to(prec);
    const Real t = params.t.round_to(prec);
    MomentTable table{params, {}, prec};
    table.mu.reserve(K + 1);
    table.mu.push_back(std::move(mu0));
    table.mu.push_back(std::move(mu1));
    for (long k = 0; k + 2 <= K; ++k)
        table.mu.push_back(
            ((alpha + k + 1L) * table.mu[k] + t * table.mu[k + 1]) / 2L);
    return table;
}

Real bareiss_determinant(std::vector<std::vector<Real>> m) {
    const long n = static_cast<long>(m.size());
    if (n == 0) return Real(1L, kMinPrecision);
    const Prec prec = m[0][0].precision();
    Real prev(1L, prec);
    int sign = 1;
    for (long k = 0; k < n; ++k) {
        // Full pivoting: largest |entry| of the trailing block.
        long pi = k, pj = k;
        for (long i = k; i < n; ++i)
            for (long j = k; j < n; ++j)
                if (abs(m[i][j]) > abs(m[pi][pj])) { pi = i; pj = j; }
        if (m[pi][pj].is_zero()) return Real(0L, prec);
        if (pi != k) { std::swap(m[pi], m[k]); sign = -sign; }
        if (pj != k) {
            for (long i = 0; i < n; ++i) std::swap(m[i][pj], m[i][k]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// D_n (shifted=false) or D'_n (last column mu_n..mu_{2n-1}, shifted=true).
Real hankel_det(const MomentTable& mt, long n, bool shifted) {
    if (n == 0) return Real(shifted ? 0L : 1L, mt.precision_bits);
    std::vector<std::vector<Real>> m(n);
    for (long i = 0; i < n; ++i) {
        m[i].reserve(n);
        for (long j = 0; j < n; ++j) {
            long idx = (shifted && j == n - 1) ? n + i : i + j;
            m[i].push_back(mt.mu[idx]);
        }
    }
    return bareiss_determinant(std::move(m));
}

} // namespace

CoeffTable hankel_route(const WeightParams& params, long N, Prec prec) {
    if (N < 1) throw DomainError("hankel_route: N must be >= 1");
    prec = std::max(prec, kMinPrecision);
    const Prec wp = std::max(prec, 64 + 24 * N);
    MomentTable mt = moment_table(params, 2 * N + 1, wp);

    std::vector<Real> D, Dp;
    D.reserve(N + 2);
    Dp.reserve(N + 2);
    for (long n = 0; n <= N + 1; ++n) {
        D.push_back(hankel_det(mt, n, false));
        Dp.push_back(hankel_det(mt, n, true));
        if (!(D[n] > 0L))
            throw PrecisionError(
                "hankel_route: Hankel determinant D_" + std::to_string(n) +
                " not positive at " + std::to_string(wp) +
                " bits; raise the precision");
    }

    CoeffTable table{params, {}, {}, Route::hankel, prec};
    table.a2.push_back(Real(0L, prec)); // a_0^2 := 0
    table.b.reserve(N + 1);
    for (long n = 0; n <= N; ++n)
        table.b.push_back((Dp[n + 1] / D[n + 1] - Dp[n] / D[n]).round_to(prec));
    for (long n = 1; n <= N; ++n) {
        Real a2 = D[n + 1] * D[n - 1] / sqr(D[n]);
        if (!(a2 > 0L))
            throw PrecisionError("hankel_route: a_" + std::to_string(n) +
                                 "^2 not positive; raise the precision");
        table.a2.push_back(a2.round_to(prec));
    }
    return table;
}

} // namespace sclag
