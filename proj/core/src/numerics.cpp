// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "sclag/errors.hpp"

namespace sclag {

Real gamma(const Real& s) {
    if (!(s > 0L))
        throw DomainError("gamma: argument must be positive");
    Real r(s.precision());
    mpfr_gamma(r.raw(), s.raw(), MPFR_RNDN);
    return r;
}

namespace {

struct GLRule {
    std::vector<Real> nodes;   // on (-1, 1), ascending
    std::vector<Real> weights;
};

// Gauss-Legendre nodes by Newton refinement of double-precision seeds.
GLRule make_rule(int order, Prec prec) {
    GLRule rule;
    rule.nodes.resize(order, Real(prec));
    rule.weights.resize(order, Real(prec));
    const Real one(1L, prec);
    const Real tiny = Real::pow2(-(prec - 8), prec);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double seed = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        Real x(seed, prec);
        Real dp(prec);
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre recurrence for P_order(x) and its derivative.
            Real p0(1L, prec), p1 = x;
            for (int k = 1; k < order; ++k) {
                Real p2 = (x * p1 * (2 * k + 1) - p0 * k) / (k + 1);
                p0 = p1;
                p1 = p2;
            }
            dp = (x * p1 - p0) * order / (sqr(x) - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < tiny) break;
        }
        Real w = 2L / ((one - sqr(x)) * sqr(dp));
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = Real(0L, prec);
    return rule;
}

const GLRule& cached_rule(int order, Prec prec) {
    static std::mutex mu;
    static std::map<std::pair<int, Prec>, std::unique_ptr<GLRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{order, prec}];
    if (!slot) slot = std::make_unique<GLRule>(make_rule(order, prec));
    return *slot;
}

using Integrand = std::function<Real(const Real&)>;

Real panel_sum(const Integrand& f, const Real& a, const Real& b,
               const GLRule& rule) {
    const Real mid = (a + b) / 2L;
    const Real half = (b - a) / 2L;
    Real acc(0L, mid.precision());
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

struct Panel {
    Real a, b, value, err;
    long seq; // tie-breaker for deterministic ordering
};

struct WorstFirst {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err > q.err;
        return p.seq < q.seq;
    }
};

// Globally adaptive bisection: keep splitting the panel with the largest
// error estimate until the estimates sum below tol. The estimate per panel
// compares two Gauss orders, which stays honest on panels touching an
// endpoint singularity of x^s.
Real adaptive(const Integrand& f, const Real& a, const Real& b,
              const Real& tol, int order, long max_panels, Prec prec) {
    const GLRule& high = cached_rule(order, prec);
    const GLRule& low = cached_rule(order / 2 + (order / 2) % 2, prec);
    long seq = 0;
    auto evaluate = [&](const Real& lo, const Real& hi) {
        Real v = panel_sum(f, lo, hi, high);
        Real e = abs(v - panel_sum(f, lo, hi, low));
        return Panel{lo, hi, std::move(v), std::move(e), seq++};
    };
    std::multiset<Panel, WorstFirst> panels;
    panels.insert(evaluate(a, b));
    Real total_err = panels.begin()->err;
    while (total_err > tol) {
        if (static_cast<long>(panels.size()) + 1 > max_panels)
            throw ConvergenceError("quadrature: panel budget exhausted",
                                   total_err.to_double());
        Panel worst = *panels.begin();
        panels.erase(panels.begin());
        const Real mid = (worst.a + worst.b) / 2L;
        if (!(worst.a < mid && mid < worst.b))
            throw ConvergenceError("quadrature: panel width underflow",
                                   total_err.to_double());
        Panel l = evaluate(worst.a, mid);
        Panel r = evaluate(mid, worst.b);
        total_err += l.err + r.err - worst.err;
        panels.insert(std::move(l));
        panels.insert(std::move(r));
    }
    Real acc(0L, prec);
    for (const Panel& p : panels) acc += p.value;
    return acc;
}

int derive_order(const QuadratureOptions& opts) {
    if (opts.panel_order > 0) return std::max(opts.panel_order, 8);
    return std::max<int>(32, static_cast<int>(opts.precision_bits / 8));
}

Real derive_tol(const QuadratureOptions& opts) {
    if (!opts.abs_tol.is_nan()) return opts.abs_tol;
    return Real::pow2(-static_cast<long>(opts.precision_bits / 2),
                      opts.precision_bits);
}

} // namespace

Real integrate_to_infinity(const Integrand& f, const Real& split,
                           const QuadratureOptions& opts) {
    if (!(split > 0L))
        throw DomainError("integrate_to_infinity: split point must be positive");
    const Prec wp = std::max<Prec>(opts.precision_bits, kMinPrecision) + 64;
    const int order = derive_order(opts);
    const Real tol = derive_tol(opts).round_to(wp);
    const Real c = split.round_to(wp);
    const Real zero(0L, wp), one(1L, wp);

    Real finite = adaptive(f, zero, c, tol / 2L, order, opts.max_panels, wp);
    // Tail: x = c + u/(1-u), dx = du/(1-u)^2, u in (0, 1).
    Integrand tail = [&](const Real& u) {
        Real om = one - u;
        return f(c + u / om) / sqr(om);
    };
    Real mapped = adaptive(tail, zero, one, tol / 2L, order, opts.max_panels, wp);
    return (finite + mapped).round_to(std::max<Prec>(opts.precision_bits, kMinPrecision));
}

Real integrate_halfline_weighted(const Integrand& g, const Real& s,
                                 const Real& t,
                                 const QuadratureOptions& opts) {
    if (!(s > -1L))
        throw DomainError("integrate_halfline: divergent, needs s > -1");
    const Prec wp = std::max<Prec>(opts.precision_bits, kMinPrecision) + 64;
    const Real sw = s.round_to(wp), tw = t.round_to(wp);
    Integrand f = [&](const Real& x) {
        Real xs(wp);
        mpfr_pow(xs.raw(), x.raw(), sw.raw(), MPFR_RNDN);
        return g(x) * xs * exp(tw * x - sqr(x));
    };
    return integrate_to_infinity(f, max(Real(1L, wp), tw), opts);
}

Real integrate_halfline(const Real& s, const Real& t,
                        const QuadratureOptions& opts) {
    return integrate_halfline_weighted(
        [](const Real& x) { return Real(1L, x.precision()); }, s, t, opts);
}

} // namespace sclag
