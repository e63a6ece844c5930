// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include "sclag/discrete.hpp"

#include <algorithm>
#include <string>

#include "sclag/errors.hpp"

namespace sclag {

DiscreteState initial_state(const WeightParams& params, Prec prec) {
    prec = std::max(prec, kMinPrecision);
    const Real alpha = params.alpha.round_to(prec);
    const Real t = params.t.round_to(prec);
    auto [mu0, mu1] = base_moments(params, prec);
    Real denom = t * mu0 - 2L * mu1;
    if (abs(denom) <= max(abs(t * mu0), abs(2L * mu1)) * Real::pow2(-prec + 4, prec))
        throw SingularityError("initial_state: t mu_0 - 2 mu_1 vanishes");
    return DiscreteState{0, Real::sqrt2(prec) * mu0 / denom, -alpha / 2L,
                         alpha / 2L};
}

DiscreteRun run_discrete(const WeightParams& params, long N, Prec prec) {
    if (N < 0) throw DomainError("run_discrete: N must be >= 0");
    prec = std::max(prec, kMinPrecision);
    const Real alpha = params.alpha.round_to(prec);
    const Real t = params.t.round_to(prec);
    const Real quarter_alpha2 = sqr(alpha) / 4L;
    const Real sqrt2 = Real::sqrt2(prec);
    const Real t_over_sqrt2 = t / sqrt2;
    const Real singular_floor = Real::pow2(-prec / 2, prec);

    std::vector<DiscreteState> states;
    states.reserve(N + 1);
    states.push_back(initial_state(params, prec));
    for (long n = 0; n < N; ++n) {
        const DiscreteState& cur = states.back();
        Real inv = 1L / cur.x;
        Real y_next = inv * (t_over_sqrt2 - inv) - cur.y;
        Real denom = sqr(y_next) - quarter_alpha2;
        if (abs(denom) < singular_floor)
            throw SingularityError(
                "run_discrete: orbit hit the singular set y^2 = alpha^2/4 at n = " +
                std::to_string(n + 1));
        Real z_next = alpha / 2L + (n + 1);
        Real x_next = (y_next + z_next) / (denom * cur.x);
        if (x_next.is_zero())
            throw SingularityError("run_discrete: x vanished at n = " +
                                   std::to_string(n + 1));
        states.push_back(DiscreteState{n + 1, std::move(x_next),
                                       std::move(y_next), std::move(z_next)});
    }

    CoeffTable coeffs{params, {}, {}, Route::discrete, prec};
    coeffs.a2.push_back(Real(0L, prec));
    for (const DiscreteState& s : states) {
        coeffs.b.push_back((t - sqrt2 / s.x) / 2L);
        if (s.n >= 1) {
            Real a2 = (s.y + s.z) / 2L;
            if (!(a2 > 0L))
                throw PrecisionError(
                    "run_discrete: a_" + std::to_string(s.n) +
                    "^2 not positive; forward orbit lost too much precision");
            coeffs.a2.push_back(std::move(a2));
        }
    }
    return DiscreteRun{std::move(states), std::move(coeffs)};
}

} // namespace sclag
