// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_DISCRETE_HPP
#define SCLAG_DISCRETE_HPP

#include <vector>

#include "sclag/moments.hpp"
#include "sclag/real.hpp"

namespace sclag {

/// One point of the (x_n, y_n) orbit; z_n = n + alpha/2 is carried along.
/// The orbit encodes the recurrence coefficients through
/// 2 a_n^2 = y_n + z_n and 2 b_n = t - sqrt(2)/x_n.
struct DiscreteState {
    long n;
    Real x;
    Real y;
    Real z;
};

/// Moment-determined initial data x_0 = sqrt(2) mu_0 / (t mu_0 - 2 mu_1),
/// y_0 = -alpha/2. Throws SingularityError if t mu_0 = 2 mu_1 (cannot occur
/// for real t; checked defensively).
DiscreteState initial_state(const WeightParams& params,
                            Prec prec = kDefaultPrecision);

struct DiscreteRun {
    std::vector<DiscreteState> states; // n = 0..N
    CoeffTable coeffs;                 // route = discrete
};

/// Forward iteration of the discrete system:
///   y_{n+1} = (1/x_n)(t/sqrt(2) - 1/x_n) - y_n,
///   x_{n+1} = (y_{n+1} + z_{n+1}) / ((y_{n+1}^2 - alpha^2/4) x_n).
/// The n=0 instance of the x-equation is the 0/0 form and is never evaluated;
/// x_0 comes from initial_state. The iteration runs at exactly `prec` bits
/// (no internal re-anchoring), so divergence from the Hankel route measures
/// the forward instability directly.
///
/// Throws SingularityError when |y_n^2 - alpha^2/4| < 2^-(prec/2) and
/// PrecisionError when a computed a_n^2 is nonpositive.
DiscreteRun run_discrete(const WeightParams& params, long N,
                         Prec prec = kDefaultPrecision);

} // namespace sclag

#endif
