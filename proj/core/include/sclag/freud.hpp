// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_FREUD_HPP
#define SCLAG_FREUD_HPP

#include <vector>

#include "sclag/moments.hpp"
#include "sclag/painleve4.hpp"
#include "sclag/real.hpp"

namespace sclag {

/// Recurrence coefficients A_n^2 of the Freud weight |x|^{2 alpha + 1}
/// e^{-x^4 + t x^2} on R. Shares (alpha, t) with the Laguerre weight via
/// x -> x^2; A2[0] := 0.
struct FreudTable {
    WeightParams params;
    std::vector<Real> A2;
    Prec precision_bits;

    long n_max() const { return static_cast<long>(A2.size()) - 1; }
};

/// Forward dPI iteration: A_1^2 = mu_1/mu_0, then
/// A_{n+1}^2 = [n + (2 alpha + 1) Delta_n]/(4 A_n^2) - A_{n-1}^2 - A_n^2 + t/2
/// with Delta_n = (1 - (-1)^n)/2. The n = 0 instance is the 0 = 0 identity
/// and is never evaluated. Throws PrecisionError when positivity is lost.
FreudTable dpi_run(const WeightParams& params, long N,
                   Prec prec = kDefaultPrecision);

/// Residual of the flow d(A_n^2)/dt = A_n^2 (A_{n+1}^2 - A_{n-1}^2),
/// the time derivative by central differences with step h. n >= 1.
Real dpi_f2_residual(const WeightParams& params, long n, const Real& h,
                     Prec prec = kDefaultPrecision);

/// Residuals of the Freud <-> Laguerre coefficient relations at index n:
///   a_alpha:  (a_n^alpha)^2    - A_{2n}^2 A_{2n-1}^2      (n >= 1)
///   b_alpha:   b_n^alpha       - (A_{2n}^2 + A_{2n+1}^2)
///   a_alpha1: (a_n^{alpha+1})^2 - A_{2n}^2 A_{2n+1}^2
///   b_alpha1:  b_n^{alpha+1}   - (A_{2n+2}^2 + A_{2n+1}^2)
/// Laguerre values come from the Hankel route at alpha and alpha+1.
struct FreudCrossRow {
    long n;
    Real a_alpha; // NaN at n = 0
    Real b_alpha;
    Real a_alpha1;
    Real b_alpha1;
};

std::vector<FreudCrossRow> freud_cross_check(const WeightParams& params,
                                             long N,
                                             Prec prec = kDefaultPrecision);

/// P_IV parameters of f(z) = -2 A_n^2(2z):
/// even n: (-(2+n+4 alpha)/2, -n^2/2); odd n: (1/2 - n/2 + alpha,
/// -(1+n+2 alpha)^2/2). n >= 1.
P4Params freud_p4_map(long n, const Real& alpha);

/// Sample of f(z) = -2 A_n^2(2z) with f' analytic through the dPI flow and
/// f'' a central difference of f' (one differencing level, O(h^2) floor);
/// parameters from freud_p4_map.
P4Point freud_f_point(const WeightParams& params, long n, const Real& z,
                      const Real& h, Prec prec = kDefaultPrecision);

/// q(z) = -2z + 2 b_n^alpha(2z), the direct Laguerre-side P_IV solution.
Real freud_q_direct(const WeightParams& params, long n, const Real& z,
                    Prec prec = kDefaultPrecision);

enum class FreudLink { rel1, rel2 };

/// The Backlund bridge between consecutive Freud coefficients:
/// rel1: f1 = -2 A_{2n}^2(2z),  f2 = T_{1,-1} f1 = (2n - 2z f1 - f1^2 - f1')/(2 f1),
///       q  = -2z + 2 b_n^alpha;
/// rel2: f1 = -2 A_{2n+2}^2(2z), f2 = T_{-1,1} f1 = (2+2n - 2z f1 - f1^2 + f1')/(2 f1),
///       q  = -2z + 2 b_n^{alpha+1}.
/// f1' by central differences. Returns the direct and transformed values of
/// f2 plus the direct and reconstructed q = -2z - f1 - f2. Throws
/// SingularityError when f1 = 0 (e.g. rel1 with n = 0).
struct FreudBacklundLink {
    Real f2_direct;
    Real f2_backlund;
    Real q_direct;
    Real q_backlund;
};

FreudBacklundLink freud_backlund_link(const WeightParams& params, long n,
                                      const Real& z, const Real& h,
                                      FreudLink which,
                                      Prec prec = kDefaultPrecision);

/// Independent determinant route: A_n^2 from the even/odd split of the
/// symmetric-weight Hankel determinants, E_k = det[mu_{i+j}] and
/// O_k = det[mu_{i+j+1}]:
///   A_{2n}^2   = E_{n+1} O_{n-1} / (E_n O_n),
///   A_{2n+1}^2 = E_n O_{n+1} / (E_{n+1} O_n).
FreudTable freud_hankel_oracle(const WeightParams& params, long N,
                               Prec prec = kDefaultPrecision);

} // namespace sclag

#endif
