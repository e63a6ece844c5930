// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_LADDER_HPP
#define SCLAG_LADDER_HPP

#include <utility>
#include <vector>

#include "sclag/moments.hpp"
#include "sclag/numerics.hpp"
#include "sclag/real.hpp"

namespace sclag {

/// Ladder-operator coefficients of A_n(x) = 2 + R_n/x, B_n(x) = r_n/x,
/// resolved through the recurrence coefficients: R_n = 2 b_n - t,
/// r_n = 2 a_n^2 - n.
struct LadderCoeffs {
    long n;
    Real R;
    Real r;
};

LadderCoeffs ladder_from_coeffs(const CoeffTable& coeffs, long n,
                                const Real& t);

/// Residuals of the compatibility conditions. cond2/cond3 are defined for
/// n = 0..N, cond4/cond6/cond7 for n = 1..N (NaN where undefined). cond3 is
/// satisfied by construction and serves as an arithmetic sanity row. The
/// partial sum in cond6 uses compensated summation.
struct ConditionRow {
    long n;
    Real cond2;
    Real cond3;
    Real cond4;
    Real cond6;
    Real cond7;
};

/// Requires the table to cover indices 0..N+1.
std::vector<ConditionRow> verify_conditions(const CoeffTable& coeffs, long N);

/// Evaluates orthonormal polynomials by the forward three-term recurrence,
/// p_0 = 1/sqrt(mu_0). Construction precomputes the normalization.
class OrthonormalPolys {
public:
    explicit OrthonormalPolys(CoeffTable coeffs);

    /// p_n(x); the table must cover up to index n.
    Real operator()(long n, const Real& x) const;

    const CoeffTable& coeffs() const { return coeffs_; }

private:
    CoeffTable coeffs_;
    std::vector<Real> a_; // a_n = sqrt(a_n^2)
    Real p0_;
};

Real eval_orthonormal(const CoeffTable& coeffs, long n, const Real& x);

/// Both sides of the W(t) = R_n identity (requires alpha > 0):
/// lhs = -sqrt(2)/x_n from the discrete orbit,
/// rhs = alpha * integral of p_n(y)^2 y^{alpha-1} e^{-y^2+ty} dy
/// by the quadrature oracle with p_n from the Hankel-route table.
std::pair<Real, Real> w_equals_Rn_check(const WeightParams& params, long n,
                                        Prec prec = kDefaultPrecision,
                                        const QuadratureOptions& quad = {});

} // namespace sclag

#endif
