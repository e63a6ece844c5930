// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SCLAG_MOMENTS_HPP
#define SCLAG_MOMENTS_HPP

#include <utility>
#include <vector>

#include "sclag/real.hpp"

namespace sclag {

/// Parameters (alpha, t) of the weight x^alpha e^{-x^2+tx} on (0, inf).
/// Construction validates alpha > -1 (integrability at the origin).
struct WeightParams {
    Real alpha;
    Real t;

    WeightParams(Real alpha_, Real t_);
    static WeightParams make(double alpha, double t,
                             Prec prec = kDefaultPrecision);
    Prec precision() const {
        return std::max(alpha.precision(), t.precision());
    }
    /// Same weight with alpha shifted by an integer (used by the Freud link).
    WeightParams shifted_alpha(long d) const { return {alpha + d, t}; }
    /// Same alpha, different deformation parameter.
    WeightParams with_t(Real t_) const { return {alpha, std::move(t_)}; }
};

/// Moments mu_0..mu_K of the weight, built from two seed moments and the
/// integration-by-parts recursion mu_{k+2} = ((alpha+k+1) mu_k + t mu_{k+1})/2.
struct MomentTable {
    WeightParams params;
    std::vector<Real> mu;
    Prec precision_bits;

    long k_max() const { return static_cast<long>(mu.size()) - 1; }
};

enum class Route { hankel, discrete, toda };
const char* route_name(Route route);

/// Recurrence coefficients a_n^2 (n >= 1) and b_n (n >= 0) of the orthonormal
/// polynomials; identical to the monic beta_n, alpha_n. a2[0] is fixed to 0
/// (the beta_0 P_{-1} := 0 convention).
struct CoeffTable {
    WeightParams params;
    std::vector<Real> a2;
    std::vector<Real> b;
    Route route;
    Prec precision_bits;

    long n_max() const { return static_cast<long>(b.size()) - 1; }
};

/// Seed moments (mu_0, mu_1) via the gamma series
/// mu_k = sum_m t^m/m! * g_{k+m},  g_j = Gamma((j+alpha+1)/2)/2,
/// truncated at relative 2^-(prec+16).
std::pair<Real, Real> base_moments(const WeightParams& params,
                                   Prec prec = kDefaultPrecision);

MomentTable moment_table(const WeightParams& params, long K,
                         Prec prec = kDefaultPrecision);

/// Determinant by fraction-free (Bareiss) elimination with full pivoting.
/// Consumes the matrix. det of the empty matrix is 1.
Real bareiss_determinant(std::vector<std::vector<Real>> m);

/// Recurrence coefficients for n <= N from ratios of Hankel determinants
/// D_n = det[mu_{i+j}] and the shifted-last-column variants D'_n:
///   b_n  = D'_{n+1}/D_{n+1} - D'_n/D_n,
///   a_n^2 = D_{n+1} D_{n-1} / D_n^2.
/// Internally works at max(prec, 64 + 24 N) bits; the result is rounded back
/// to prec. Throws PrecisionError if any D_n or a_n^2 comes out nonpositive.
CoeffTable hankel_route(const WeightParams& params, long N,
                        Prec prec = kDefaultPrecision);

} // namespace sclag

#endif
