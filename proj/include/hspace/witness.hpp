// witness.hpp : the witness pair u, v and the non-density certificates.
//
//   u = sum_{j>=0} eta_j e_{2j+1}         f = J(u)  (odd within its window)
//   v = (1/eta_0) e_1 + sum_k eta_k e_{2k},  g = J(v)  (kills odd monomials)
//
// <u, v> = 1 exactly at every truncation level, so 1/||v_N|| is a
// Cauchy-Schwarz lower bound on the distance from f to the span of the odd
// monomials that g_N annihilates.
#pragma once

#include "hspace/project.hpp"
#include "hspace/space.hpp"

#include <cstddef>
#include <vector>

namespace hspace {

struct WitnessPair {
    SparseVec u, v;
    std::size_t level_m = 0, level_n = 0;
    double u_tail = 0.0, v_tail = 0.0; // analytic bounds on the truncated l^2 tails
    HFunction f, g;
};

WitnessPair make_witnesses(const SpaceHandle& space, std::size_t M, std::size_t N);

// sqrt(sum_{j>M} eta_j^2) upper bound (0 when the spec is a finite list and
// the truncated object is the whole object).
double witness_u_tail_bound(const SpaceHandle& space, std::size_t M);

struct FOddCheck {
    std::size_t up_to = 0;
    bool all_zero = false;               // <u, y_{2n}> == 0 exactly for n <= up_to
    std::size_t first_failure = 0;       // valid when !all_zero
    Scalar boundary_residual;            // f_hat at the truncation boundary (exponent sigma(2M))
    std::int64_t boundary_exponent = 0;
    double boundary_le_eta_m = 0.0;      // |residual| <= eta_M, reported
};
// Evenness of f: eta_n a_n - eta_{n+1} b_{n+1} = 0 for n <= up_to (requires
// up_to <= M-1 so both cancelling terms are inside the truncation).
FOddCheck check_f_odd(const SpaceHandle& space, const WitnessPair& pair, std::size_t up_to);

struct GPerpCheck {
    std::size_t up_to = 0;
    bool all_zero = false;               // <x_{2n+1}, v> == 0 exactly for n <= up_to
    std::size_t first_failure = 0;
    Scalar boundary_value;               // <x_{2N+3}, v_N> = 1/eta_{N+1}, the truncation boundary
};
// g kills odd monomials: requires up_to <= N.
GPerpCheck check_g_perp_odd(const SpaceHandle& space, const WitnessPair& pair, std::size_t up_to);

struct DistanceBound {
    std::size_t level = 0;   // N
    Rational v_norm_sq;      // ||v_N||^2 exactly (exact-representable specs)
    double bound = 0.0;      // 1/||v_N||
};
// The certificate 1/||v_N||: a lower bound for dist(f', odd span up to
// degree 2N+1) for any f' with <f', g_N> = 1.
DistanceBound odd_span_distance_bound(const SpaceHandle& space, std::size_t N);

struct HeadlineRow {
    std::size_t k = 0;            // generators z^1, z^3, ..., z^{2k+1}
    Scalar dist_sq;               // exact Gram distance squared
    double dist = 0.0;
    Rational cert_v_norm_sq;      // ||v_k||^2
    double cert = 0.0;            // 1/||v_k||
    bool dominates_cert = false;  // dist >= cert, compared exactly when possible
};
struct HeadlineReport {
    Scalar full_span_dist_sq;     // dist(f, span{z^0..z^{2M+1}})^2, must be exactly 0
    bool full_span_zero = false;
    std::vector<HeadlineRow> odd_rows;
};
// The contrast at the heart of the construction: f is approximable by
// polynomials (distance exactly 0 at degree 2M+1) but the odd-span distance
// plateaus above the certificate.
HeadlineReport headline_contrast(const SpaceHandle& space, const WitnessPair& pair,
                                 const std::vector<std::size_t>& ks);

} // namespace hspace
