// summability.hpp : Taylor partial sums, triangular/Abel means, and the
// failure certificates.
//
// Every T_n(f) below is a combination of partial sums, hence lies in the
// closed span of the odd polynomials when f is the witness; the pairing
// <f - T_n(f), g_N> stays explicitly computable, which turns the
// Cauchy-Schwarz bound into an exact certificate on the truncated objects.
#pragma once

#include "hspace/space.hpp"
#include "hspace/witness.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace hspace {

// One row c_{n,0..n} of a triangular scheme T_n(f) = sum_k c_{nk} s_k(f).
struct TriangularRow {
    std::vector<Scalar> c;
};
// Finitely supported coefficients c_k with a declared power-decay radius
// (recorded, not inferred).
struct PowerDecay {
    std::vector<Scalar> c;
    double declared_radius = 0.0;
};
// Abel means: c_k = (1-r) r^k, truncated at a caller-chosen K.
struct AbelMethod {
    Rational r;
};
using SummabilityVector = std::variant<TriangularRow, PowerDecay, AbelMethod>;

// s_k(f) = sum_{j<=k} f_hat(j) z^j as an element of H.
HFunction partial_sum(const SpaceHandle& space, const HFunction& f, std::size_t k);

// f_r: Taylor coefficients f_hat(n) r^n (exact for rational r).
HFunction radial_dilate(const SpaceHandle& space, const HFunction& f, const Rational& r);

// T(f) for one method; for Abel the series is truncated at n_or_K.
// PowerDecay/Abel require the nth-root certificate on the weights (the
// summability hypothesis); a spec without it is rejected.
HFunction apply_summability(const SpaceHandle& space, const HFunction& f,
                            const SummabilityVector& method, std::size_t n_or_K);

struct AbelIdentityCheck {
    bool exact;          // truncated Abel mean == f_r - r^{K+1} s_K(f), exactly
    std::size_t K;
    double residual_norm; // ||r^{K+1} s_K(f)||, the gap to the true dilate
};
// The dilate identity sum_k (1-r) r^k s_k(f) = f_r, verified coefficientwise
// through its exact truncated form.
AbelIdentityCheck abel_dilate_identity_check(const SpaceHandle& space, const HFunction& f,
                                             const Rational& r, std::size_t K);

struct GrowthRow {
    std::size_t k = 0;
    std::string norm_sq_exact;
    double norm = 0.0;
    double kth_root = 0.0;
    bool below_R = false; // ||s_k(f)||^{1/k} <= R, exact comparison when possible
};
// ||s_k(f)|| for k <= K against the k-th-root threshold R (default 11/10).
// Requires the nth_root_limit_one flag on the weights.
std::vector<GrowthRow> partial_sum_norm_growth(const SpaceHandle& space, const HFunction& f,
                                               std::size_t K, const Rational& R = Rational(11, 10));

struct MethodDistanceRow {
    std::string method;
    std::size_t n = 0;           // row index / truncation level / unused for dilates
    std::string dist_exact;       // ||T_n(f) - f||^2 as exact string (exact mode)
    double dist = 0.0;            // ||T_n(f) - f||
    double cert = 0.0;            // certificate lower bound
    double slack = 0.0;           // subtracted truncation slack (0 when exact)
    bool pass = false;            // dist >= cert - slack
};
struct ControlRow {
    std::size_t degree = 0;
    double dist = 0.0;            // dist(f, span{z^0..z^degree})
    std::string dist_sq_exact;
};
struct FailureReport {
    std::vector<MethodDistanceRow> rows;
    std::vector<ControlRow> control;
    bool all_certified = false;
};

// Distances ||T_n(f) - f|| for Taylor sums, Cesaro means, Abel means at the
// given radii, and `random_rows` random row-normalized triangular schemes,
// all certified against 1/||v||; plus the control projections onto full
// polynomial spans, which must decay to zero.
FailureReport summability_failure_report(const SpaceHandle& space, const WitnessPair& pair,
                                         const std::vector<Rational>& abel_radii,
                                         std::size_t random_rows, std::uint64_t seed,
                                         const std::vector<std::size_t>& ns,
                                         const std::vector<std::size_t>& control_degrees);

} // namespace hspace
