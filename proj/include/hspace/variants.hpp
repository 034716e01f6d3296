// variants.hpp : support-set permutations and the Fourier embedding.
//
// For any I with I and its complement both infinite, sigma maps odd basis
// indices onto I and even ones onto the complement (increasing enumeration),
// and the core machinery reruns with z^{sigma(n)}.  The Fourier embedding
// uses the fixed bijection onto Z with a 2^{-n} damping on the L^2(T) image.
#pragma once

#include "hspace/index_map.hpp"
#include "hspace/summability.hpp"
#include "hspace/witness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hspace {

struct SupportSpec {
    enum class Builtin { Evens, Odds, Squares, Custom };
    Builtin kind = Builtin::Evens;

    // Custom rule: explicit membership for [0, prefix.size()), then
    // membership by n mod period thereafter.
    std::vector<bool> prefix;
    std::size_t period = 0;
    std::vector<bool> residues;

    // Both I and its complement infinite: analytic for built-ins, derived
    // from the period rule for custom specs.
    bool both_infinite_certificate = false;

    static SupportSpec evens();
    static SupportSpec odds();
    static SupportSpec squares();
    static SupportSpec custom(std::vector<bool> prefix, std::size_t period,
                              std::vector<bool> residues);

    bool contains(std::size_t n) const;
    std::string name() const;
};

// sigma(2j+1) = j-th smallest element of I, sigma(2j) = j-th smallest of the
// complement, built for arguments up to Q.  Throws when either side cannot
// supply its first ceil((Q+1)/2) elements within the scan cap.
IndexMap build_sigma(const SupportSpec& spec, std::size_t Q);

struct SupportedSpanReport {
    bool f_supported_in_I = false;      // supp f_hat within window lies in I
    std::int64_t boundary_exponent = 0; // sigma(2M), lands in the complement
    bool g_perp_supported = false;      // <z^i, g> = 0 for i in I, degree-bounded
    bool pairing_one = false;           // <f, g> = 1 exactly
    std::vector<HeadlineRow> distance_rows; // dist(f, span{z^i : i in I}) >= 1/||v||
};
// The analogue of the headline checks for an arbitrary support set.
SupportedSpanReport supported_span_distance(const SpaceHandle& space, const WitnessPair& pair,
                                            std::size_t N, const std::vector<std::size_t>& ks);

// H embedded in L^2(T): coordinates indexed by integer frequencies, the
// n-th generator contributing at frequency sigma(n) with damping 2^{-n}.
SpaceHandle fourier_space(WeightSpec w, Mode mode, SpaceOptions opts = {});

struct FourierReport {
    bool f_holomorphic = false;        // supp of f's Fourier coefficients in Z+ (window)
    std::int64_t boundary_frequency = 0; // negative frequency carrying the truncation residual
    bool g_perp_holomorphic = false;   // g kills holomorphic monomial images (degree-bounded)
    bool pairing_one = false;
    bool l2_continuity = false;        // ||J(x)||_{L2} <= 2||x|| on sampled vectors
    bool monomial_inner_products = false; // <J(2^n||y_n||x_n), J(2^m||y_m||x_m)>_H identity
    std::vector<HeadlineRow> distance_rows;
    std::vector<MethodDistanceRow> symmetric_partial_sums; // Corollary-5 style rows
};
FourierReport fourier_counterexample(const SpaceHandle& space, const WitnessPair& pair,
                                     std::size_t N, const std::vector<std::size_t>& ks);

// ||J(x)||^2_{L^2(T)} = sum_n <x,y_n>^2 / (||y_n||^2 4^n) (frequencies are
// orthonormal in L^2); exact when the scalar mode is exact.
Scalar fourier_l2_norm_sq(const SpaceHandle& space, const SparseVec& x);

} // namespace hspace
