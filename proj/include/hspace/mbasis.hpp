// mbasis.hpp : the biorthogonal system (x_n, y_n).
//
//   x_{2n}   = e_{2n}
//   x_{2n+1} = e_{2n+1} - a_n e_{2n} + b_n e_{2n-2}   (b-term absent at n = 0)
//   y_{2n}   = e_{2n} + a_n e_{2n+1} - b_{n+1} e_{2n+3}
//   y_{2n+1} = e_{2n+1}
//
// with a_n = 1/eta_n^2 and b_n = 1/(eta_n eta_{n-1}).  Biorthogonality
// <x_n, y_m> = delta_nm holds exactly, and each family spans a dense
// subspace: reconstruct_e exhibits e_n as an explicit finite combination.
#pragma once

#include "hspace/sparse_vec.hpp"
#include "hspace/weights.hpp"

#include <cstddef>

namespace hspace {

SparseVec x_vec(SequenceCache& cache, std::size_t n);
SparseVec y_vec(SequenceCache& cache, std::size_t n);

enum class BasisFamily { X, Y };

// Coefficients expressing e_n in the chosen family (keyed by basis index).
// The expansion is re-checked against e_n before returning.
SparseVec reconstruct_e(SequenceCache& cache, std::size_t n, BasisFamily family);

struct BiorthReport {
    Scalar max_abs_deviation; // exact 0 in exact mode when all identities hold
    std::size_t worst_n = 0, worst_m = 0;
    bool exact_zero = false; // every deviation is exactly zero (exact mode)
};
// max over 0 <= n,m <= N of |<x_n, y_m> - delta_nm|
BiorthReport check_biorthogonality(SequenceCache& cache, std::size_t N);

// Closed-form squared norms; ExactRational in exact modes.
Scalar norm_sq_x(SequenceCache& cache, std::size_t n);
Scalar norm_sq_y(SequenceCache& cache, std::size_t n);
Rational norm_sq_x_q(SequenceCache& cache, std::size_t n);
Rational norm_sq_y_q(SequenceCache& cache, std::size_t n);

} // namespace hspace
