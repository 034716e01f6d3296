// project.hpp : best approximation by orthogonal projection onto a span.
//
// Solves the normal equations G lambda = c for the Gram matrix of the
// generators.  Exact mode runs symmetric Gaussian elimination with diagonal
// pivoting over the scalar field and drops exactly dependent generators;
// approx mode pivots on the largest remaining diagonal and drops pivots
// below tol * max diagonal.  The squared distance is computed both as the
// Pythagoras residual ||f||^2 - lambda.c and as ||f - proj||^2; the two must
// agree (exactly / within the residual tolerance) or the solve is rejected.
#pragma once

#include "hspace/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hspace {

struct ProjectionOptions {
    double pivot_drop_tol = 1e-12;
    double residual_rel_tol = 1e-8;
};

struct ProjectionResult {
    std::vector<std::string> generator_ids;
    std::vector<std::vector<Scalar>> gram;
    std::vector<Scalar> coeffs;            // dropped generators get exact zero
    Scalar dist_sq;
    Scalar projection_norm_sq;
    std::vector<std::size_t> dropped;       // indices of dropped generators
    std::optional<double> condition_estimate; // approx mode only
};

ProjectionResult project(const SpaceHandle& space, const HFunction& f,
                         const std::vector<SparseVec>& generators,
                         ProjectionOptions opts = {},
                         std::vector<std::string> generator_ids = {});

namespace detail {
// Solve the PSD system G lambda = rhs in place; exposed for direct testing
// of the pivoting / conditioning paths.  Returns coefficient vector plus
// dropped pivot indices and min/max accepted pivots (approx mode).
struct PsdSolve {
    std::vector<Scalar> lambda;
    std::vector<std::size_t> dropped;
    double min_pivot = 0.0, max_pivot = 0.0;
};
PsdSolve solve_psd(std::vector<std::vector<Scalar>> G, std::vector<Scalar> rhs, Mode mode,
                   const ProjectionOptions& opts);
} // namespace detail

} // namespace hspace
