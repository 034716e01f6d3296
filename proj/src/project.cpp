#include "hspace/project.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hspace {

namespace detail {

PsdSolve solve_psd(std::vector<std::vector<Scalar>> G, std::vector<Scalar> rhs, Mode mode,
                   const ProjectionOptions& opts) {
    const std::size_t n = G.size();
    PsdSolve out;
    std::vector<bool> active(n, true);
    std::vector<std::size_t> order;
    order.reserve(n);

    double max_diag0 = 0.0;
    if (mode == Mode::Approx)
        for (std::size_t i = 0; i < n; ++i)
            max_diag0 = std::max(max_diag0, std::abs(G[i][i].as_approx()));
    const double drop_floor = opts.pivot_drop_tol * max_diag0;

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        if (mode == Mode::Exact) {
            for (std::size_t i = 0; i < n; ++i)
                if (active[i] && !G[i][i].is_zero()) { p = i; break; }
        } else {
            double best = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                const double d = G[i][i].as_approx();
                if (d < -std::max(drop_floor, opts.pivot_drop_tol))
                    throw ConditioningError(
                        "indefinite Gram: pivot " + std::to_string(i) + " has diagonal " +
                        std::to_string(d) + " after " + std::to_string(order.size()) +
                        " eliminations (max initial diagonal " + std::to_string(max_diag0) + ")");
                if (d > best) { best = d; p = i; }
            }
            if (p != n && G[p][p].as_approx() <= drop_floor) p = n; // rank exhausted
        }
        if (p == n) break;
        order.push_back(p);
        active[p] = false;
        if (mode == Mode::Approx) {
            const double d = G[p][p].as_approx();
            out.max_pivot = order.size() == 1 ? d : std::max(out.max_pivot, d);
            out.min_pivot = order.size() == 1 ? d : std::min(out.min_pivot, d);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || G[i][p].is_zero(0.0)) continue;
            const Scalar mult = G[i][p] / G[p][p];
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) G[i][j] -= mult * G[p][j];
            rhs[i] -= mult * rhs[p];
            G[i][p] = Scalar::zero(mode);
        }
    }

    // anything still active is exactly (or numerically) dependent
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        out.dropped.push_back(i);
        if (mode == Mode::Exact) {
            // PSD with zero diagonal forces a zero row; anything else means
            // the matrix was not a Gram matrix
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && !G[i][j].is_zero())
                    throw std::logic_error("solve_psd: zero diagonal with nonzero row, matrix not PSD");
        }
    }

    // back substitution over the elimination order
    out.lambda.assign(n, Scalar::zero(mode));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t p = *it;
        Scalar acc = rhs[p];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p) continue;
            const bool later = std::find(it.base(), order.end(), j) != order.end();
            const bool dropped = std::find(out.dropped.begin(), out.dropped.end(), j) != out.dropped.end();
            if ((later || dropped) && !G[p][j].is_zero(0.0) && !out.lambda[j].is_zero(0.0))
                acc -= G[p][j] * out.lambda[j];
        }
        out.lambda[p] = acc / G[p][p];
    }
    return out;
}

} // namespace detail

ProjectionResult project(const SpaceHandle& space, const HFunction& f,
                         const std::vector<SparseVec>& generators, ProjectionOptions opts,
                         std::vector<std::string> generator_ids) {
    const Mode mode = space.mode();
    const std::size_t n = generators.size();
    if (generator_ids.empty()) {
        generator_ids.reserve(n);
        for (std::size_t i = 0; i < n; ++i) generator_ids.push_back("g" + std::to_string(i));
    }
    if (generator_ids.size() != n)
        throw std::invalid_argument("project: generator id list does not match generator count");
    for (const auto& g : generators) {
        if (g.mode() != mode) throw ModeMismatchError("project: generator mode mismatch");
        if (g.empty()) throw std::invalid_argument("project: zero generator");
    }
    if (f.coords().mode() != mode) throw ModeMismatchError("project: function mode mismatch");

    ProjectionResult res;
    res.generator_ids = std::move(generator_ids);
    if (n == 0) {
        res.dist_sq = f.norm_sq();
        res.projection_norm_sq = Scalar::zero(mode);
        return res;
    }

    res.gram.assign(n, std::vector<Scalar>(n, Scalar::zero(mode)));
    std::vector<Scalar> rhs(n, Scalar::zero(mode));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Scalar gij = generators[i].dot(generators[j]);
            res.gram[i][j] = gij;
            res.gram[j][i] = std::move(gij);
        }
        rhs[i] = f.coords().dot(generators[i]);
    }

    auto solve = detail::solve_psd(res.gram, rhs, mode, opts);
    res.coeffs = solve.lambda;
    res.dropped = solve.dropped;
    if (mode == Mode::Approx && solve.min_pivot > 0.0)
        res.condition_estimate = solve.max_pivot / solve.min_pivot;

    // residual form
    SparseVec residual = f.coords();
    for (std::size_t i = 0; i < n; ++i)
        if (!res.coeffs[i].is_zero(0.0)) residual.add_scaled(generators[i], -res.coeffs[i]);
    const Scalar dist_residual = residual.norm_sq();

    // Pythagoras form
    Scalar lam_dot_c = Scalar::zero(mode);
    for (std::size_t i = 0; i < n; ++i) lam_dot_c += res.coeffs[i] * rhs[i];
    const Scalar dist_pyth = f.norm_sq() - lam_dot_c;

    if (mode == Mode::Exact) {
        if (!(dist_residual - dist_pyth).is_zero())
            throw std::logic_error("project: exact residual and Pythagoras distances disagree: " +
                                   dist_residual.str() + " vs " + dist_pyth.str());
        // dropped generators must still satisfy their normal equation
        for (std::size_t d : res.dropped) {
            Scalar lhs = Scalar::zero(mode);
            for (std::size_t j = 0; j < n; ++j) lhs += res.gram[d][j] * res.coeffs[j];
            if (!(lhs - rhs[d]).is_zero())
                throw std::logic_error("project: dropped generator violates its normal equation");
        }
        res.dist_sq = dist_residual;
    } else {
        const double a = dist_residual.as_approx();
        const double b = dist_pyth.as_approx();
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        // the Pythagoras form loses accuracy to cancellation on
        // ill-conditioned Grams; the residual form is the reported value
        if (std::abs(a - b) > opts.residual_rel_tol * std::max(1.0, scale)) {
            std::ostringstream os;
            os << "projection distance cross-check failed: residual form " << a
               << " vs Pythagoras form " << b << " (rel tol " << opts.residual_rel_tol << ")";
            throw ConditioningError(os.str());
        }
        res.dist_sq = dist_residual;
    }
    res.projection_norm_sq = lam_dot_c;
    return res;
}

} // namespace hspace
