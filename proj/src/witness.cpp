#include "hspace/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace hspace {

double witness_u_tail_bound(const SpaceHandle& space, std::size_t M) {
    const WeightSpec& w = space.weights();
    switch (w.kind) {
        case WeightSpec::Kind::EtaReciprocal:
            // sum_{j>M} 1/(j+1)^2 = sum_{m>=M+2} 1/m^2 <= 1/(M+1)
            return std::sqrt(1.0 / (static_cast<double>(M) + 1.0));
        case WeightSpec::Kind::OmegaPower: {
            // eta_j^2 <= 8/omega_{2j-2} = 8 (2j-1)^{-alpha} for j >= 1 (omega
            // nondecreasing), and sum_{j>M} (2j-1)^{-alpha} <= the integral
            // from M, giving 4 (2M-1)^{1-alpha}/(alpha-1) for M >= 1.
            const double alpha = to_double(w.alpha);
            if (M == 0) {
                // pad with the j=1 term and start the integral at 1
                return std::sqrt(8.0 + 4.0 / (alpha - 1.0)) * 1.0000001;
            }
            const double t = 4.0 * std::pow(2.0 * static_cast<double>(M) - 1.0, 1.0 - alpha) /
                             (alpha - 1.0);
            return std::sqrt(t) * 1.0000001; // round-off headroom on an upper bound
        }
        case WeightSpec::Kind::OmegaList:
        case WeightSpec::Kind::EtaList:
            // finite data: the truncated object is the object itself
            return 0.0;
    }
    return 0.0;
}

WitnessPair make_witnesses(const SpaceHandle& space, std::size_t M, std::size_t N) {
    if (space.sigma().kind() == IndexMap::Kind::PermutationZplus &&
        space.sigma().bound() < 2 * std::max(M, N) + 3)
        throw std::invalid_argument("make_witnesses: sigma not built far enough for the witness levels");
    const Mode mode = space.mode();
    SequenceCache& cache = space.cache();

    SparseVec u(mode);
    for (std::size_t j = 0; j <= M; ++j)
        u.set(static_cast<std::uint32_t>(2 * j + 1), cache.eta(j));

    SparseVec v(mode);
    v.set(1, cache.eta(0).inverse());
    for (std::size_t k = 0; k <= N; ++k)
        v.add_to(static_cast<std::uint32_t>(2 * k), cache.eta(k));

    const double u_tail = witness_u_tail_bound(space, M);
    const double v_tail = witness_u_tail_bound(space, N); // same tail sum over eta^2

    WitnessPair pair{u, v, M, N, u_tail, v_tail, HFunction(space, u, u_tail),
                     HFunction(space, v, v_tail)};
    return pair;
}

FOddCheck check_f_odd(const SpaceHandle& space, const WitnessPair& pair, std::size_t up_to) {
    if (pair.level_m == 0 || up_to > pair.level_m - 1)
        throw std::invalid_argument(
            "check_f_odd: up_to must be <= M-1 so both cancelling terms are present");
    SequenceCache& cache = space.cache();
    FOddCheck out;
    out.up_to = up_to;
    out.all_zero = true;
    for (std::size_t n = 0; n <= up_to; ++n) {
        const Scalar val = pair.u.dot(y_vec(cache, 2 * n));
        const bool zero = space.mode() == Mode::Exact ? val.is_zero()
                                                      : std::abs(val.as_approx()) < space.options().zero_tol;
        if (!zero && out.all_zero) {
            out.all_zero = false;
            out.first_failure = n;
        }
    }
    // truncation boundary: <u_M, y_{2M}> = eta_M a_M = 1/eta_M, so
    // f_hat(sigma(2M)) = (1/eta_M)/||y_{2M}||, which is <= eta_M
    const std::size_t M = pair.level_m;
    out.boundary_exponent = space.sigma().forward(2 * M);
    out.boundary_residual = taylor_of(space, pair.f, out.boundary_exponent);
    out.boundary_le_eta_m = std::sqrt(to_double(cache.eta_sq_q(M)));
    return out;
}

GPerpCheck check_g_perp_odd(const SpaceHandle& space, const WitnessPair& pair, std::size_t up_to) {
    if (up_to > pair.level_n)
        throw std::invalid_argument("check_g_perp_odd: up_to must be <= N");
    SequenceCache& cache = space.cache();
    GPerpCheck out;
    out.up_to = up_to;
    out.all_zero = true;
    for (std::size_t n = 0; n <= up_to; ++n) {
        const Scalar val = x_vec(cache, 2 * n + 1).dot(pair.v);
        const bool zero = space.mode() == Mode::Exact ? val.is_zero()
                                                      : std::abs(val.as_approx()) < space.options().zero_tol;
        if (!zero && out.all_zero) {
            out.all_zero = false;
            out.first_failure = n;
        }
    }
    out.boundary_value = x_vec(cache, 2 * (pair.level_n + 1) + 1).dot(pair.v);
    return out;
}

DistanceBound odd_span_distance_bound(const SpaceHandle& space, std::size_t N) {
    SequenceCache& cache = space.cache();
    DistanceBound out;
    out.level = N;
    const WeightSpec& w = space.weights();
    if (w.kind == WeightSpec::Kind::OmegaPower && w.alpha.get_den() != 1) {
        double nsq = 1.0 / cache.eta_sq_d(0);
        for (std::size_t k = 0; k <= N; ++k) nsq += cache.eta_sq_d(k);
        out.bound = 1.0 / std::sqrt(nsq);
        return out;
    }
    Rational nsq = make_rational(cache.eta_sq_q(0).get_den(), cache.eta_sq_q(0).get_num());
    for (std::size_t k = 0; k <= N; ++k) nsq += cache.eta_sq_q(k);
    nsq.canonicalize();
    out.v_norm_sq = nsq;
    out.bound = 1.0 / std::sqrt(to_double(nsq));
    return out;
}

HeadlineReport headline_contrast(const SpaceHandle& space, const WitnessPair& pair,
                                 const std::vector<std::size_t>& ks) {
    SequenceCache& cache = space.cache();
    HeadlineReport report;

    // (i) distance to the full span of x_0..x_{2M+1}; spans are scale
    // invariant, so the unnormalized x_n generate span{z^0..z^{2M+1}}
    {
        std::vector<SparseVec> gens;
        std::vector<std::string> ids;
        for (std::size_t n = 0; n <= 2 * pair.level_m + 1; ++n) {
            gens.push_back(x_vec(cache, n));
            ids.push_back("x" + std::to_string(n));
        }
        ProjectionOptions opts;
        opts.pivot_drop_tol = space.options().pivot_drop_tol;
        auto res = project(space, pair.f, gens, opts, std::move(ids));
        report.full_span_dist_sq = res.dist_sq;
        report.full_span_zero = space.mode() == Mode::Exact
                                    ? res.dist_sq.is_zero()
                                    : std::abs(res.dist_sq.as_approx()) < 1e-9;
    }

    // (ii) distances to odd spans {x_1, x_3, ..., x_{2k+1}}
    for (std::size_t k : ks) {
        std::vector<SparseVec> gens;
        std::vector<std::string> ids;
        for (std::size_t j = 0; j <= k; ++j) {
            gens.push_back(x_vec(cache, 2 * j + 1));
            ids.push_back("x" + std::to_string(2 * j + 1));
        }
        ProjectionOptions opts;
        opts.pivot_drop_tol = space.options().pivot_drop_tol;
        auto res = project(space, pair.f, gens, opts, std::move(ids));

        HeadlineRow row;
        row.k = k;
        row.dist_sq = res.dist_sq;
        row.dist = std::sqrt(std::max(0.0, res.dist_sq.to_double()));
        const DistanceBound cert = odd_span_distance_bound(space, k);
        row.cert_v_norm_sq = cert.v_norm_sq;
        row.cert = cert.bound;
        if (space.mode() == Mode::Exact && res.dist_sq.is_rational()) {
            // dist^2 >= 1/||v_k||^2 exactly
            row.dominates_cert = res.dist_sq.as_rational() * cert.v_norm_sq >= 1;
        } else {
            row.dominates_cert = row.dist >= row.cert * (1 - 1e-9);
        }
        report.odd_rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hspace
