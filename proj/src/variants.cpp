#include "hspace/variants.hpp"

#include <cmath>
#include <stdexcept>

namespace hspace {

SupportSpec SupportSpec::evens() {
    SupportSpec s;
    s.kind = Builtin::Evens;
    s.both_infinite_certificate = true;
    return s;
}

SupportSpec SupportSpec::odds() {
    SupportSpec s;
    s.kind = Builtin::Odds;
    s.both_infinite_certificate = true;
    return s;
}

SupportSpec SupportSpec::squares() {
    SupportSpec s;
    s.kind = Builtin::Squares;
    s.both_infinite_certificate = true;
    return s;
}

SupportSpec SupportSpec::custom(std::vector<bool> prefix, std::size_t period,
                                std::vector<bool> residues) {
    if (period == 0 || residues.size() != period)
        throw std::invalid_argument("custom support: need residues for one full period");
    SupportSpec s;
    s.kind = Builtin::Custom;
    s.prefix = std::move(prefix);
    s.period = period;
    s.residues = std::move(residues);
    bool any_in = false, any_out = false;
    for (bool r : s.residues) (r ? any_in : any_out) = true;
    s.both_infinite_certificate = any_in && any_out;
    return s;
}

bool SupportSpec::contains(std::size_t n) const {
    switch (kind) {
        case Builtin::Evens: return n % 2 == 0;
        case Builtin::Odds: return n % 2 == 1;
        case Builtin::Squares: {
            Int root, m(static_cast<unsigned long>(n));
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
            return root * root == m;
        }
        case Builtin::Custom:
            if (n < prefix.size()) return prefix[n];
            return residues[n % period];
    }
    return false;
}

std::string SupportSpec::name() const {
    switch (kind) {
        case Builtin::Evens: return "evens";
        case Builtin::Odds: return "odds";
        case Builtin::Squares: return "squares";
        case Builtin::Custom: return "custom";
    }
    return "?";
}

IndexMap build_sigma(const SupportSpec& spec, std::size_t Q) {
    const std::size_t need_each = (Q + 2) / 2; // first ceil((Q+1)/2) elements of each side
    // scan cap: squares need roughly need^2; periodic rules need
    // prefix + period * need; pad generously and fail loudly beyond it
    std::size_t cap = std::max<std::size_t>(4 * need_each + 16, need_each * need_each + 16);
    if (spec.kind == SupportSpec::Builtin::Custom)
        cap = std::max(cap, spec.prefix.size() + spec.period * (need_each + 2));

    std::vector<std::int64_t> in_I, out_I;
    for (std::size_t n = 0; n <= cap && (in_I.size() < need_each || out_I.size() < need_each); ++n) {
        if (spec.contains(n))
            in_I.push_back(static_cast<std::int64_t>(n));
        else
            out_I.push_back(static_cast<std::int64_t>(n));
    }
    if (in_I.size() < need_each)
        throw std::invalid_argument("support set '" + spec.name() + "' exhausted below scan cap " +
                                    std::to_string(cap) + "; cannot build sigma up to " +
                                    std::to_string(Q));
    if (out_I.size() < need_each)
        throw std::invalid_argument("complement of support set '" + spec.name() +
                                    "' exhausted below scan cap " + std::to_string(cap));

    std::vector<std::int64_t> forward(Q + 1);
    for (std::size_t n = 0; n <= Q; ++n)
        forward[n] = n % 2 == 1 ? in_I[n / 2] : out_I[n / 2];
    return IndexMap::permutation(std::move(forward));
}

SupportedSpanReport supported_span_distance(const SpaceHandle& space, const WitnessPair& pair,
                                            std::size_t N, const std::vector<std::size_t>& ks) {
    SequenceCache& cache = space.cache();
    SupportedSpanReport report;

    // f's Taylor support within the validity window lies in I = sigma(odds)
    const auto f_odd = check_f_odd(space, pair, pair.level_m - 1);
    report.f_supported_in_I = f_odd.all_zero;
    report.boundary_exponent = f_odd.boundary_exponent;

    // g kills the monomials with exponents in I up to the window
    const auto g_perp = check_g_perp_odd(space, pair, N);
    report.g_perp_supported = g_perp.all_zero;

    const Scalar pairing = pair.u.dot(pair.v);
    report.pairing_one = space.mode() == Mode::Exact
                             ? (pairing - Scalar::one(space.mode())).is_zero()
                             : std::abs(pairing.as_approx() - 1.0) < space.options().zero_tol;

    // Gram distances: span{z^i : i the first k+1 elements of I} pulls back to
    // span{x_1, x_3, ..., x_{2k+1}}
    for (std::size_t k : ks) {
        std::vector<SparseVec> gens;
        std::vector<std::string> ids;
        for (std::size_t j = 0; j <= k; ++j) {
            gens.push_back(x_vec(cache, 2 * j + 1));
            ids.push_back("z^" + std::to_string(space.sigma().forward(2 * j + 1)));
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
        if (space.mode() == Mode::Exact && res.dist_sq.is_rational())
            row.dominates_cert = res.dist_sq.as_rational() * cert.v_norm_sq >= 1;
        else
            row.dominates_cert = row.dist >= row.cert * (1 - 1e-9);
        report.distance_rows.push_back(std::move(row));
    }
    return report;
}

SpaceHandle fourier_space(WeightSpec w, Mode mode, SpaceOptions opts) {
    return SpaceHandle(std::move(w), mode, IndexMap::bijection_to_z(), true, opts);
}

Scalar fourier_l2_norm_sq(const SpaceHandle& space, const SparseVec& x) {
    if (!space.damping())
        throw std::invalid_argument("fourier_l2_norm_sq: space is not a Fourier embedding");
    SequenceCache& cache = space.cache();
    Scalar acc = Scalar::zero(space.mode());
    for (std::size_t n : overlapping_basis_indices(space, x)) {
        const Scalar num = x.dot(y_vec(cache, n));
        if (num.is_zero(0.0)) continue;
        const Scalar ysq = norm_sq_y(cache, n);
        const Scalar damp_sq = space.damping_factor(n) * space.damping_factor(n);
        acc += (num * num) / (ysq * damp_sq);
    }
    return acc;
}

FourierReport fourier_counterexample(const SpaceHandle& space, const WitnessPair& pair,
                                     std::size_t N, const std::vector<std::size_t>& ks) {
    if (space.sigma().kind() != IndexMap::Kind::BijectionToZ || !space.damping())
        throw std::invalid_argument("fourier_counterexample: not a Fourier space");
    SequenceCache& cache = space.cache();
    const Mode mode = space.mode();
    FourierReport report;

    // u's frequencies: sigma(2j+1) = j >= 0, so f lies in H ∩ H^2 within the
    // window; the truncation residual sits at the negative frequency
    // sigma(2M) = -(M+1)
    const auto f_odd = check_f_odd(space, pair, pair.level_m - 1);
    report.f_holomorphic = f_odd.all_zero;
    report.boundary_frequency = f_odd.boundary_exponent;

    const auto g_perp = check_g_perp_odd(space, pair, N);
    report.g_perp_holomorphic = g_perp.all_zero;

    const Scalar pairing = pair.u.dot(pair.v);
    report.pairing_one = mode == Mode::Exact
                             ? (pairing - Scalar::one(mode)).is_zero()
                             : std::abs(pairing.as_approx() - 1.0) < space.options().zero_tol;

    // continuity into L^2(T): ||J(x)||_{L2} <= 2 ||x||, sampled on the
    // witnesses and on a few basis images
    {
        bool ok = true;
        std::vector<const SparseVec*> samples = {&pair.u, &pair.v};
        std::vector<SparseVec> extra;
        for (std::size_t n = 0; n < 6; ++n) extra.push_back(x_vec(cache, n));
        for (const auto& e : extra) samples.push_back(&e);
        for (const SparseVec* x : samples) {
            const Scalar l2 = fourier_l2_norm_sq(space, *x);
            const Scalar h = x->norm_sq();
            if (mode == Mode::Exact && l2.is_rational() && h.is_rational())
                ok = ok && l2.as_rational() <= 4 * h.as_rational();
            else
                ok = ok && l2.to_double() <= 4.0 * h.to_double() * (1 + 1e-9);
        }
        report.l2_continuity = ok;
    }

    // <J(2^n ||y_n|| x_n), J(2^m ||y_m|| x_m)>_H = 2^{n+m} ||y_n|| ||y_m|| <x_n, x_m>:
    // the H product is the l^2 one, damping only affects the L^2 image
    {
        bool ok = true;
        for (std::size_t n = 0; n < 5 && ok; ++n) {
            for (std::size_t m = 0; m < 5 && ok; ++m) {
                const SparseVec gn = monomial_coords(space, space.sigma().forward(n));
                const SparseVec gm = monomial_coords(space, space.sigma().forward(m));
                const Scalar lhs = gn.dot(gm);
                const Scalar scale = space.damping_factor(n) * space.damping_factor(m);
                Scalar ynym;
                if (mode == Mode::Exact)
                    ynym = Scalar::sqrt_of_rational(norm_sq_y_q(cache, n), mode) *
                           Scalar::sqrt_of_rational(norm_sq_y_q(cache, m), mode);
                else
                    ynym = Scalar::approx(std::sqrt(norm_sq_y(cache, n).as_approx() *
                                                    norm_sq_y(cache, m).as_approx()));
                const Scalar rhs = scale * ynym * x_vec(cache, n).dot(x_vec(cache, m));
                const Scalar diff = lhs - rhs;
                ok = mode == Mode::Exact ? diff.is_zero() : std::abs(diff.as_approx()) < 1e-6;
            }
        }
        report.monomial_inner_products = ok;
    }

    // distance from f to the span of holomorphic monomial images: the
    // monomial at frequency j >= 0 pulls back to a multiple of x_{2j+1}
    for (std::size_t k : ks) {
        std::vector<SparseVec> gens;
        std::vector<std::string> ids;
        for (std::size_t j = 0; j <= k; ++j) {
            gens.push_back(x_vec(cache, 2 * j + 1));
            ids.push_back("exp(i" + std::to_string(j) + "t)");
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
        if (mode == Mode::Exact && res.dist_sq.is_rational())
            row.dominates_cert = res.dist_sq.as_rational() * cert.v_norm_sq >= 1;
        else
            row.dominates_cert = row.dist >= row.cert * (1 - 1e-9);
        report.distance_rows.push_back(std::move(row));
    }

    // Corollary-5 rows: symmetric partial sums s_n(f) = sum_{|k|<=n} f_hat(k) e^{ikt}
    // are holomorphic polynomials for n <= M, so the same certificate applies
    const DistanceBound cert = odd_span_distance_bound(space, N);
    for (std::size_t n : {1ul, 2ul, 4ul, 8ul, 16ul}) {
        if (n > pair.level_m) continue;
        std::map<std::int64_t, Scalar> taylor;
        for (std::size_t bi : overlapping_basis_indices(space, pair.f.coords())) {
            const std::int64_t freq = space.sigma().forward(bi);
            if (freq < -static_cast<std::int64_t>(n) || freq > static_cast<std::int64_t>(n)) continue;
            Scalar c = taylor_of(space, pair.f, freq);
            if (!c.is_zero(0.0)) taylor.emplace(freq, std::move(c));
        }
        const HFunction sn(space, polynomial_coords(space, taylor), 0.0);
        MethodDistanceRow row;
        row.method = "fourier_symmetric_partial_sum";
        row.n = n;
        const Scalar dsq = (pair.f.coords() - sn.coords()).norm_sq();
        row.dist = std::sqrt(std::max(0.0, dsq.to_double()));
        if (mode == Mode::Exact && dsq.is_rational()) row.dist_exact = to_string(dsq.as_rational());
        row.cert = cert.bound;
        row.slack = 0.0;
        if (mode == Mode::Exact && dsq.is_rational() && cert.v_norm_sq != 0)
            row.pass = dsq.as_rational() * cert.v_norm_sq >= 1;
        else
            row.pass = row.dist >= row.cert * (1 - 1e-9);
        report.symmetric_partial_sums.push_back(std::move(row));
    }
    return report;
}

} // namespace hspace
