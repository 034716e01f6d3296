#include "hspace/summability.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hspace {

namespace {

// Taylor coefficients of f up to degree k as a map (identity/permutation
// sigma; degrees outside the built map cannot carry coefficients of a
// finitely supported f).
std::map<std::int64_t, Scalar> taylor_prefix(const SpaceHandle& space, const HFunction& f,
                                             std::size_t k) {
    std::map<std::int64_t, Scalar> out;
    for (std::size_t n : overlapping_basis_indices(space, f.coords())) {
        const std::int64_t deg = space.sigma().forward(n);
        if (deg < 0 || deg > static_cast<std::int64_t>(k)) continue;
        Scalar c = taylor_of(space, f, deg);
        if (!c.is_zero(0.0)) out.emplace(deg, std::move(c));
    }
    return out;
}

Scalar scalar_from_rational(const Rational& r, Mode mode) {
    return mode == Mode::Exact ? Scalar::rational(r) : Scalar::approx(to_double(r));
}

void require_summability_certificate(const SpaceHandle& space) {
    if (!space.weights().nth_root_limit_one)
        throw std::invalid_argument(
            "summability method with infinitely many terms requires the nth-root certificate "
            "omega_n^{1/n} -> 1 on the weights");
}

} // namespace

HFunction partial_sum(const SpaceHandle& space, const HFunction& f, std::size_t k) {
    return HFunction(space, polynomial_coords(space, taylor_prefix(space, f, k)), 0.0);
}

HFunction radial_dilate(const SpaceHandle& space, const HFunction& f, const Rational& r) {
    if (r <= 0 || r >= 1) throw std::invalid_argument("radial_dilate: r must be in (0,1)");
    std::optional<std::int64_t> maxdeg = max_taylor_degree(space, f);
    if (!maxdeg) return HFunction(space, SparseVec(space.mode()), f.tail_bound());
    auto taylor = taylor_prefix(space, f, static_cast<std::size_t>(*maxdeg));
    Rational rpow(1);
    std::int64_t at = 0;
    for (auto& [deg, c] : taylor) {
        while (at < deg) {
            rpow *= r;
            ++at;
        }
        c = c * scalar_from_rational(rpow, space.mode());
    }
    // dilation contracts l^2 tails coefficientwise only in the Taylor
    // picture; we keep the conservative declared tail of f itself
    return HFunction(space, polynomial_coords(space, taylor), f.tail_bound());
}

HFunction apply_summability(const SpaceHandle& space, const HFunction& f,
                            const SummabilityVector& method, std::size_t n_or_K) {
    const Mode mode = space.mode();
    if (const auto* tri = std::get_if<TriangularRow>(&method)) {
        if (tri->c.empty()) throw std::invalid_argument("triangular row must be nonempty");
        const std::size_t n = tri->c.size() - 1;
        // coefficient of z^j in sum_k c_k s_k(f) is f_hat(j) sum_{k>=j} c_k
        auto taylor = taylor_prefix(space, f, n);
        std::vector<Scalar> suffix(n + 2, Scalar::zero(mode));
        for (std::size_t k = n + 1; k-- > 0;) suffix[k] = suffix[k + 1] + tri->c[k];
        for (auto& [deg, c] : taylor) c = c * suffix[static_cast<std::size_t>(deg)];
        return HFunction(space, polynomial_coords(space, taylor), 0.0);
    }
    if (const auto* pd = std::get_if<PowerDecay>(&method)) {
        require_summability_certificate(space);
        if (pd->declared_radius >= 1.0)
            throw std::invalid_argument("power-decay method: declared radius must be < 1");
        TriangularRow row{pd->c};
        return apply_summability(space, f, SummabilityVector(row), n_or_K);
    }
    const auto& abel = std::get<AbelMethod>(method);
    require_summability_certificate(space);
    if (abel.r <= 0 || abel.r >= 1) throw std::invalid_argument("Abel method: r must be in (0,1)");
    TriangularRow row;
    row.c.reserve(n_or_K + 1);
    Rational coeff = Rational(1) - abel.r;
    for (std::size_t k = 0; k <= n_or_K; ++k) {
        row.c.push_back(scalar_from_rational(coeff, mode));
        coeff *= abel.r;
    }
    return apply_summability(space, f, SummabilityVector(row), n_or_K);
}

AbelIdentityCheck abel_dilate_identity_check(const SpaceHandle& space, const HFunction& f,
                                             const Rational& r, std::size_t K) {
    // telescoping: sum_{k<=K} (1-r) r^k s_k(f) = f_r - r^{K+1} s_K(f)
    const HFunction lhs = apply_summability(space, f, AbelMethod{r}, K);
    const HFunction dilate = radial_dilate(space, f, r);
    const HFunction sK = partial_sum(space, f, K);
    const Scalar rK1 = scalar_from_rational(rational_pow(r, static_cast<long>(K) + 1), space.mode());
    SparseVec expected = dilate.coords();
    expected.add_scaled(sK.coords(), -rK1);
    SparseVec diff = lhs.coords() - expected;
    AbelIdentityCheck out;
    out.K = K;
    bool ok = true;
    for (const auto& [i, c] : diff) {
        const bool zero = space.mode() == Mode::Exact ? c.is_zero()
                                                      : std::abs(c.as_approx()) < 1e-9;
        if (!zero) ok = false;
    }
    out.exact = ok;
    out.residual_norm = std::abs(to_double(rational_pow(r, static_cast<long>(K) + 1))) *
                        std::sqrt(std::max(0.0, sK.norm_sq().to_double()));
    return out;
}

std::vector<GrowthRow> partial_sum_norm_growth(const SpaceHandle& space, const HFunction& f,
                                               std::size_t K, const Rational& R) {
    if (!space.weights().nth_root_limit_one)
        throw std::invalid_argument("partial_sum_norm_growth requires the nth-root flag on the weights");
    std::vector<GrowthRow> rows;
    rows.reserve(K);
    Rational Rpow2(1); // R^{2k}
    const Rational R2 = R * R;
    for (std::size_t k = 1; k <= K; ++k) {
        Rpow2 *= R2;
        const HFunction sk = partial_sum(space, f, k);
        const Scalar nsq = sk.norm_sq();
        GrowthRow row;
        row.k = k;
        if (space.mode() == Mode::Exact && nsq.is_rational()) {
            row.norm_sq_exact = to_string(nsq.as_rational());
            row.below_R = nsq.as_rational() <= Rpow2; // ||s_k||^2 <= R^{2k}, exact
        } else {
            row.below_R = nsq.to_double() <= to_double(Rpow2) * (1 + 1e-12);
        }
        row.norm = std::sqrt(std::max(0.0, nsq.to_double()));
        row.kth_root = row.norm > 0 ? std::exp(std::log(row.norm) / static_cast<double>(k)) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

FailureReport summability_failure_report(const SpaceHandle& space, const WitnessPair& pair,
                                         const std::vector<Rational>& abel_radii,
                                         std::size_t random_rows, std::uint64_t seed,
                                         const std::vector<std::size_t>& ns,
                                         const std::vector<std::size_t>& control_degrees) {
    const Mode mode = space.mode();
    const std::size_t M = pair.level_m;
    const std::size_t N = pair.level_n;
    const std::size_t n_max = 2 * M - 1; // s_n(f_M) = s_n(f) in this window
    FailureReport report;
    report.all_certified = true;

    const DistanceBound cert_n = odd_span_distance_bound(space, N);

    // distance of a computed combination from f, certified through the exact
    // pairing <f - T, g_N> = pairing_value
    auto add_row = [&](const std::string& name, std::size_t n, const HFunction& T,
                       const Rational& pairing_value) {
        MethodDistanceRow row;
        row.method = name;
        row.n = n;
        const SparseVec diffvec = pair.f.coords() - T.coords();
        const Scalar dsq = diffvec.norm_sq();
        row.dist = std::sqrt(std::max(0.0, dsq.to_double()));
        if (mode == Mode::Exact && dsq.is_rational()) row.dist_exact = to_string(dsq.as_rational());
        // ||f - T|| >= <f - T, g_N>/||v_N|| = pairing_value/||v_N||
        row.cert = to_double(pairing_value) * cert_n.bound;
        row.slack = (Rational(1) - pairing_value) == 0 ? 0.0 : (1.0 - to_double(pairing_value)) * cert_n.bound;
        if (mode == Mode::Exact && dsq.is_rational() && cert_n.v_norm_sq != 0) {
            // dist^2 * ||v_N||^2 >= pairing^2, exactly
            row.pass = dsq.as_rational() * cert_n.v_norm_sq >= pairing_value * pairing_value;
        } else {
            row.pass = row.dist >= row.cert * (1 - 1e-9);
        }
        report.all_certified = report.all_certified && row.pass;
        report.rows.push_back(std::move(row));
    };

    // Taylor partial sums: T_n = s_n, odd polynomials for n <= 2M-1,
    // annihilated by g_N for degrees <= 2N+1; pairing <f - s_n, g_N> = 1.
    for (std::size_t n : ns) {
        if (n > n_max || n > 2 * N + 1) continue;
        add_row("taylor", n, partial_sum(space, pair.f, n), Rational(1));
    }

    // Cesaro means
    for (std::size_t n : ns) {
        if (n > n_max || n > 2 * N + 1) continue;
        TriangularRow row;
        row.c.assign(n + 1, scalar_from_rational(make_rational(1, static_cast<long>(n) + 1), mode));
        add_row("cesaro", n, apply_summability(space, pair.f, SummabilityVector(row), n), Rational(1));
    }

    // random row-normalized triangular schemes
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_rows; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % std::min(n_max, 2 * N + 1));
        std::vector<Rational> w(n + 1);
        Rational total(0);
        for (auto& c : w) {
            c = Rational(static_cast<long>(rng() % 100));
            total += c;
        }
        if (total == 0) {
            w[0] = 1;
            total = 1;
        }
        TriangularRow row;
        for (const auto& c : w) row.c.push_back(scalar_from_rational(c / total, mode));
        add_row("random_triangular[" + std::to_string(i) + "]", n,
                apply_summability(space, pair.f, SummabilityVector(row), n), Rational(1));
    }

    // Abel means / radial dilates: <f - f_r, g_N> = 1 - r^{2M} (M <= N),
    // because the truncation's lone even coefficient pairs to r^{2M}.
    if (M > N)
        throw std::invalid_argument("summability_failure_report requires M <= N for the dilate pairing");
    for (const Rational& r : abel_radii) {
        const HFunction fr = radial_dilate(space, pair.f, r);
        const Rational pairing = Rational(1) - rational_pow(r, 2 * static_cast<long>(M));
        add_row("abel_dilate[r=" + to_string(r) + "]", 0, fr, pairing);
    }

    // control: distances to full polynomial spans must decay to zero
    for (std::size_t D : control_degrees) {
        std::vector<SparseVec> gens;
        std::vector<std::string> ids;
        for (std::size_t n = 0; n <= D; ++n) {
            gens.push_back(x_vec(space.cache(), n));
            ids.push_back("x" + std::to_string(n));
        }
        ProjectionOptions opts;
        opts.pivot_drop_tol = space.options().pivot_drop_tol;
        auto res = project(space, pair.f, gens, opts, std::move(ids));
        ControlRow row;
        row.degree = D;
        row.dist = std::sqrt(std::max(0.0, res.dist_sq.to_double()));
        if (mode == Mode::Exact && res.dist_sq.is_rational())
            row.dist_sq_exact = to_string(res.dist_sq.as_rational());
        report.control.push_back(std::move(row));
    }
    return report;
}

} // namespace hspace
