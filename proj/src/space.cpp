#include "hspace/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hspace {

std::size_t SpaceHandle::basis_index_of(std::int64_t k) const {
    auto n = sigma_.inverse(k);
    if (!n)
        throw std::out_of_range("exponent " + std::to_string(k) +
                                " is outside the built range of sigma (" + sigma_.kind_name() + ")");
    return *n;
}

Scalar SpaceHandle::damping_factor(std::size_t n) const {
    if (!damping_) return Scalar::one(mode_);
    if (mode_ == Mode::Approx) return Scalar::approx(std::ldexp(1.0, static_cast<int>(n)));
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
    return Scalar::rational(Rational(p));
}

HFunction::HFunction(const SpaceHandle& space, SparseVec coords, double tail_bound)
    : coords_(std::move(coords)), tail_bound_(tail_bound) {
    if (coords_.mode() != space.mode())
        throw ModeMismatchError("HFunction: coords mode does not match space mode");
    if (tail_bound_ < 0) throw std::invalid_argument("HFunction: tail bound must be >= 0");
}

Scalar HFunction::taylor_cached(std::int64_t degree, const std::function<Scalar()>& compute) const {
    {
        std::lock_guard lock(mu_);
        auto it = taylor_.find(degree);
        if (it != taylor_.end()) return it->second;
    }
    Scalar value = compute();
    std::lock_guard lock(mu_);
    return taylor_.emplace(degree, std::move(value)).first->second;
}

SparseVec monomial_coords(const SpaceHandle& space, std::int64_t k) {
    const std::size_t n = space.basis_index_of(k);
    SequenceCache& cache = space.cache();
    const Scalar ynorm = space.mode() == Mode::Exact
                             ? Scalar::sqrt_of_rational(norm_sq_y_q(cache, n), Mode::Exact)
                             : Scalar::approx(std::sqrt(norm_sq_y(cache, n).as_approx()));
    return x_vec(cache, n).scaled(ynorm * space.damping_factor(n));
}

SparseVec polynomial_coords(const SpaceHandle& space, const std::map<std::int64_t, Scalar>& taylor) {
    SparseVec acc(space.mode());
    for (const auto& [k, c] : taylor) acc.add_scaled(monomial_coords(space, k), c);
    return acc;
}

std::vector<std::size_t> overlapping_basis_indices(const SpaceHandle& space, const SparseVec& coords) {
    // y_n touches e_n plus, for even n = 2m, e_{2m+1} and e_{2m+3}; so entry
    // e_j can contribute to y_j, y_{j-1} (j odd) and y_{j-3} (j odd).
    std::set<std::size_t> out;
    for (const auto& [j, c] : coords) {
        out.insert(j);
        if (j % 2 == 1) {
            if (j >= 1) out.insert(j - 1);
            if (j >= 3) out.insert(j - 3);
        }
    }
    (void)space;
    return {out.begin(), out.end()};
}

Scalar taylor_of(const SpaceHandle& space, const HFunction& f, std::int64_t k) {
    return f.taylor_cached(k, [&] {
        const std::size_t n = space.basis_index_of(k);
        SequenceCache& cache = space.cache();
        const Scalar num = f.coords().dot(y_vec(cache, n));
        if (num.is_exact() && num.is_zero()) return Scalar::zero(space.mode());
        const Scalar ynorm = space.mode() == Mode::Exact
                                 ? Scalar::sqrt_of_rational(norm_sq_y_q(cache, n), Mode::Exact)
                                 : Scalar::approx(std::sqrt(norm_sq_y(cache, n).as_approx()));
        return num / (ynorm * space.damping_factor(n));
    });
}

Scalar inner_product_H(const SpaceHandle& space, const HFunction& f, const HFunction& g) {
    if (f.coords().mode() != space.mode() || g.coords().mode() != space.mode())
        throw ModeMismatchError("inner_product_H: mode mismatch");
    return f.coords().dot(g.coords());
}

std::optional<std::int64_t> max_taylor_degree(const SpaceHandle& space, const HFunction& f) {
    std::optional<std::int64_t> best;
    for (std::size_t n : overlapping_basis_indices(space, f.coords())) {
        const std::int64_t k = space.sigma().forward(n);
        if (!best || k > *best) best = k;
    }
    return best;
}

std::vector<NormCheckRow> monomial_norm_check(const SpaceHandle& space, std::size_t N) {
    SequenceCache& cache = space.cache();
    const bool omega = space.weights().omega_mode();
    std::vector<NormCheckRow> rows;
    rows.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        NormCheckRow row;
        row.degree = space.sigma().forward(n);
        row.has_bound = omega;
        if (space.mode() == Mode::Exact ||
            space.weights().kind != WeightSpec::Kind::OmegaPower ||
            space.weights().alpha.get_den() == 1) {
            const Rational nsq = norm_sq_x_q(cache, n) * norm_sq_y_q(cache, n);
            row.norm_sq_exact = to_string(nsq);
            row.norm = std::sqrt(to_double(nsq));
            if (omega) {
                const Rational bound = Rational(1) + space.weights().omega(n);
                row.bound = to_double(bound);
                row.pass = nsq <= bound * bound; // exact rational comparison
            } else {
                row.bound = std::numeric_limits<double>::quiet_NaN();
                row.pass = true; // informational
            }
        } else {
            // non-integer exponent: double-precision report only
            const double nsq = norm_sq_x(cache, n).as_approx() * norm_sq_y(cache, n).as_approx();
            row.norm_sq_exact = "";
            row.norm = std::sqrt(nsq);
            row.bound = 1.0 + space.weights().omega_d(n);
            row.pass = nsq <= row.bound * row.bound * (1 + 1e-12);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

EvalResult eval_at(const SpaceHandle& space, const HFunction& f, std::complex<double> z,
                   double accuracy) {
    const double az = std::abs(z);
    if (az >= 1.0) throw std::domain_error("eval_at: |z| must be < 1");
    if (space.sigma().kind() == IndexMap::Kind::BijectionToZ)
        throw std::invalid_argument("eval_at: disk evaluation needs a Z+-valued sigma");

    const double norm = std::sqrt(std::max(0.0, f.norm_sq().to_double()));
    // contribution of the truncated-away l^2 tail, |J(t)(z)| <= ||t||/(1-|z|)
    const double tail_part = f.tail_bound() / (1.0 - az);

    std::optional<std::int64_t> maxdeg = max_taylor_degree(space, f);
    if (!maxdeg) return {std::complex<double>(0.0, 0.0), tail_part, 0};

    // choose D so the beyond-D estimate ||x|| |z|^{D+1}/(1-|z|) meets the
    // request, capped at the function's own top degree where it vanishes
    std::size_t D = static_cast<std::size_t>(*maxdeg);
    double series_part = 0.0;
    if (az > 0.0 && accuracy > 0.0) {
        std::size_t d = 0;
        double est = norm * az / (1.0 - az);
        while (d < D && est >= accuracy) {
            ++d;
            est *= az;
        }
        if (d < D) {
            D = d;
            series_part = est;
        }
    }

    std::complex<double> acc(0.0, 0.0);
    std::complex<double> zpow(1.0, 0.0);
    for (std::size_t k = 0; k <= D; ++k) {
        const Scalar c = taylor_of(space, f, static_cast<std::int64_t>(k));
        acc += c.to_double() * zpow;
        zpow *= z;
    }
    return {acc, series_part + tail_part, D};
}

} // namespace hspace
