#include "hspace/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace hspace {

WeightSpec WeightSpec::omega_power(const Rational& alpha) {
    if (alpha <= 1)
        throw std::invalid_argument("omega_power: exponent must be > 1 so that sum 1/omega_n converges");
    WeightSpec w;
    w.kind = Kind::OmegaPower;
    w.alpha = alpha;
    w.summable_reciprocal = true; // sum (n+1)^{-alpha} < inf for alpha > 1
    w.nth_root_limit_one = true;  // (n+1)^{alpha/n} -> 1
    return w;
}

WeightSpec WeightSpec::omega_list(std::vector<Rational> values, bool summable, bool nth_root_one) {
    WeightSpec w;
    w.kind = Kind::OmegaList;
    w.values = std::move(values);
    for (const auto& v : w.values)
        if (v <= 0) throw std::invalid_argument("omega_list: weights must be strictly positive");
    w.summable_reciprocal = summable;
    w.nth_root_limit_one = nth_root_one;
    return w;
}

WeightSpec WeightSpec::eta_reciprocal() {
    WeightSpec w;
    w.kind = Kind::EtaReciprocal;
    w.summable_reciprocal = true; // sum 1/(n+1)^2 < inf
    w.nth_root_limit_one = true;
    return w;
}

WeightSpec WeightSpec::eta_list(std::vector<Rational> values, bool summable, bool nth_root_one) {
    WeightSpec w;
    w.kind = Kind::EtaList;
    w.values = std::move(values);
    for (const auto& v : w.values)
        if (v <= 0) throw std::invalid_argument("eta_list: values must be strictly positive");
    w.summable_reciprocal = summable;
    w.nth_root_limit_one = nth_root_one;
    return w;
}

std::string WeightSpec::kind_name() const {
    switch (kind) {
        case Kind::OmegaPower: return "omega_power";
        case Kind::OmegaList: return "omega_list";
        case Kind::EtaReciprocal: return "eta_reciprocal";
        case Kind::EtaList: return "eta_list";
    }
    return "?";
}

Rational WeightSpec::omega(std::size_t n) const {
    switch (kind) {
        case Kind::OmegaPower: {
            if (alpha.get_den() != 1)
                throw std::invalid_argument(
                    "omega_power with non-integer exponent has no exact rational value; use approx mode");
            return rational_pow(Rational(static_cast<long>(n) + 1), alpha.get_num().get_si());
        }
        case Kind::OmegaList:
            if (n >= values.size())
                throw std::out_of_range("omega_list: index " + std::to_string(n) + " beyond list of " +
                                        std::to_string(values.size()));
            return values[n];
        default:
            throw std::invalid_argument("omega(): spec is eta-direct, it has no omega sequence");
    }
}

double WeightSpec::omega_d(std::size_t n) const {
    if (kind == Kind::OmegaPower)
        return std::pow(static_cast<double>(n) + 1.0, to_double(alpha));
    return to_double(omega(n));
}

std::size_t WeightSpec::max_eta_index() const {
    constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();
    switch (kind) {
        case Kind::OmegaPower:
        case Kind::EtaReciprocal:
            return unbounded;
        case Kind::OmegaList:
            // eta_n^2 needs omega_{2n+3}
            return values.size() < 4 ? 0 : (values.size() - 4) / 2;
        case Kind::EtaList:
            return values.empty() ? 0 : values.size() - 1;
    }
    return 0;
}

Rational eta_sq_from_omega(const WeightSpec& w, std::size_t n) {
    if (!w.omega_mode())
        throw std::invalid_argument("eta_sq_from_omega: spec is eta-direct");
    Rational sum = Rational(3) / w.omega(2 * n) + Rational(3) / w.omega(2 * n + 1) +
                   Rational(1) / w.omega(2 * n + 3);
    if (n > 0) sum += Rational(1) / w.omega(2 * n - 2);
    Rational out = sum;
    out.canonicalize();
    return out;
}

double eta_sq_from_omega_d(const WeightSpec& w, std::size_t n) {
    if (!w.omega_mode())
        throw std::invalid_argument("eta_sq_from_omega: spec is eta-direct");
    double sum = 3.0 / w.omega_d(2 * n) + 3.0 / w.omega_d(2 * n + 1) + 1.0 / w.omega_d(2 * n + 3);
    if (n > 0) sum += 1.0 / w.omega_d(2 * n - 2);
    return sum;
}

SequenceCache::SequenceCache(WeightSpec w, Mode mode) : spec_(std::move(w)), mode_(mode) {
    if (mode_ == Mode::Exact && spec_.kind == WeightSpec::Kind::OmegaPower &&
        spec_.alpha.get_den() != 1)
        throw std::invalid_argument("exact mode requires an integer omega_power exponent");
}

void SequenceCache::ensure_eta_sq(std::size_t n) {
    if (n > spec_.max_eta_index())
        throw std::out_of_range("eta index " + std::to_string(n) + " beyond spec range");
    while (eta_sq_.size() <= n) {
        const std::size_t k = eta_sq_.size();
        switch (spec_.kind) {
            case WeightSpec::Kind::OmegaPower:
            case WeightSpec::Kind::OmegaList:
                eta_sq_.push_back(eta_sq_from_omega(spec_, k));
                break;
            case WeightSpec::Kind::EtaReciprocal:
                eta_sq_.push_back(make_rational(1, (static_cast<long>(k) + 1) * (static_cast<long>(k) + 1)));
                break;
            case WeightSpec::Kind::EtaList:
                eta_sq_.push_back(spec_.values[k] * spec_.values[k]);
                break;
        }
        if (eta_sq_.back() <= 0) throw std::logic_error("eta_sq must be positive");
    }
}

const Rational& SequenceCache::eta_sq_q(std::size_t n) {
    std::lock_guard lock(mu_);
    ensure_eta_sq(n);
    return eta_sq_[n];
}

double SequenceCache::eta_sq_d(std::size_t n) {
    if (spec_.kind == WeightSpec::Kind::OmegaPower && spec_.alpha.get_den() != 1)
        return eta_sq_from_omega_d(spec_, n);
    return to_double(eta_sq_q(n));
}

Scalar SequenceCache::eta(std::size_t n) {
    if (mode_ == Mode::Approx) return Scalar::approx(std::sqrt(eta_sq_d(n)));
    std::lock_guard lock(mu_);
    ensure_eta_sq(n);
    while (eta_.size() <= n) {
        const std::size_t k = eta_.size();
        if (spec_.kind == WeightSpec::Kind::EtaReciprocal) {
            eta_.push_back(Scalar::rational(make_rational(1, static_cast<long>(k) + 1)));
        } else if (spec_.kind == WeightSpec::Kind::EtaList) {
            eta_.push_back(Scalar::rational(spec_.values[k]));
        } else {
            eta_.push_back(Scalar::sqrt_of_rational(eta_sq_[k], Mode::Exact));
        }
    }
    return eta_[n];
}

Scalar SequenceCache::a(std::size_t n) {
    if (mode_ == Mode::Approx) return Scalar::approx(1.0 / eta_sq_d(n));
    return Scalar::rational(a_q(n));
}

Rational SequenceCache::a_q(std::size_t n) {
    const Rational& e = eta_sq_q(n);
    return make_rational(e.get_den(), e.get_num());
}

Scalar SequenceCache::b(std::size_t n) {
    if (n < 1) throw std::invalid_argument("b_n is defined for n >= 1");
    if (mode_ == Mode::Approx)
        return Scalar::approx(1.0 / (std::sqrt(eta_sq_d(n)) * std::sqrt(eta_sq_d(n - 1))));
    return (eta(n) * eta(n - 1)).inverse();
}

Rational SequenceCache::b_sq_q(std::size_t n) {
    if (n < 1) throw std::invalid_argument("b_n is defined for n >= 1");
    Rational prod = eta_sq_q(n) * eta_sq_q(n - 1);
    return make_rational(prod.get_den(), prod.get_num());
}

} // namespace hspace
