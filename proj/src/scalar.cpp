#include "hspace/scalar.hpp"

#include "hspace/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace hspace {

// ---------------------------------------------------------------------------
// GeneratorRegistry
// ---------------------------------------------------------------------------

struct GeneratorRegistry::Impl {
    struct Gen {
        Rational square;   // eta_i^2
        Rational scale;    // sqrt(square) = scale * sqrt(kernel)
        Int kernel;        // squarefree
        double sqrt_d;     // binary64 value of sqrt(square)
    };
    // GF(2) row echelon over primes: each row's prime set equals the parity
    // of the combined kernels of the generators listed in `gens`.
    struct Row {
        Int pivot;
        std::set<Int> primes;
        std::set<std::uint32_t> gens;
    };

    mutable std::shared_mutex mu;
    std::vector<Gen> gens;
    std::vector<Row> rows;
    std::map<Rational, Scalar> memo;
};

GeneratorRegistry& GeneratorRegistry::instance() {
    static GeneratorRegistry reg;
    return reg;
}

GeneratorRegistry::Impl& GeneratorRegistry::impl() const {
    static Impl impl;
    return impl;
}

Rational GeneratorRegistry::square_of(std::uint32_t id) const {
    Impl& im = impl();
    std::shared_lock lock(im.mu);
    return im.gens.at(id).square;
}

double GeneratorRegistry::sqrt_double_of(std::uint32_t id) const {
    Impl& im = impl();
    std::shared_lock lock(im.mu);
    return im.gens.at(id).sqrt_d;
}

std::size_t GeneratorRegistry::size() const {
    Impl& im = impl();
    std::shared_lock lock(im.mu);
    return im.gens.size();
}

Scalar GeneratorRegistry::sqrt(const Rational& r) {
    if (r <= 0) throw std::domain_error("sqrt_of_rational: argument must be > 0");
    Impl& im = impl();
    {
        std::shared_lock lock(im.mu);
        auto it = im.memo.find(r);
        if (it != im.memo.end()) return it->second;
    }

    Rational root;
    if (rational_sqrt_exact(r, root)) {
        Scalar s = Scalar::rational(root);
        std::unique_lock lock(im.mu);
        im.memo.emplace(r, s);
        return s;
    }

    SquarefreeParts parts = squarefree_decompose(r);

    std::unique_lock lock(im.mu);
    if (auto it = im.memo.find(r); it != im.memo.end()) return it->second; // raced

    // Reduce the kernel's prime parity vector against the echelon rows,
    // tracking which generators the used rows stand for.  Rows are kept in
    // reduced form (no row contains another row's pivot), so one pass over
    // the rows is a full reduction.
    std::set<Int> vec(parts.kernel_primes.begin(), parts.kernel_primes.end());
    std::set<std::uint32_t> used;
    for (const auto& row : im.rows) {
        if (vec.count(row.pivot)) {
            for (const Int& p : row.primes) {
                if (!vec.erase(p)) vec.insert(p);
            }
            for (std::uint32_t g : row.gens) {
                if (!used.erase(g)) used.insert(g);
            }
        }
    }

    Scalar result;
    if (vec.empty()) {
        // Dependent: kernel * prod_{i in used} kernel_i is a perfect square s2,
        // so sqrt(kernel) = s2 / prod kernel_i * prod sqrt(kernel_i)
        //                 = [s2 / prod(kernel_i * scale_i)] * prod eta_i.
        Int prod_kernels = 1;
        Rational scale_prod(1);
        for (std::uint32_t g : used) {
            prod_kernels *= im.gens[g].kernel;
            scale_prod *= im.gens[g].scale;
        }
        Int square = parts.kernel * prod_kernels;
        Int s2;
        mpz_sqrt(s2.get_mpz_t(), square.get_mpz_t());
        if (s2 * s2 != square)
            throw std::logic_error("registry: dependent kernel product is not a perfect square");
        EtaMonomial mono;
        mono.coeff = parts.scale * make_rational(s2, prod_kernels) / scale_prod;
        mono.gens.assign(used.begin(), used.end());
        std::sort(mono.gens.begin(), mono.gens.end());
        result = Scalar::from_terms({std::move(mono)});
    } else {
        const auto id = static_cast<std::uint32_t>(im.gens.size());
        Impl::Gen gen;
        gen.square = r;
        gen.scale = parts.scale;
        gen.kernel = parts.kernel;
        gen.sqrt_d = std::sqrt(to_double(r));
        im.gens.push_back(std::move(gen));

        Impl::Row row;
        row.pivot = *vec.begin();
        row.primes = std::move(vec);
        row.gens = std::move(used);
        if (!row.gens.erase(id)) row.gens.insert(id);
        // back-substitute to keep the rows fully reduced
        for (auto& r : im.rows) {
            if (!r.primes.count(row.pivot)) continue;
            for (const Int& p : row.primes) {
                if (!r.primes.erase(p)) r.primes.insert(p);
            }
            for (std::uint32_t g : row.gens) {
                if (!r.gens.erase(g)) r.gens.insert(g);
            }
        }
        im.rows.push_back(std::move(row));

        EtaMonomial mono;
        mono.coeff = Rational(1);
        mono.gens = {id};
        result = Scalar::from_terms({std::move(mono)});
    }
    im.memo.emplace(r, result);
    return result;
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

namespace {

bool gens_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode() != b.mode())
        throw ModeMismatchError(std::string("scalar ") + op + ": " + mode_name(a.mode()) +
                                " vs " + mode_name(b.mode()));
}

// product of two canonical monomials; folds repeated generators via their
// registered squares
EtaMonomial mul_monomials(const EtaMonomial& a, const EtaMonomial& b) {
    EtaMonomial out;
    out.coeff = a.coeff * b.coeff;
    auto ia = a.gens.begin();
    auto ib = b.gens.begin();
    auto& reg = GeneratorRegistry::instance();
    while (ia != a.gens.end() && ib != b.gens.end()) {
        if (*ia < *ib) {
            out.gens.push_back(*ia++);
        } else if (*ib < *ia) {
            out.gens.push_back(*ib++);
        } else {
            out.coeff *= reg.square_of(*ia);
            ++ia;
            ++ib;
        }
    }
    out.gens.insert(out.gens.end(), ia, a.gens.end());
    out.gens.insert(out.gens.end(), ib, b.gens.end());
    return out;
}

} // namespace

Scalar Scalar::from_terms(std::vector<EtaMonomial> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const EtaMonomial& a, const EtaMonomial& b) { return gens_less(a.gens, b.gens); });
    std::vector<EtaMonomial> canon;
    for (auto& t : terms) {
        if (!canon.empty() && canon.back().gens == t.gens) {
            canon.back().coeff += t.coeff;
            if (canon.back().coeff == 0) canon.pop_back();
        } else if (t.coeff != 0) {
            canon.push_back(std::move(t));
        }
    }
    Scalar s;
    s.terms_ = std::move(canon);
    return s;
}

Scalar Scalar::rational(Rational r) {
    Scalar s;
    if (r != 0) s.terms_.push_back(EtaMonomial{std::move(r), {}});
    return s;
}

Scalar Scalar::approx(double v) {
    Scalar s;
    s.approx_ = true;
    s.d_ = v;
    return s;
}

Scalar Scalar::sqrt_of_rational(const Rational& r, Mode mode) {
    if (r <= 0) throw std::domain_error("sqrt_of_rational: argument must be > 0");
    if (mode == Mode::Approx) return approx(std::sqrt(hspace::to_double(r)));
    return GeneratorRegistry::instance().sqrt(r);
}

Scalar::Kind Scalar::kind() const {
    if (approx_) return Kind::Approx;
    if (terms_.empty() || (terms_.size() == 1 && terms_[0].gens.empty()))
        return Kind::ExactRational;
    return Kind::ExactEtaSum;
}

bool Scalar::is_rational() const { return kind() == Kind::ExactRational; }

const Rational& Scalar::as_rational() const {
    static const Rational zero(0);
    if (kind() != Kind::ExactRational)
        throw std::logic_error("Scalar::as_rational: not a plain rational (" + str() + ")");
    return terms_.empty() ? zero : terms_[0].coeff;
}

double Scalar::as_approx() const {
    if (!approx_) throw std::logic_error("Scalar::as_approx: exact scalar");
    return d_;
}

double Scalar::to_double() const {
    if (approx_) return d_;
    double acc = 0.0;
    auto& reg = GeneratorRegistry::instance();
    for (const auto& t : terms_) {
        double term = hspace::to_double(t.coeff);
        for (std::uint32_t g : t.gens) term *= reg.sqrt_double_of(g);
        acc += term;
    }
    return acc;
}

Scalar::ZeroTest Scalar::zero_test(double approx_tol) const {
    if (approx_) return {std::abs(d_) <= approx_tol, true, std::abs(d_)};
    return {terms_.empty(), false, std::abs(to_double())};
}

int Scalar::sign() const {
    if (approx_) return d_ > 0 ? 1 : (d_ < 0 ? -1 : 0);
    if (terms_.empty()) return 0;
    int s = sgn(terms_[0].coeff);
    for (const auto& t : terms_)
        if (sgn(t.coeff) != s)
            throw std::logic_error("Scalar::sign: mixed-sign eta-sum, sign not decided (" + str() + ")");
    return s;
}

Scalar Scalar::operator-() const {
    if (approx_) return approx(-d_);
    Scalar s;
    s.terms_ = terms_;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_mode(*this, o, "add");
    if (approx_) return approx(d_ + o.d_);
    std::vector<EtaMonomial> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(terms));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_mode(*this, o, "mul");
    if (approx_) return approx(d_ * o.d_);
    std::vector<EtaMonomial> terms;
    terms.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) terms.push_back(mul_monomials(a, b));
    return from_terms(std::move(terms));
}

Scalar Scalar::inverse() const {
    if (approx_) {
        if (d_ == 0.0) throw std::domain_error("Scalar::inverse: division by zero");
        return approx(1.0 / d_);
    }
    if (terms_.empty()) throw std::domain_error("Scalar::inverse: division by zero");
    if (kind() == Kind::ExactRational)
        return rational(make_rational(terms_[0].coeff.get_den(), terms_[0].coeff.get_num()));
    if (terms_.size() == 1) {
        // 1 / (c * prod eta_i) = (1 / (c * prod eta_i^2)) * prod eta_i
        const auto& t = terms_[0];
        auto& reg = GeneratorRegistry::instance();
        Rational denom = t.coeff;
        for (std::uint32_t g : t.gens) denom *= reg.square_of(g);
        EtaMonomial mono;
        mono.coeff = make_rational(denom.get_den(), denom.get_num());
        mono.gens = t.gens;
        return from_terms({std::move(mono)});
    }
    // Conjugate away the highest generator g: with x = B + C*eta_g,
    // 1/x = (B - C*eta_g) / (B^2 - C^2*eta_g^2); the denominator is free of
    // eta_g and nonzero because the representation is faithful.
    std::uint32_t g = 0;
    for (const auto& t : terms_)
        for (std::uint32_t gen : t.gens) g = std::max(g, gen);
    std::vector<EtaMonomial> with, without;
    for (const auto& t : terms_) {
        if (std::find(t.gens.begin(), t.gens.end(), g) != t.gens.end()) {
            EtaMonomial stripped = t;
            stripped.gens.erase(std::find(stripped.gens.begin(), stripped.gens.end(), g));
            with.push_back(std::move(stripped));
        } else {
            without.push_back(t);
        }
    }
    const Scalar B = from_terms(std::move(without));
    const Scalar C = from_terms(std::move(with));
    const Scalar eta_g_sq = rational(GeneratorRegistry::instance().square_of(g));
    const Scalar denom = B * B - C * C * eta_g_sq;
    const Scalar denom_inv = denom.inverse();
    EtaMonomial eta_g;
    eta_g.coeff = Rational(1);
    eta_g.gens = {g};
    return (B - from_terms({eta_g}) * C) * denom_inv;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_mode(*this, o, "div");
    return *this * o.inverse();
}

bool Scalar::identical(const Scalar& o) const {
    if (approx_ != o.approx_) return false;
    if (approx_) return d_ == o.d_;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].gens != o.terms_[i].gens)
            return false;
    return true;
}

std::string Scalar::str() const {
    if (approx_) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", d_);
        return buf;
    }
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(t.coeff);
        for (std::uint32_t g : t.gens) os << "*eta(" << g << ")";
    }
    return os.str();
}

} // namespace hspace
