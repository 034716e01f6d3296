// scalar.hpp : two-mode scalar kernel.
//
// Exact scalars live in the field Q(eta_0, eta_1, ...) where each generator
// eta_i is the square root of a registered positive rational.  An exact value
// is a canonical finite sum of monomials c * eta_{i1}*...*eta_{ik} with
// distinct generator indices; even powers fold into the rational coefficient
// through the registered squares.  The registry only ever hands out
// generators whose squarefree kernels are multiplicatively independent, so
// the representation is faithful: a value is zero iff its canonical form is
// empty, and every nonzero value is invertible.  Approx scalars are plain
// binary64; mixing the two modes is an error, never a coercion.
#pragma once

#include "hspace/errors.hpp"
#include "hspace/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hspace {

enum class Mode { Exact, Approx };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "approx"; }

// One canonical term: coeff * prod_{i in gens} eta_i, gens sorted and
// distinct, coeff != 0.
struct EtaMonomial {
    Rational coeff;
    std::vector<std::uint32_t> gens;
};

class Scalar {
public:
    enum class Kind { ExactRational, ExactEtaSum, Approx };

    Scalar() = default; // exact zero

    static Scalar rational(Rational r);
    static Scalar integer(long v) { return rational(Rational(v)); }
    static Scalar approx(double v);
    static Scalar zero(Mode m) { return m == Mode::Exact ? Scalar() : approx(0.0); }
    static Scalar one(Mode m) { return m == Mode::Exact ? integer(1) : approx(1.0); }

    // sqrt(r), r > 0.  Exact mode returns a rational for perfect squares and
    // otherwise a monomial over registered generators (a fresh generator when
    // the kernel is independent of everything registered so far).
    static Scalar sqrt_of_rational(const Rational& r, Mode mode);

    Mode mode() const { return approx_ ? Mode::Approx : Mode::Exact; }
    Kind kind() const;
    bool is_exact() const { return !approx_; }
    bool is_rational() const;
    const Rational& as_rational() const; // requires kind()==ExactRational
    double as_approx() const;            // requires Approx
    const std::vector<EtaMonomial>& terms() const { return terms_; }

    double to_double() const;

    struct ZeroTest {
        bool zero;
        bool used_tolerance; // true only on the Approx path
        double magnitude;
    };
    ZeroTest zero_test(double approx_tol = 1e-12) const;
    bool is_zero(double approx_tol = 1e-12) const { return zero_test(approx_tol).zero; }

    // Sign as a real number.  Defined for rationals and for eta-sums whose
    // coefficients all share one sign (generators are positive reals).
    int sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const; // exact: field inverse; approx: 1/x

    // Exact structural equality in exact mode, bitwise in approx mode.
    bool identical(const Scalar& o) const;

    // "p/q", "p/q*eta(i)*eta(j) + ...", or a decimal for approx values.
    std::string str() const;

private:
    friend class GeneratorRegistry;
    static Scalar from_terms(std::vector<EtaMonomial> terms);

    bool approx_ = false;
    double d_ = 0.0;
    // canonical: sorted by gens (lexicographic), unique gens, no zero coeffs;
    // empty == zero; a single term with empty gens == plain rational
    std::vector<EtaMonomial> terms_;
};

// Process-wide append-only registry of surd generators.  Thread-safe: reads
// are shared, registration is exclusive, and generator data is immutable
// once published.
class GeneratorRegistry {
public:
    static GeneratorRegistry& instance();

    // sqrt(r) for r > 0, canonicalized over the registered generators.
    Scalar sqrt(const Rational& r);

    Rational square_of(std::uint32_t id) const;
    double sqrt_double_of(std::uint32_t id) const;
    std::size_t size() const;

private:
    GeneratorRegistry() = default;
    struct Impl;
    Impl& impl() const;
};

} // namespace hspace
