// weights.hpp : weight sequences and the derived (eta, a, b) caches.
//
// A space is specified either by a weight sequence omega (from which eta is
// derived by the four-term reciprocal sum) or by giving eta directly.  The
// direct reciprocal choice eta_n = 1/(n+1) keeps every derived quantity
// rational, which is what makes the headline distance computations exact;
// the omega route exercises the monomial norm bound machinery.
#pragma once

#include "hspace/rational.hpp"
#include "hspace/scalar.hpp"

#include <cstddef>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

namespace hspace {

struct WeightSpec {
    enum class Kind { OmegaPower, OmegaList, EtaReciprocal, EtaList };

    Kind kind = Kind::OmegaPower;
    Rational alpha = Rational(2);   // OmegaPower: omega_n = (n+1)^alpha
    std::vector<Rational> values;   // OmegaList / EtaList

    // Analytic facts about the sequence.  Set automatically for built-ins;
    // custom lists carry whatever the caller asserts.
    bool summable_reciprocal = false; // sum 1/omega_n < inf (resp. sum eta_n^2 < inf)
    bool nth_root_limit_one = false;  // omega_n^{1/n} -> 1

    static WeightSpec omega_power(const Rational& alpha);
    static WeightSpec omega_list(std::vector<Rational> values, bool summable, bool nth_root_one);
    static WeightSpec eta_reciprocal();
    static WeightSpec eta_list(std::vector<Rational> values, bool summable, bool nth_root_one);

    bool omega_mode() const { return kind == Kind::OmegaPower || kind == Kind::OmegaList; }
    std::string kind_name() const;

    // omega_n; throws for eta-direct specs or beyond a finite list.
    Rational omega(std::size_t n) const;
    double omega_d(std::size_t n) const; // approx path; supports non-integer alpha

    // Largest index n for which eta_n^2 is computable (needs omega_{2n+3} in
    // omega mode).  numeric_limits<size_t>::max() when unbounded.
    std::size_t max_eta_index() const;
};

// The four-term sum 3/omega_{2n} + 1/omega_{2n-2} + 3/omega_{2n+1} + 1/omega_{2n+3},
// with the 1/omega_{2n-2} term omitted at n = 0.  Errors on eta-direct specs.
Rational eta_sq_from_omega(const WeightSpec& w, std::size_t n);
double eta_sq_from_omega_d(const WeightSpec& w, std::size_t n);

// Memoized eta_n^2, eta_n, a_n = 1/eta_n^2 and b_n = 1/(eta_n eta_{n-1})
// for one spec and mode.  Lazy extension is internally synchronized; a fully
// built cache can be shared freely across threads.
class SequenceCache {
public:
    SequenceCache(WeightSpec w, Mode mode);

    Mode mode() const { return mode_; }
    const WeightSpec& weights() const { return spec_; }

    // Exact rational eta_n^2.  Available in both modes whenever the spec is
    // rational-valued (always, except OmegaPower with non-integer alpha).
    const Rational& eta_sq_q(std::size_t n);
    double eta_sq_d(std::size_t n);

    Scalar eta(std::size_t n);  // sqrt of eta_sq, in the cache's mode
    Scalar a(std::size_t n);    // n >= 0
    Scalar b(std::size_t n);    // n >= 1

    // rational views used by the closed-form norm formulas (exact data)
    Rational a_q(std::size_t n);
    Rational b_sq_q(std::size_t n);

    std::size_t max_index() const { return spec_.max_eta_index(); }

private:
    void ensure_eta_sq(std::size_t n); // callers hold mu_

    WeightSpec spec_;
    Mode mode_;
    std::mutex mu_;
    std::vector<Rational> eta_sq_;
    std::vector<Scalar> eta_, a_, b_;
};

} // namespace hspace
