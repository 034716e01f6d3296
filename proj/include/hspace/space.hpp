// space.hpp : the space H = J(l^2) realized through coordinates.
//
// J(x)(z) = sum_n <x,y_n>/||y_n|| z^{sigma(n)}, an isometry of l^2 onto H
// with the inner product inherited from l^2.  The monomial z^k pulls back to
// ||y_n|| x_n at n = sigma^{-1}(k).  In the Fourier embedding the n-th
// generator additionally carries a 2^{-n} damping on its L^2(T) image; the
// H inner product is unaffected.
#pragma once

#include "hspace/index_map.hpp"
#include "hspace/mbasis.hpp"
#include "hspace/sparse_vec.hpp"
#include "hspace/weights.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hspace {

struct SpaceOptions {
    double zero_tol = 1e-12;       // approx-mode zero test
    double pivot_drop_tol = 1e-12; // approx-mode Gram pivot drop
};

class SpaceHandle {
public:
    SpaceHandle(WeightSpec w, Mode mode, IndexMap sigma = IndexMap::identity(),
                bool fourier_damping = false, SpaceOptions opts = {})
        : mode_(mode),
          sigma_(std::move(sigma)),
          damping_(fourier_damping),
          opts_(opts),
          cache_(std::make_shared<SequenceCache>(std::move(w), mode)) {}

    Mode mode() const { return mode_; }
    const IndexMap& sigma() const { return sigma_; }
    bool damping() const { return damping_; }
    const SpaceOptions& options() const { return opts_; }
    SequenceCache& cache() const { return *cache_; }
    const WeightSpec& weights() const { return cache_->weights(); }
    bool same_space(const SpaceHandle& o) const { return cache_ == o.cache_; }

    // basis index carrying exponent/frequency k; throws if k is outside
    // the built range of sigma
    std::size_t basis_index_of(std::int64_t k) const;
    // 2^n in Fourier-damped spaces, 1 otherwise
    Scalar damping_factor(std::size_t n) const;

private:
    Mode mode_;
    IndexMap sigma_;
    bool damping_;
    SpaceOptions opts_;
    std::shared_ptr<SequenceCache> cache_;
};

// An element of H as its l^2 representative plus a declared bound on the
// l^2 norm of whatever was truncated away.  Taylor coefficients are derived
// lazily and cached (lock-guarded, so concurrent fills are safe).
class HFunction {
public:
    HFunction(const SpaceHandle& space, SparseVec coords, double tail_bound = 0.0);

    const SparseVec& coords() const { return coords_; }
    double tail_bound() const { return tail_bound_; }
    Scalar norm_sq() const { return coords_.norm_sq(); }

    Scalar taylor_cached(std::int64_t degree, const std::function<Scalar()>& compute) const;

private:
    SparseVec coords_;
    double tail_bound_;
    mutable std::mutex mu_;
    mutable std::map<std::int64_t, Scalar> taylor_;
};

// l^2 representative of the monomial with exponent (or frequency) k.
SparseVec monomial_coords(const SpaceHandle& space, std::int64_t k);

// Representative of sum_k c_k z^k from a finite Taylor coefficient map.
SparseVec polynomial_coords(const SpaceHandle& space, const std::map<std::int64_t, Scalar>& taylor);

// Coefficient of z^k (or frequency k): <coords, y_n> / (||y_n|| 2^{n dampening}).
Scalar taylor_of(const SpaceHandle& space, const HFunction& f, std::int64_t k);

Scalar inner_product_H(const SpaceHandle& space, const HFunction& f, const HFunction& g);

// Largest exponent with a potentially nonzero Taylor coefficient (the y_n
// supports overlapping coords are finitely many).  Identity/permutation maps
// only; nullopt for the empty function.
std::optional<std::int64_t> max_taylor_degree(const SpaceHandle& space, const HFunction& f);
std::vector<std::size_t> overlapping_basis_indices(const SpaceHandle& space, const SparseVec& coords);

struct NormCheckRow {
    std::int64_t degree;            // sigma(n)
    std::string norm_sq_exact;      // ||z^degree||_H^2
    double norm;                    // ||z^degree||_H
    double bound;                   // 1 + omega_n (NaN when not claimed)
    bool has_bound;
    bool pass;                      // exact comparison norm^2 <= (1+omega_n)^2
};
// Checks ||z^{sigma(n)}||_H <= 1 + omega_n for n <= N.  For eta-direct
// specs no bound is claimed and rows are informational.
std::vector<NormCheckRow> monomial_norm_check(const SpaceHandle& space, std::size_t N);

struct EvalResult {
    std::complex<double> value;
    double error_bound;
    std::size_t degree_used;
};
// Partial Taylor sum at |z| < 1 with the rigorous tail estimate
// ||x|| |z|^{D+1}/(1-|z|) plus the declared truncation tail.
EvalResult eval_at(const SpaceHandle& space, const HFunction& f, std::complex<double> z,
                   double accuracy = 1e-12);

} // namespace hspace
