// sparse_vec.hpp : finitely supported coefficient vectors over l^2(Z+).
#pragma once

#include "hspace/scalar.hpp"

#include <cstdint>
#include <map>

namespace hspace {

// Entries are kept in index order; explicit zeros are never stored.  All
// entries share the vector's mode.
class SparseVec {
public:
    explicit SparseVec(Mode m = Mode::Exact) : mode_(m) {}

    static SparseVec unit(Mode m, std::uint32_t n) {
        SparseVec v(m);
        v.set(n, Scalar::one(m));
        return v;
    }

    Mode mode() const { return mode_; }
    std::size_t nnz() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    void set(std::uint32_t i, Scalar v);
    void add_to(std::uint32_t i, const Scalar& v) { set(i, get(i) + v); }

    Scalar get(std::uint32_t i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? Scalar::zero(mode_) : it->second;
    }

    // this += c * other
    void add_scaled(const SparseVec& other, const Scalar& c);

    SparseVec operator+(const SparseVec& o) const;
    SparseVec operator-(const SparseVec& o) const;
    SparseVec scaled(const Scalar& c) const;

    Scalar dot(const SparseVec& o) const;
    Scalar norm_sq() const { return dot(*this); }

    // exact structural equality (identical entries)
    bool identical(const SparseVec& o) const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::uint32_t max_index() const; // requires !empty()

    std::string str() const;

private:
    Mode mode_;
    std::map<std::uint32_t, Scalar> entries_;
};

} // namespace hspace
