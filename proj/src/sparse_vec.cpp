#include "hspace/sparse_vec.hpp"

#include <sstream>

namespace hspace {

namespace {
void require_same_mode(const SparseVec& a, const SparseVec& b, const char* op) {
    if (a.mode() != b.mode())
        throw ModeMismatchError(std::string("sparse vec ") + op + ": " + mode_name(a.mode()) +
                                " vs " + mode_name(b.mode()));
}
} // namespace

void SparseVec::set(std::uint32_t i, Scalar v) {
    if (v.mode() != mode_)
        throw ModeMismatchError("sparse vec set: entry mode does not match vector mode");
    // drop exact zeros only; approx entries are kept unless exactly 0.0
    bool drop = v.is_exact() ? v.is_zero() : v.as_approx() == 0.0;
    if (drop)
        entries_.erase(i);
    else
        entries_[i] = std::move(v);
}

void SparseVec::add_scaled(const SparseVec& other, const Scalar& c) {
    require_same_mode(*this, other, "axpy");
    if (c.mode() != mode_) throw ModeMismatchError("sparse vec axpy: scalar mode mismatch");
    for (const auto& [i, v] : other.entries_) set(i, get(i) + c * v);
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
    SparseVec out = *this;
    out.add_scaled(o, Scalar::one(mode_));
    return out;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
    SparseVec out = *this;
    out.add_scaled(o, -Scalar::one(mode_));
    return out;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
    SparseVec out(mode_);
    out.add_scaled(*this, c);
    return out;
}

Scalar SparseVec::dot(const SparseVec& o) const {
    require_same_mode(*this, o, "dot");
    Scalar acc = Scalar::zero(mode_);
    auto ia = entries_.begin();
    auto ib = o.entries_.begin();
    while (ia != entries_.end() && ib != o.entries_.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

bool SparseVec::identical(const SparseVec& o) const {
    if (mode_ != o.mode_ || entries_.size() != o.entries_.size()) return false;
    auto ib = o.entries_.begin();
    for (const auto& [i, v] : entries_) {
        if (i != ib->first || !v.identical(ib->second)) return false;
        ++ib;
    }
    return true;
}

std::uint32_t SparseVec::max_index() const {
    if (entries_.empty()) throw std::logic_error("max_index of empty vector");
    return entries_.rbegin()->first;
}

std::string SparseVec::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, v] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << "e" << i << ": " << v.str();
    }
    os << "}";
    return os.str();
}

} // namespace hspace
