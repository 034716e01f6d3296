#include "hspace/index_map.hpp"

#include <limits>
#include <stdexcept>

namespace hspace {

IndexMap IndexMap::identity() {
    IndexMap m;
    m.kind_ = Kind::Identity;
    m.bound_ = std::numeric_limits<std::size_t>::max();
    return m;
}

IndexMap IndexMap::bijection_to_z() {
    IndexMap m;
    m.kind_ = Kind::BijectionToZ;
    m.bound_ = std::numeric_limits<std::size_t>::max();
    return m;
}

IndexMap IndexMap::permutation(std::vector<std::int64_t> forward) {
    IndexMap m;
    m.kind_ = Kind::PermutationZplus;
    m.forward_ = std::move(forward);
    m.bound_ = m.forward_.empty() ? 0 : m.forward_.size() - 1;
    for (std::size_t n = 0; n < m.forward_.size(); ++n) {
        if (m.forward_[n] < 0) throw std::invalid_argument("permutation values must be >= 0");
        auto [it, fresh] = m.inverse_.emplace(m.forward_[n], n);
        if (!fresh) throw std::invalid_argument("permutation values must be distinct");
    }
    return m;
}

std::string IndexMap::kind_name() const {
    switch (kind_) {
        case Kind::Identity: return "identity";
        case Kind::PermutationZplus: return "permutation";
        case Kind::BijectionToZ: return "bijection_to_z";
    }
    return "?";
}

std::int64_t IndexMap::forward(std::size_t n) const {
    switch (kind_) {
        case Kind::Identity:
            return static_cast<std::int64_t>(n);
        case Kind::BijectionToZ:
            // odd 2j+1 -> j, even 2j -> -(j+1)
            return n % 2 == 1 ? static_cast<std::int64_t>(n / 2)
                              : -static_cast<std::int64_t>(n / 2) - 1;
        case Kind::PermutationZplus:
            if (n >= forward_.size())
                throw std::out_of_range("sigma built up to argument " + std::to_string(bound_) +
                                        ", requested " + std::to_string(n));
            return forward_[n];
    }
    throw std::logic_error("unreachable");
}

std::optional<std::size_t> IndexMap::inverse(std::int64_t k) const {
    switch (kind_) {
        case Kind::Identity:
            if (k < 0) return std::nullopt;
            return static_cast<std::size_t>(k);
        case Kind::BijectionToZ:
            return k >= 0 ? static_cast<std::size_t>(2 * k + 1)
                          : static_cast<std::size_t>(2 * (-k - 1));
        case Kind::PermutationZplus: {
            auto it = inverse_.find(k);
            if (it == inverse_.end()) return std::nullopt;
            return it->second;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace hspace
