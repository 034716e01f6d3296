// index_map.hpp : basis-index to exponent/frequency maps.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hspace {

// sigma in J(x) = sum_n <x,y_n>/||y_n|| z^{sigma(n)}.  Identity for the core
// space; a parity-respecting permutation of Z+ for support variants; the
// fixed bijection 2j+1 -> j, 2j -> -(j+1) onto Z for the Fourier embedding.
class IndexMap {
public:
    enum class Kind { Identity, PermutationZplus, BijectionToZ };

    static IndexMap identity();
    static IndexMap permutation(std::vector<std::int64_t> forward);
    static IndexMap bijection_to_z();

    Kind kind() const { return kind_; }
    std::string kind_name() const;

    // sigma(n); permutation maps throw past their built bound
    std::int64_t forward(std::size_t n) const;
    std::optional<std::size_t> inverse(std::int64_t k) const;

    // largest argument the map is built for (SIZE_MAX when closed-form)
    std::size_t bound() const { return bound_; }

private:
    Kind kind_ = Kind::Identity;
    std::size_t bound_;
    std::vector<std::int64_t> forward_;
    std::unordered_map<std::int64_t, std::size_t> inverse_;
};

} // namespace hspace
