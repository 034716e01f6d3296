// factor.hpp : integer factorization and squarefree decomposition.
//
// The scalar kernel registers square roots of rationals as generators and
// needs each generator's squarefree kernel to certify that registered surds
// are multiplicatively independent.  Inputs in this artifact stay well under
// 128 bits, where trial division plus Pollard-Brent with a Miller-Rabin
// primality test finishes instantly.
#pragma once

#include "hspace/rational.hpp"

#include <map>
#include <vector>

namespace hspace {

// Prime factorization of n >= 1 as prime -> exponent.
std::map<Int, unsigned> factor(Int n);

// r = scale^2 * kernel with kernel a squarefree positive integer.
// Requires r > 0.
struct SquarefreeParts {
    Rational scale;
    Int kernel;
    std::vector<Int> kernel_primes; // sorted, each dividing kernel exactly once
};
SquarefreeParts squarefree_decompose(const Rational& r);

} // namespace hspace
