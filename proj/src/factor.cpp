#include "hspace/factor.hpp"

#include <stdexcept>
#include <vector>

namespace hspace {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 100000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p <= limit; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= limit; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

bool is_prime(const Int& n) {
    // 40 Miller-Rabin rounds on top of GMP's BPSW-style test; no composite
    // below 2^64 passes, and our inputs stay far smaller than that squared.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Pollard-Brent rho; returns a nontrivial factor of composite odd n.
Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xB5297A4DUL);
    while (true) {
        Int y = rng.get_z_range(n - 1) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int g = 1, x, ys;
        Int q = 1;
        unsigned long m = 128, r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long bound = std::min(m, r - k);
                for (unsigned long i = 0; i < bound; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one squaring at a time
            do {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        std::map<Int, unsigned> half;
        factor_into(root, half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<Int, unsigned> factor(Int n) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    std::map<Int, unsigned> out;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

SquarefreeParts squarefree_decompose(const Rational& r) {
    if (r <= 0) throw std::domain_error("squarefree_decompose: argument must be > 0");
    // r = p/q = (p*q)/q^2, so sqrt(r) = sqrt(p*q)/q.
    const Int m = r.get_num() * r.get_den();
    SquarefreeParts parts;
    parts.kernel = 1;
    Int even_part = 1;
    for (const auto& [p, e] : factor(m)) {
        if (e % 2 == 1) {
            parts.kernel *= p;
            parts.kernel_primes.push_back(p);
        }
        if (e / 2 > 0) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
            even_part *= pk;
        }
    }
    parts.scale = make_rational(even_part, r.get_den());
    return parts;
}

} // namespace hspace
