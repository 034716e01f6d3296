#include "hspace/mbasis.hpp"

#include <cmath>
#include <stdexcept>

namespace hspace {

SparseVec x_vec(SequenceCache& cache, std::size_t n) {
    const Mode mode = cache.mode();
    SparseVec v(mode);
    if (n % 2 == 0) {
        v.set(static_cast<std::uint32_t>(n), Scalar::one(mode));
        return v;
    }
    const std::size_t m = n / 2;
    v.set(static_cast<std::uint32_t>(2 * m + 1), Scalar::one(mode));
    v.set(static_cast<std::uint32_t>(2 * m), -cache.a(m));
    if (m >= 1) v.set(static_cast<std::uint32_t>(2 * m - 2), cache.b(m)); // e_{-2} := 0
    return v;
}

SparseVec y_vec(SequenceCache& cache, std::size_t n) {
    const Mode mode = cache.mode();
    SparseVec v(mode);
    if (n % 2 == 1) {
        v.set(static_cast<std::uint32_t>(n), Scalar::one(mode));
        return v;
    }
    const std::size_t m = n / 2;
    v.set(static_cast<std::uint32_t>(2 * m), Scalar::one(mode));
    v.set(static_cast<std::uint32_t>(2 * m + 1), cache.a(m));
    v.set(static_cast<std::uint32_t>(2 * m + 3), -cache.b(m + 1));
    return v;
}

SparseVec reconstruct_e(SequenceCache& cache, std::size_t n, BasisFamily family) {
    const Mode mode = cache.mode();
    SparseVec coeffs(mode);
    const std::size_t m = n / 2;
    if (family == BasisFamily::X) {
        if (n % 2 == 0) {
            coeffs.set(static_cast<std::uint32_t>(n), Scalar::one(mode));
        } else {
            // e_{2m+1} = x_{2m+1} + a_m x_{2m} - b_m x_{2m-2}
            coeffs.set(static_cast<std::uint32_t>(2 * m + 1), Scalar::one(mode));
            coeffs.set(static_cast<std::uint32_t>(2 * m), cache.a(m));
            if (m >= 1) coeffs.set(static_cast<std::uint32_t>(2 * m - 2), -cache.b(m));
        }
    } else {
        if (n % 2 == 1) {
            coeffs.set(static_cast<std::uint32_t>(n), Scalar::one(mode));
        } else {
            // e_{2m} = y_{2m} - a_m y_{2m+1} + b_{m+1} y_{2m+3}
            coeffs.set(static_cast<std::uint32_t>(2 * m), Scalar::one(mode));
            coeffs.set(static_cast<std::uint32_t>(2 * m + 1), -cache.a(m));
            coeffs.set(static_cast<std::uint32_t>(2 * m + 3), cache.b(m + 1));
        }
    }

    // expand and verify the combination reproduces e_n
    SparseVec expanded(mode);
    for (const auto& [k, c] : coeffs) {
        SparseVec basis_k = family == BasisFamily::X ? x_vec(cache, k) : y_vec(cache, k);
        expanded.add_scaled(basis_k, c);
    }
    SparseVec diff = expanded - SparseVec::unit(mode, static_cast<std::uint32_t>(n));
    for (const auto& [k, c] : diff) {
        bool bad = mode == Mode::Exact ? !c.is_zero() : std::abs(c.as_approx()) > 1e-9;
        if (bad)
            throw std::logic_error("reconstruct_e: expansion does not reproduce e_" + std::to_string(n) +
                                   " (residual at e_" + std::to_string(k) + " = " + c.str() + ")");
    }
    return coeffs;
}

BiorthReport check_biorthogonality(SequenceCache& cache, std::size_t N) {
    const Mode mode = cache.mode();
    BiorthReport report;
    report.max_abs_deviation = Scalar::zero(mode);
    report.exact_zero = true;
    double worst = -1.0;

    std::vector<SparseVec> xs, ys;
    xs.reserve(N + 1);
    ys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        xs.push_back(x_vec(cache, n));
        ys.push_back(y_vec(cache, n));
    }
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= N; ++m) {
            Scalar dev = xs[n].dot(ys[m]) - (n == m ? Scalar::one(mode) : Scalar::zero(mode));
            if (mode == Mode::Exact) {
                if (!dev.is_zero()) {
                    report.exact_zero = false;
                    const double mag = std::abs(dev.to_double());
                    if (mag > worst) {
                        worst = mag;
                        report.max_abs_deviation = dev;
                        report.worst_n = n;
                        report.worst_m = m;
                    }
                }
            } else {
                const double mag = std::abs(dev.as_approx());
                if (mag > worst) {
                    worst = mag;
                    report.max_abs_deviation = Scalar::approx(mag);
                    report.worst_n = n;
                    report.worst_m = m;
                }
                report.exact_zero = false;
            }
        }
    }
    if (mode == Mode::Exact && report.exact_zero) report.max_abs_deviation = Scalar::zero(mode);
    return report;
}

Scalar norm_sq_x(SequenceCache& cache, std::size_t n) {
    if (cache.mode() == Mode::Approx) {
        if (n % 2 == 0) return Scalar::approx(1.0);
        const std::size_t m = n / 2;
        const double a = cache.a(m).as_approx();
        double s = 1.0 + a * a;
        if (m >= 1) {
            const double b = cache.b(m).as_approx();
            s += b * b;
        }
        return Scalar::approx(s);
    }
    return Scalar::rational(norm_sq_x_q(cache, n));
}

Rational norm_sq_x_q(SequenceCache& cache, std::size_t n) {
    if (n % 2 == 0) return Rational(1);
    const std::size_t m = n / 2;
    Rational s = Rational(1) + cache.a_q(m) * cache.a_q(m);
    if (m >= 1) s += cache.b_sq_q(m);
    s.canonicalize();
    return s;
}

Scalar norm_sq_y(SequenceCache& cache, std::size_t n) {
    if (cache.mode() == Mode::Approx) {
        if (n % 2 == 1) return Scalar::approx(1.0);
        const std::size_t m = n / 2;
        const double a = cache.a(m).as_approx();
        const double b = cache.b(m + 1).as_approx();
        return Scalar::approx(1.0 + a * a + b * b);
    }
    return Scalar::rational(norm_sq_y_q(cache, n));
}

Rational norm_sq_y_q(SequenceCache& cache, std::size_t n) {
    if (n % 2 == 1) return Rational(1);
    const std::size_t m = n / 2;
    Rational s = Rational(1) + cache.a_q(m) * cache.a_q(m) + cache.b_sq_q(m + 1);
    s.canonicalize();
    return s;
}

} // namespace hspace
