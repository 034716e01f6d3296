#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hspace/factor.hpp"
#include "hspace/scalar.hpp"

#include <random>
#include <thread>

using namespace hspace;

TEST_CASE("rational parsing and printing") {
    CHECK(rational_from_string("5/6") == make_rational(5, 6));
    CHECK(rational_from_string("-3/9") == make_rational(-1, 3));
    CHECK(rational_from_string("0.99") == make_rational(99, 100));
    CHECK(rational_from_string("-1.25") == make_rational(-5, 4));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(to_string(make_rational(10, 4)) == "5/2");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
}

TEST_CASE("squarefree decomposition") {
    auto p = squarefree_decompose(make_rational(3, 2)); // 3/2 = (1/2)^2 * 6
    CHECK(p.kernel == 6);
    CHECK(p.scale == make_rational(1, 2));

    p = squarefree_decompose(Rational(49));
    CHECK(p.kernel == 1);
    CHECK(p.scale == 7);

    p = squarefree_decompose(make_rational(61, 16)); // 61*16 = 976 = 4^2 * 61
    CHECK(p.kernel == 61);
    CHECK(p.scale == make_rational(4, 16));

    // a number needing Pollard rho: product of two 10-digit primes, squared
    Int big("1000000007");
    Int big2("1000000009");
    auto f = factor(big * big * big2);
    CHECK(f.at(big) == 2);
    CHECK(f.at(big2) == 1);
}

TEST_CASE("rational scalar arithmetic") {
    const Scalar a = Scalar::rational(make_rational(1, 2));
    const Scalar b = Scalar::rational(make_rational(1, 3));
    CHECK((a + b).as_rational() == make_rational(5, 6));
    CHECK((a * b).as_rational() == make_rational(1, 6));
    CHECK((a - a).is_zero());
    CHECK((a + Scalar()).identical(a)); // x + 0 = x
    CHECK((a * Scalar::one(Mode::Exact)).identical(a));
    CHECK(Scalar::rational(Rational(1)).is_zero() == false);
}

TEST_CASE("mixed mode arithmetic is rejected") {
    CHECK_THROWS_AS(Scalar::integer(1) + Scalar::approx(1.0), ModeMismatchError);
    CHECK_THROWS_AS(Scalar::approx(2.0) * Scalar::integer(3), ModeMismatchError);
}

TEST_CASE("approx zero test reports its regime") {
    auto zt = Scalar::approx(1e-15).zero_test(1e-12);
    CHECK(zt.zero);
    CHECK(zt.used_tolerance);
    zt = Scalar::approx(1e-3).zero_test(1e-12);
    CHECK_FALSE(zt.zero);
    zt = Scalar::integer(0).zero_test();
    CHECK(zt.zero);
    CHECK_FALSE(zt.used_tolerance);
}

TEST_CASE("sqrt of rational") {
    CHECK(Scalar::sqrt_of_rational(make_rational(1, 4), Mode::Exact).as_rational() ==
          make_rational(1, 2));
    const Scalar g = Scalar::sqrt_of_rational(make_rational(3, 2), Mode::Exact);
    CHECK(g.kind() == Scalar::Kind::ExactEtaSum);
    CHECK((g * g).as_rational() == make_rational(3, 2)); // fold rule
    CHECK(Scalar::sqrt_of_rational(Rational(2), Mode::Approx).as_approx() ==
          doctest::Approx(1.4142135623730951).epsilon(1e-16));
    CHECK_THROWS_AS(Scalar::sqrt_of_rational(Rational(0), Mode::Exact), std::domain_error);
    CHECK_THROWS_AS(Scalar::sqrt_of_rational(Rational(-2), Mode::Exact), std::domain_error);
}

TEST_CASE("1/eta0 - eta0 a0 vanishes for any rational eta0^2") {
    // with a0 = 1/eta0^2 both terms equal eta0/eta0^2
    for (long num : {5L, 7L, 61L}) {
        const Rational eta_sq = make_rational(num, 16);
        const Scalar eta = Scalar::sqrt_of_rational(eta_sq, Mode::Exact);
        const Scalar a0 = Scalar::rational(make_rational(16, num));
        CHECK((eta.inverse() - eta * a0).is_zero());
    }
}

TEST_CASE("distinct generators stay symbolic") {
    const Scalar g5 = Scalar::sqrt_of_rational(Rational(5), Mode::Exact);
    const Scalar g7 = Scalar::sqrt_of_rational(Rational(7), Mode::Exact);
    const Scalar prod = g5 * g7;
    CHECK(prod.kind() == Scalar::Kind::ExactEtaSum);
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms()[0].gens.size() == 2);
    CHECK((prod * prod).as_rational() == Rational(35));
}

TEST_CASE("multiplicatively dependent surds collapse") {
    // sqrt(8) = 2 sqrt(2)
    const Scalar s2 = Scalar::sqrt_of_rational(Rational(2), Mode::Exact);
    const Scalar s8 = Scalar::sqrt_of_rational(Rational(8), Mode::Exact);
    CHECK((s8 - Scalar::integer(2) * s2).is_zero());

    // sqrt(15) = sqrt(6) sqrt(10) / 2: a three-way dependency no pairwise
    // check would catch
    const Scalar s6 = Scalar::sqrt_of_rational(Rational(6), Mode::Exact);
    const Scalar s10 = Scalar::sqrt_of_rational(Rational(10), Mode::Exact);
    const Scalar s15 = Scalar::sqrt_of_rational(Rational(15), Mode::Exact);
    CHECK((Scalar::integer(2) * s15 - s6 * s10).is_zero());
    CHECK((s6 * s10 * s15).as_rational() == Rational(30));
}

TEST_CASE("memoized sqrt returns identical scalars") {
    const Scalar a = Scalar::sqrt_of_rational(make_rational(11, 3), Mode::Exact);
    const Scalar b = Scalar::sqrt_of_rational(make_rational(11, 3), Mode::Exact);
    CHECK(a.identical(b));
}

namespace {

Scalar random_scalar(std::mt19937_64& rng, const std::vector<Scalar>& gens) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Scalar acc = Scalar::rational(make_rational(coeff(rng), den(rng)));
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        Scalar mono = Scalar::rational(make_rational(coeff(rng), den(rng)));
        const int factors = static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) mono = mono * gens[pick(rng)];
        acc = acc + mono;
    }
    return acc;
}

} // namespace

TEST_CASE("field axioms on random eta-sums") {
    std::mt19937_64 rng(20240613);
    std::vector<Scalar> gens = {
        Scalar::sqrt_of_rational(Rational(2), Mode::Exact),
        Scalar::sqrt_of_rational(Rational(3), Mode::Exact),
        Scalar::sqrt_of_rational(make_rational(5, 7), Mode::Exact),
    };
    for (int i = 0; i < 200; ++i) {
        const Scalar a = random_scalar(rng, gens);
        const Scalar b = random_scalar(rng, gens);
        const Scalar c = random_scalar(rng, gens);
        CHECK(((a + b) + c - (a + (b + c))).is_zero());
        CHECK(((a * b) * c - (a * (b * c))).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK((a + b - (b + a)).is_zero());
        CHECK((a * b - b * a).is_zero());
        if (!a.is_zero()) {
            CHECK((a * a.inverse() - Scalar::one(Mode::Exact)).is_zero());
            CHECK((a / a - Scalar::one(Mode::Exact)).is_zero());
        }
    }
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937_64 rng(7);
    std::vector<Scalar> gens = {
        Scalar::sqrt_of_rational(Rational(2), Mode::Exact),
        Scalar::sqrt_of_rational(Rational(3), Mode::Exact),
    };
    for (int i = 0; i < 100; ++i) {
        const Scalar a = random_scalar(rng, gens);
        // rebuilding from the canonical terms must reproduce the value bit
        // for bit
        Scalar rebuilt = Scalar::zero(Mode::Exact);
        for (const auto& t : a.terms()) {
            Scalar mono = Scalar::rational(t.coeff);
            for (auto g : t.gens)
                mono = mono * Scalar::sqrt_of_rational(GeneratorRegistry::instance().square_of(g),
                                                       Mode::Exact);
            rebuilt = rebuilt + mono;
        }
        CHECK(rebuilt.identical(a));
    }
}

TEST_CASE("cross-mode agreement of random expressions") {
    std::mt19937_64 rng(99);
    std::vector<Scalar> gens = {
        Scalar::sqrt_of_rational(Rational(2), Mode::Exact),
        Scalar::sqrt_of_rational(make_rational(7, 3), Mode::Exact),
    };
    for (int i = 0; i < 100; ++i) {
        const Scalar a = random_scalar(rng, gens);
        const Scalar b = random_scalar(rng, gens);
        const double exact_val = (a * b + a - b).to_double();
        const Scalar aa = Scalar::approx(a.to_double());
        const Scalar bb = Scalar::approx(b.to_double());
        const double approx_val = (aa * bb + aa - bb).as_approx();
        CHECK(std::abs(exact_val - approx_val) <=
              1e-9 * std::max({1.0, std::abs(exact_val), std::abs(approx_val)}));
    }
}

TEST_CASE("sign of uniform-sign sums") {
    const Scalar g = Scalar::sqrt_of_rational(Rational(2), Mode::Exact);
    CHECK((Scalar::integer(3) + g).sign() == 1);
    CHECK((Scalar::integer(-3) - g).sign() == -1);
    CHECK(Scalar().sign() == 0);
    CHECK_THROWS_AS((Scalar::integer(3) - g).sign(), std::logic_error);
}

TEST_CASE("serialization") {
    CHECK(Scalar::rational(make_rational(5, 6)).str() == "5/6");
    CHECK(Scalar().str() == "0");
    const Scalar g = Scalar::sqrt_of_rational(make_rational(3, 2), Mode::Exact);
    const std::string s = (Scalar::rational(make_rational(1, 2)) * g).str();
    CHECK(s.find("1/2*eta(") == 0);
    CHECK(Scalar::approx(0.5).str() == "0.5");
}

TEST_CASE("registry registration is thread safe") {
    std::vector<std::thread> workers;
    std::atomic<bool> failed{false};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &failed] {
            for (long i = 0; i < 50; ++i) {
                const Rational r = make_rational(1000003 + (t * 50 + i) % 37, 1 + (i % 5));
                const Scalar s = Scalar::sqrt_of_rational(r, Mode::Exact);
                if (!(s * s - Scalar::rational(r)).is_zero()) failed = true;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK_FALSE(failed.load());
}
