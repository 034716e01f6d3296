#include "hspace/rational.hpp"

#include <stdexcept>

namespace hspace {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: '" + s + "'");
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
        r.canonicalize();
        return r;
    }
    // decimal form: sign, integer part, fractional part
    const std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos || frac.empty())
        throw std::invalid_argument("bad decimal literal: '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    std::string intpart = neg || (!head.empty() && head[0] == '+') ? head.substr(1) : head;
    if (intpart.empty()) intpart = "0";
    if (intpart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: '" + s + "'");

    Int ip(intpart), fp(frac), den(1);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
    Rational r = make_rational(ip * den + fp, den);
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    const bool inv = e < 0;
    const unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    if (inv && r == 0) throw std::domain_error("0 raised to a negative power");
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), k);
    return inv ? make_rational(den, num) : make_rational(num, den);
}

bool rational_sqrt_exact(const Rational& r, Rational& root) {
    if (r < 0) return false;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return false;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    root = make_rational(n, d);
    return true;
}

double to_double(const Rational& r) { return r.get_d(); }

} // namespace hspace
