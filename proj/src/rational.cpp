#include "rahman/rational.hpp"

#include "rahman/errors.hpp"

#include <cctype>

namespace rahman {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw ParseError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }

    Rational q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0) {
        throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    return r; // canonical in, canonical out: gcd(n^e, d^e) == 1
}

Rational abs(const Rational& q)
{
    return q < 0 ? Rational(-q) : q;
}

double to_double(const Rational& q)
{
    return q.get_d();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial_coefficient(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace rahman
