#include "bhlink/arith.hpp"

#include <stdexcept>

namespace bhlink {

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd_of(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& v : values) g = gcd(g, v);
    return g;
}

Integer lcm_of(std::span<const Integer> values) {
    Integer l = 1;
    for (const auto& v : values) l = lcm(l, v);
    return l;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool divides(const Integer& a, const Integer& b) {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Rational power(const Rational& base, const Integer& exponent) {
    if (Integer mag = abs(exponent); !mag.fits_ulong_p())
        throw std::overflow_error("exponent too large");
    bool negative = exponent < 0;
    unsigned long e = negative ? Integer(-exponent).get_ui() : exponent.get_ui();
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    if (negative) {
        if (num == 0) throw std::domain_error("zero to a negative power");
        return make_rational(den, num);
    }
    return make_rational(num, den);
}

std::optional<std::int64_t> to_int64(const Integer& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return std::nullopt;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

}  // namespace bhlink
