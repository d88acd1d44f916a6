#pragma once
#include "bhlink/arith.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>

namespace bhlink {

// Element of the rational group ring spanned by the symbols L_n, where L_n
// stands for the divisor of t^n - 1 and L_a * L_b = gcd(a,b) L_lcm(a,b).
class CyclotomicDivisor {
public:
    using Terms = std::map<Integer, Rational>;

    CyclotomicDivisor() = default;
    static CyclotomicDivisor lambda(const Integer& n, const Rational& coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    Rational coefficient(const Integer& n) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_integral() const;

    CyclotomicDivisor& operator+=(const CyclotomicDivisor& rhs);
    CyclotomicDivisor& operator-=(const CyclotomicDivisor& rhs);
    CyclotomicDivisor& operator*=(const Rational& scalar);

    friend CyclotomicDivisor operator+(CyclotomicDivisor a, const CyclotomicDivisor& b) { return a += b; }
    friend CyclotomicDivisor operator-(CyclotomicDivisor a, const CyclotomicDivisor& b) { return a -= b; }
    friend CyclotomicDivisor operator*(CyclotomicDivisor a, const Rational& s) { return a *= s; }
    friend CyclotomicDivisor operator*(const CyclotomicDivisor& a, const CyclotomicDivisor& b);
    friend bool operator==(const CyclotomicDivisor& a, const CyclotomicDivisor& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Integer& n, const Rational& c);
    Terms terms_;
};

CyclotomicDivisor lambda_product(const Integer& a, const Integer& b);
CyclotomicDivisor multiply(const CyclotomicDivisor& a, const CyclotomicDivisor& b);

struct LinkFactor {
    Integer u;
    Integer v;
};

// prod_i ((1/v_i) L_{u_i} - L_1); throws NonIntegralExpansion unless integral.
CyclotomicDivisor expand_link_divisor(std::span<const LinkFactor> factors);

// The rank of H_{n-1}: the coefficient of L_1 in an integral divisor.
Integer coefficient_sum(const CyclotomicDivisor& d);
// Degree of the polynomial prod (t^j - 1)^{a_j}.
Integer root_count(const CyclotomicDivisor& d);
// |Delta(1)| when the divisor has no root at 1, else 0.
Integer delta_order_at_one(const CyclotomicDivisor& d);
// Exact value of prod (t^j - 1)^{a_j} at t, taking limits where factors
// cancel. Throws PoleAtT when the net order at t is negative.
Rational delta_eval(const CyclotomicDivisor& d, const Rational& t);

std::string to_string(const CyclotomicDivisor& d);
std::ostream& operator<<(std::ostream& os, const CyclotomicDivisor& d);

}  // namespace bhlink
