#include "bhlink/divisor.hpp"

#include "bhlink/errors.hpp"

#include <ostream>
#include <sstream>

namespace bhlink {

namespace {

// Exponents past this bound make direct evaluation impractical.
const Integer kMaxDirectIndex = Integer(1) << 22;

void require_index(const Integer& n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "divisor index must be positive, got " + to_string(n));
}

void require_integral(const CyclotomicDivisor& d, const char* op) {
    if (!d.is_integral())
        throw Error(ErrorKind::PreconditionFailed, std::string(op) + " needs an integral divisor");
}

}  // namespace

CyclotomicDivisor CyclotomicDivisor::lambda(const Integer& n, const Rational& coeff) {
    require_index(n);
    CyclotomicDivisor d;
    d.add_term(n, coeff);
    return d;
}

Rational CyclotomicDivisor::coefficient(const Integer& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool CyclotomicDivisor::is_integral() const {
    for (const auto& [n, c] : terms_)
        if (!bhlink::is_integer(c)) return false;
    return true;
}

void CyclotomicDivisor::add_term(const Integer& n, const Rational& coeff) {
    Rational c = coeff;
    c.canonicalize();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CyclotomicDivisor& CyclotomicDivisor::operator+=(const CyclotomicDivisor& rhs) {
    for (const auto& [n, c] : rhs.terms_) add_term(n, c);
    return *this;
}

CyclotomicDivisor& CyclotomicDivisor::operator-=(const CyclotomicDivisor& rhs) {
    for (const auto& [n, c] : rhs.terms_) add_term(n, -c);
    return *this;
}

CyclotomicDivisor& CyclotomicDivisor::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, c] : terms_) c *= scalar;
    return *this;
}

CyclotomicDivisor operator*(const CyclotomicDivisor& a, const CyclotomicDivisor& b) {
    CyclotomicDivisor out;
    for (const auto& [m, cm] : a.terms_)
        for (const auto& [n, cn] : b.terms_) {
            Rational c = cm * cn * Rational(gcd(m, n));
            out.add_term(lcm(m, n), c);
        }
    return out;
}

CyclotomicDivisor lambda_product(const Integer& a, const Integer& b) {
    require_index(a);
    require_index(b);
    return CyclotomicDivisor::lambda(lcm(a, b), Rational(gcd(a, b)));
}

CyclotomicDivisor multiply(const CyclotomicDivisor& a, const CyclotomicDivisor& b) { return a * b; }

CyclotomicDivisor expand_link_divisor(std::span<const LinkFactor> factors) {
    CyclotomicDivisor acc = CyclotomicDivisor::lambda(1);
    for (const auto& f : factors) {
        if (f.u < 1 || f.v < 1)
            throw Error(ErrorKind::InvalidInput, "link factor needs positive u and v");
        CyclotomicDivisor factor = CyclotomicDivisor::lambda(f.u, make_rational(1, f.v)) - CyclotomicDivisor::lambda(1);
        acc = acc * factor;
    }
    if (!acc.is_integral())
        throw Error(ErrorKind::NonIntegralExpansion, "link divisor " + to_string(acc) + " has fractional coefficients");
    return acc;
}

Integer coefficient_sum(const CyclotomicDivisor& d) {
    require_integral(d, "coefficient_sum");
    Integer s = 0;
    for (const auto& [n, c] : d.terms()) s += c.get_num();
    return s;
}

Integer root_count(const CyclotomicDivisor& d) {
    require_integral(d, "root_count");
    Integer s = 0;
    for (const auto& [n, c] : d.terms()) s += n * c.get_num();
    return s;
}

Integer delta_order_at_one(const CyclotomicDivisor& d) {
    if (coefficient_sum(d) != 0) return 0;
    Rational prod = 1;
    for (const auto& [n, c] : d.terms()) prod *= power(Rational(n), c.get_num());
    if (!is_integer(prod))
        throw Error(ErrorKind::NonIntegralOrder, "prod j^a_j = " + to_string(prod) + " is not an integer");
    return abs(prod.get_num());
}

Rational delta_eval(const CyclotomicDivisor& d, const Rational& t) {
    require_integral(d, "delta_eval");
    const bool at_one = t == 1;
    const bool at_minus_one = t == -1;

    if (t == 0) {
        Rational value = 1;
        for (const auto& [n, c] : d.terms())
            if (c.get_num() % 2 != 0) value = -value;
        return value;
    }

    if (at_one || at_minus_one) {
        // Factor t^j - 1 vanishes at t when t^j = 1; near t it behaves like
        // j t^(j-1) (s - t), which gives the finite value when orders cancel.
        Integer order = 0;
        Rational value = 1;
        for (const auto& [n, c] : d.terms()) {
            const Integer& a = c.get_num();
            bool vanishes = at_one || n % 2 == 0;
            if (vanishes) {
                order += a;
                Rational slope = at_one ? Rational(n) : Rational(-n);
                value *= power(slope, a);
            } else {
                value *= power(Rational(-2), a);
            }
        }
        if (order > 0) return 0;
        if (order < 0)
            throw Error(ErrorKind::PoleAtT, "divisor has a pole of order " + to_string(Integer(-order)) + " at t = " + to_string(t));
        return value;
    }

    Rational value = 1;
    for (const auto& [n, c] : d.terms()) {
        if (n > kMaxDirectIndex)
            throw Error(ErrorKind::InvalidInput, "index " + to_string(n) + " too large for direct evaluation");
        Rational factor = power(t, n) - 1;
        value *= power(factor, c.get_num());
    }
    return value;
}

std::string to_string(const CyclotomicDivisor& d) {
    if (d.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
        const auto& [n, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "L" << n.get_str();
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicDivisor& d) { return os << to_string(d); }

}  // namespace bhlink
