#pragma once
// Reference computations for the tests. None of these go through the
// divisor ring or the subset machinery used by the library.
#include "bhlink/arith.hpp"
#include "bhlink/divisor.hpp"
#include "bhlink/weights.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using bhlink::Integer;
using bhlink::Rational;
using Poly = std::vector<Integer>;  // coefficient of T^k at index k

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul_binomial(const Poly& p, std::size_t k) {  // p * (T^k - 1)
    Poly out(p.size() + k, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + k] += p[i];
        out[i] -= p[i];
    }
    trim(out);
    return out;
}

inline Poly div_binomial(const Poly& p, std::size_t k) {  // p / (T^k - 1), must be exact
    if (p.size() <= k) throw std::logic_error("inexact binomial division");
    Poly q(p.size() - k, Integer(0));
    Poly r = p;
    for (std::size_t i = p.size(); i-- > k;) {
        Integer c = r[i];
        q[i - k] = c;
        r[i] -= c;
        r[i - k] += c;
    }
    for (const auto& x : r)
        if (x != 0) throw std::logic_error("inexact binomial division");
    trim(q);
    return q;
}

inline Integer eval(const Poly& p, const Integer& t) {
    Integer v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

// prod_j (T^j - 1)^{a_j} as an explicit polynomial; needs small indices.
inline Poly expand_delta(const bhlink::CyclotomicDivisor& d) {
    Poly p{1};
    for (const auto& [n, c] : d.terms())
        if (c > 0)
            for (Integer i = 0; i < c; ++i) p = mul_binomial(p, n.get_ui());
    for (const auto& [n, c] : d.terms())
        if (c < 0)
            for (Integer i = 0; i < -c; ++i) p = div_binomial(p, n.get_ui());
    return p;
}

// Poincare polynomial of the Milnor algebra: prod (T^{d-w} - 1) / (T^w - 1).
inline Poly milnor_poincare(const bhlink::WeightSystem& ws) {
    Poly p{1};
    for (const auto& w : ws.weights()) p = mul_binomial(p, Integer(ws.degree() - w).get_ui());
    for (const auto& w : ws.weights()) p = div_binomial(p, w.get_ui());
    return p;
}

inline unsigned long totient(unsigned long m) {
    unsigned long r = m;
    for (unsigned long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    if (m > 1) r -= r / m;
    return r;
}

// Prime p when m is a power of p, else 1 (m > 1).
inline Integer cyclotomic_at_one(unsigned long m) {
    for (unsigned long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? Integer(p) : Integer(1);
        }
    return Integer(m);
}

// Monodromy eigenvalues exp(2 pi i (s + |w|)/d), one per Milnor-algebra
// monomial of weighted degree s, grouped by multiplicative order.
struct Spectrum {
    std::map<unsigned long, Integer> by_order;  // order -> number of eigenvalues
    Integer mu;
    Integer betti;  // multiplicity of the eigenvalue 1
};

inline Spectrum spectrum(const bhlink::WeightSystem& ws) {
    Poly p = milnor_poincare(ws);
    const unsigned long d = ws.degree().get_ui();
    const unsigned long shift = Integer(ws.weight_sum() % ws.degree()).get_ui();
    Spectrum s;
    s.mu = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        unsigned long r = (k + shift) % d;
        unsigned long g = std::gcd(r, d);
        s.by_order[d / g] += p[k];
        s.mu += p[k];
    }
    s.betti = s.by_order.count(1) ? s.by_order[1] : Integer(0);
    return s;
}

// |Delta(1)| from the spectrum; 0 when 1 is an eigenvalue.
inline Integer delta_at_one(const Spectrum& s) {
    if (s.betti != 0) return 0;
    Integer v = 1;
    for (const auto& [m, count] : s.by_order) {
        unsigned long phi = totient(m);
        if (count % phi != 0) throw std::logic_error("eigenvalues not closed under Galois action");
        Integer reps = count / phi;
        Integer base = cyclotomic_at_one(m);
        for (Integer i = 0; i < reps; ++i) v *= base;
    }
    return v;
}

inline Integer product(const std::vector<Integer>& xs) {
    Integer p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

// Betti number as the signed sum over all subsets, written out directly.
inline Rational betti_subset_sum(const bhlink::WeightSystem& ws) {
    const std::size_t n = ws.size();
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Integer num = 1, den = 1, l = 1;
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1u)) continue;
            ++s;
            Integer g = bhlink::gcd(ws.degree(), ws.weight(i));
            Integer u = ws.degree() / g, v = ws.weight(i) / g;
            num *= u;
            den *= v;
            l = bhlink::lcm(l, u);
        }
        Rational term(num, den * l);
        term.canonicalize();
        total += (n - s) % 2 ? Rational(-term) : term;
    }
    return total;
}

// Divisors as multisets of roots of unity: Q/Z element -> multiplicity.
using RootMultiset = std::map<Rational, Rational>;

inline Rational frac(const Rational& q) {
    Integer f = bhlink::floor(q);
    return q - Rational(f);
}

inline RootMultiset roots(const bhlink::CyclotomicDivisor& d) {
    RootMultiset out;
    for (const auto& [n, c] : d.terms())
        for (Integer k = 0; k < n; ++k) {
            Rational x(k, n);
            x.canonicalize();
            out[x] += c;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Product of divisors is convolution of root multisets in Q/Z.
inline RootMultiset convolve(const RootMultiset& a, const RootMultiset& b) {
    RootMultiset out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out[frac(x + y)] += m * n;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace oracle
