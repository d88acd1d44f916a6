#include "bhlink/invariants.hpp"

#include "bhlink/errors.hpp"

#include <algorithm>
#include <bit>

namespace bhlink {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kMaxVars = 16;

void require_size(const WeightSystem& ws) {
    if (ws.size() > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many variables for subset sums");
}

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

// prod_{i in T} u_i / (prod_{i in T} v_i * lcm_{i in T} u_i); 1 for the empty set.
Rational subset_term(const ReducedWeights& r, Mask t) {
    Integer num = 1, den = 1, l = 1;
    for (std::size_t i = 0; i < r.u.size(); ++i) {
        if (!(t >> i & 1u)) continue;
        num *= r.u[i];
        den *= r.v[i];
        l = lcm(l, r.u[i]);
    }
    return make_rational(num, den * l);
}

Integer product(const std::vector<Integer>& xs) {
    Integer p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

}  // namespace

CyclotomicDivisor link_divisor(const WeightSystem& ws) {
    auto factors = reduce(ws).factors();
    return expand_link_divisor(factors);
}

Integer milnor_number(const WeightSystem& ws) {
    Rational mu = 1;
    for (const auto& w : ws.weights()) mu *= make_rational(ws.degree() - w, w);
    if (!is_integer(mu))
        throw Error(ErrorKind::NonIntegralMilnor, "Milnor number " + to_string(mu) + " of " + ws.str());
    return mu.get_num();
}

Rational betti_by_subsets(const WeightSystem& ws) {
    require_size(ws);
    const ReducedWeights r = reduce(ws);
    const std::size_t n = ws.size();
    Rational b = 0;
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        Rational term = subset_term(r, s);
        if ((n - popcount(s)) % 2) term = -term;
        b += term;
    }
    return b;
}

Integer betti(const WeightSystem& ws) {
    Integer via_divisor = coefficient_sum(link_divisor(ws));
    Rational via_subsets = betti_by_subsets(ws);
    if (Rational(via_divisor) != via_subsets)
        throw Error(ErrorKind::CrossCheckFailed, "Betti number " + to_string(via_divisor) + " from the divisor, " +
                                                     to_string(via_subsets) + " from subsets, for " + ws.str());
    return via_divisor;
}

TorsionResult orlik_torsion(const WeightSystem& ws) {
    require_size(ws);
    const ReducedWeights r = reduce(ws);
    const std::size_t n_vars = ws.size();
    const std::size_t n = n_vars - 1;
    const Mask full = (Mask(1) << n_vars) - 1;

    TorsionResult out;
    TorsionWorksheet& w = out.worksheet;
    w.n_vars = n_vars;
    w.c.assign(std::size_t(full) + 1, Integer(0));
    w.k.assign(std::size_t(full) + 1, Rational(0));

    // Proper submasks are numerically smaller, so increasing order suffices.
    for (Mask s = 0; s < full; ++s) {
        Integer g = 0;
        for (std::size_t i = 0; i < n_vars; ++i)
            if (!(s >> i & 1u)) g = gcd(g, r.u[i]);
        Integer below = 1;
        for (Mask t = (s - 1) & s; t != s; t = (t - 1) & s) {
            below *= w.c[t];
            if (t == 0) break;
        }
        if (!divides(below, g))
            throw Error(ErrorKind::NonIntegralC, "c recursion is inexact at subset mask " + std::to_string(s) +
                                                     " for " + ws.str());
        w.c[s] = g / below;
    }

    Rational kmax = 0;
    for (Mask s = 0; s <= full; ++s) {
        const std::size_t size = popcount(s);
        // epsilon_{n-s+1} is 1 exactly when n - s + 1 is odd.
        if ((n + 1 - size) % 2 == 0) continue;
        Rational sum = 0;
        for (Mask t = s;; t = (t - 1) & s) {
            Rational term = subset_term(r, t);
            if ((size - popcount(t)) % 2) term = -term;
            sum += term;
            if (t == 0) break;
        }
        w.k[s] = sum;
        if (sum > kmax) kmax = sum;
    }
    w.r = floor(kmax);

    for (Integer j = 1; j <= w.r; ++j) {
        Integer dj = 1;
        for (Mask s = 0; s < full; ++s)
            if (w.k[s] >= Rational(j)) dj *= w.c[s];
        if (dj != 1) out.torsion.push_back(dj);
    }
    return out;
}

HomologyProfile homology_profile(const WeightSystem& ws) {
    HomologyProfile p;
    p.degree = ws.degree();
    p.mu = milnor_number(ws);
    CyclotomicDivisor div = link_divisor(ws);
    p.betti = betti(ws);
    Integer roots = root_count(div);
    if (roots != p.mu)
        throw Error(ErrorKind::CrossCheckFailed, "root count " + to_string(roots) + " differs from Milnor number " +
                                                     to_string(p.mu) + " for " + ws.str());
    p.torsion = orlik_torsion(ws).torsion;
    if (p.betti == 0) {
        Integer order = product(p.torsion);
        Integer delta = delta_order_at_one(div);
        if (order != delta)
            throw Error(ErrorKind::CrossCheckFailed, "torsion order " + to_string(order) + " differs from |Delta(1)| = " +
                                                         to_string(delta) + " for " + ws.str());
    }
    return p;
}

bool is_rational_homology_sphere(const WeightSystem& ws) { return betti(ws) == 0; }

Rational alpha(const SplitDecomposition& s) {
    if (s.m3_group.size() != 2) throw Error(ErrorKind::PreconditionFailed, "alpha needs a two-index m3 group");
    const Integer& v0 = s.v[s.m3_group[0]];
    const Integer& v1 = s.v[s.m3_group[1]];
    return make_rational(s.m2, v0 * v1) - make_rational(1, v0) - make_rational(1, v1);
}

Rational beta(const SplitDecomposition& s) {
    if (s.m2_group.size() != 3) throw Error(ErrorKind::PreconditionFailed, "beta needs a three-index m2 group");
    const Integer& a = s.v[s.m2_group[0]];
    const Integer& b = s.v[s.m2_group[1]];
    const Integer& c = s.v[s.m2_group[2]];
    Integer num = s.m3 * s.m3 - (a + b + c) * s.m3 + a * b + a * c + b * c;
    return make_rational(num, a * b * c);
}

HomologyProfile closed_form_case_A(const WeightSystem& ws) {
    for (const auto& w : ws.weights())
        if (gcd(ws.degree(), w) != 1)
            throw Error(ErrorKind::PreconditionFailed, "closed form A needs gcd(d, w_i) = 1 in " + ws.str());
    HomologyProfile p;
    p.degree = ws.degree();
    p.mu = milnor_number(ws);
    // mu - s = d (b - s) with s = (-1)^{n+1}; torsion Z_d when n is even.
    const bool odd = ws.size() % 2 == 1;
    Integer s = odd ? -1 : 1;
    Integer shifted = p.mu - s;
    if (!divides(p.degree, shifted))
        throw Error(ErrorKind::CrossCheckFailed, "closed form A gives a fractional Betti number for " + ws.str());
    p.betti = shifted / p.degree + s;
    if (odd) p.torsion.push_back(p.degree);

    HomologyProfile general = homology_profile(ws);
    if (!(general == p))
        throw Error(ErrorKind::CrossCheckFailed, "closed form A disagrees with the general profile for " + ws.str());
    return p;
}

std::string to_string(CoverLabel label) {
    switch (label) {
        case CoverLabel::Standard: return "Standard";
        case CoverLabel::Kervaire: return "Kervaire";
        case CoverLabel::NotHomotopySphere: return "NotHomotopySphere";
        case CoverLabel::Indeterminate: return "Indeterminate";
    }
    return "?";
}

BranchedCover branched_cover_profile(const WeightSystem& ws, const Integer& p) {
    if (ws.size() != 5) throw Error(ErrorKind::PreconditionFailed, "branched cover needs a 5-variable system");
    if (p < 2) throw Error(ErrorKind::PreconditionFailed, "cover order must be at least 2");
    Integer d = lcm(p, ws.degree());
    Integer scale = d / ws.degree();
    std::vector<Integer> w{d / p};
    for (const auto& x : ws.weights()) w.push_back(x * scale);
    WeightSystem cover = WeightSystem(std::move(w), d).normalized();

    BranchedCover out{cover, CoverLabel::NotHomotopySphere, std::nullopt};
    CyclotomicDivisor div = link_divisor(cover);
    if (delta_order_at_one(div) != 1) return out;
    try {
        out.delta_at_minus_one = delta_eval(div, Rational(-1));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleAtT) throw;
        out.label = CoverLabel::Indeterminate;
        return out;
    }
    const Rational& v = *out.delta_at_minus_one;
    if (!is_integer(v)) {
        out.label = CoverLabel::Indeterminate;
        return out;
    }
    Integer res;
    mpz_fdiv_r_ui(res.get_mpz_t(), v.get_num_mpz_t(), 8);
    if (res == 1 || res == 7)
        out.label = CoverLabel::Standard;
    else if (res == 3 || res == 5)
        out.label = CoverLabel::Kervaire;
    else
        out.label = CoverLabel::Indeterminate;
    return out;
}

}  // namespace bhlink
