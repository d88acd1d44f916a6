#pragma once
#include "bhlink/duality.hpp"
#include "bhlink/errors.hpp"
#include "bhlink/invariants.hpp"
#include "bhlink/polynomial.hpp"
#include "bhlink/weights.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace gen {

using namespace bhlink;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// A random valid invertible polynomial on n variables with its weights.
inline std::optional<std::pair<InvertiblePolynomial, WeightSystem>> random_polynomial(std::mt19937_64& rng,
                                                                                       std::size_t n, long max_exp) {
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Block> blocks;
    std::size_t i = 0;
    while (i < n) {
        std::size_t len = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n - i)));
        std::vector<std::size_t> part(vars.begin() + i, vars.begin() + i + len);
        i += len;
        if (len == 1) {
            blocks.push_back(Block::fermat(part[0], uniform(rng, 2, max_exp)));
            continue;
        }
        std::vector<Integer> e;
        bool chain = uniform(rng, 0, 1) == 0;
        for (std::size_t j = 0; j < len; ++j) e.push_back(uniform(rng, (chain && j == 0) ? 2 : 1, max_exp));
        blocks.push_back(chain ? Block::chain(part, e) : Block::cycle(part, e));
    }
    InvertiblePolynomial p(n, std::move(blocks));
    if (!validate(p).empty()) return std::nullopt;
    try {
        return std::pair{p, solve_weights(p)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

enum class Case { I, II, III };

struct Instance {
    InvertiblePolynomial polynomial;
    WeightSystem weights;
    HomologyProfile profile;
};

inline InvertiblePolynomial shape(Case c, const std::vector<long>& a) {
    auto I = [&](std::size_t k) { return Integer(a[k]); };
    switch (c) {
        case Case::I:
            return InvertiblePolynomial(5, {Block::cycle({0, 1, 2, 3, 4}, {I(0), I(1), I(2), I(3), I(4)})});
        case Case::II:
            return InvertiblePolynomial(5, {Block::fermat(0, I(0)), Block::fermat(1, I(1)),
                                            Block::cycle({2, 3, 4}, {I(2), I(3), I(4)})});
        case Case::III:
            break;
    }
    return InvertiblePolynomial(5, {Block::cycle({0, 1}, {I(0), I(1)}), Block::cycle({2, 3, 4}, {I(2), I(3), I(4)})});
}

// Hypotheses of the cycle-type transpose theorem, with gcd(d, I) = 1 in place
// of I = 1 (see the project notes): well-formed ambient space, rational
// homology sphere, and gcd(d, w_i) = 1 (case I) or the m2/m3 split on {0,1}.
inline bool hypotheses_hold(Case c, const WeightSystem& ws) {
    if (!is_wellformed_space(ws.weights())) return false;
    if (gcd(ws.degree(), fano_index(ws)) != 1) return false;
    if (c == Case::I) {
        for (const auto& w : ws.weights())
            if (gcd(ws.degree(), w) != 1) return false;
    } else {
        try {
            split(ws);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

inline std::optional<Instance> random_case(std::mt19937_64& rng, Case c, std::set<std::vector<long>>& seen) {
    std::vector<long> a(5);
    for (std::size_t k = 0; k < 5; ++k) a[k] = uniform(rng, 1, 12);
    if (c == Case::II) {
        a[0] = uniform(rng, 2, 12);
        a[1] = uniform(rng, 2, 12);
    }
    if (!seen.insert(a).second) return std::nullopt;
    InvertiblePolynomial p = shape(c, a);
    if (!validate(p).empty()) return std::nullopt;
    std::optional<WeightSystem> ws;
    try {
        ws = solve_weights(p);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!hypotheses_hold(c, *ws)) return std::nullopt;
    HomologyProfile prof = homology_profile(*ws);
    if (prof.betti != 0) return std::nullopt;
    return Instance{p, *ws, prof};
}

inline std::vector<Instance> population(Case c, std::size_t count, std::uint64_t seed,
                                        std::size_t max_tries = 2'000'000) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    std::set<std::vector<long>> seen;
    for (std::size_t t = 0; t < max_tries && out.size() < count; ++t)
        if (auto inst = random_case(rng, c, seen)) out.push_back(std::move(*inst));
    return out;
}

}  // namespace gen
