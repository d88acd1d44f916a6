#pragma once
#include "bhlink/polynomial.hpp"
#include "bhlink/weights.hpp"

#include <vector>

namespace bhlink {

// Every valid invertible polynomial whose exponent matrix satisfies
// A W = d 1 for exactly this (w, d), in canonical order without duplicates.
std::vector<InvertiblePolynomial> enumerate_representations(const WeightSystem& ws);

// The representation made of a 2-variable chain on the m3 group and a
// 3-cycle on the m2 group. Ties go to the smallest exponent tuple (chain
// exponents, then cycle exponents), then to canonical order.
// Throws NoRepresentation when there is none.
InvertiblePolynomial find_chain_cycle(const WeightSystem& ws);

// The chain and cycle blocks of a chain-cycle polynomial found above.
struct ChainCycleParts {
    const Block* chain;
    const Block* cycle;
};
std::optional<ChainCycleParts> chain_cycle_parts(const InvertiblePolynomial& p);

}  // namespace bhlink
