#pragma once
#include "bhlink/divisor.hpp"
#include "bhlink/weights.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bhlink {

struct HomologyProfile {
    // Rank of the middle homology H_{n-1} of the link (b3 for 7-manifolds).
    Integer betti;
    // Invariant factors d_1 >= d_2 >= ..., each >= 2, d_{j+1} | d_j.
    std::vector<Integer> torsion;
    Integer mu;
    Integer degree;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Subsets of the variable indices are bitmasks.
struct TorsionWorksheet {
    std::size_t n_vars = 0;
    // Indexed by mask. The full index set gets no c (stored as 0); its k is 0.
    std::vector<Integer> c;
    std::vector<Rational> k;
    Integer r;
};

struct TorsionResult {
    TorsionWorksheet worksheet;
    std::vector<Integer> torsion;
};

CyclotomicDivisor link_divisor(const WeightSystem& ws);
Integer milnor_number(const WeightSystem& ws);
// Direct sum over all subsets of the variables, without the divisor ring.
Rational betti_by_subsets(const WeightSystem& ws);
Integer betti(const WeightSystem& ws);
TorsionResult orlik_torsion(const WeightSystem& ws);
HomologyProfile homology_profile(const WeightSystem& ws);
bool is_rational_homology_sphere(const WeightSystem& ws);

Rational alpha(const SplitDecomposition& s);
Rational beta(const SplitDecomposition& s);

// Profile for systems with gcd(d, w_i) = 1 for all i, checked against homology_profile.
HomologyProfile closed_form_case_A(const WeightSystem& ws);

enum class CoverLabel { Standard, Kervaire, NotHomotopySphere, Indeterminate };
std::string to_string(CoverLabel label);

struct BranchedCover {
    WeightSystem system;
    CoverLabel label;
    // Delta at -1 when the link is a homotopy sphere and the value is defined.
    std::optional<Rational> delta_at_minus_one;
};

// The link of z^p + f, with degree lcm(p, d) and the new weight in front.
BranchedCover branched_cover_profile(const WeightSystem& ws, const Integer& p);

}  // namespace bhlink
