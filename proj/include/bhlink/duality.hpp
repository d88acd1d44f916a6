#pragma once
#include "bhlink/invariants.hpp"
#include "bhlink/polynomial.hpp"
#include "bhlink/weights.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bhlink {

enum class Verdict { SasakiEinstein, PositiveRicciOnly, NotFano };
std::string to_string(Verdict v);

struct SasakiVerdict {
    bool fano;
    bool inequality_holds;
    Verdict verdict;

    friend bool operator==(const SasakiVerdict&, const SasakiVerdict&) = default;
};

// I d < n/(n-1) min_{i<j} w_i w_j with I = |w| - d and n + 1 variables.
SasakiVerdict se_certificate(const WeightSystem& ws);

std::pair<InvertiblePolynomial, WeightSystem> bh_dual(const InvertiblePolynomial& p);

bool is_twin(const HomologyProfile& a, const HomologyProfile& b);

// Prediction for the transpose of z_h^{a0} + z_h z_t^{a1} + (3-cycle on
// k0,k1,k2 with exponents a2,a3,a4), where (h, t) = split.m3_group and
// (k0, k1, k2) = split.m2_group in that order.
struct ChainCycleForecast {
    Integer raw_degree;
    // Indexed by variable, before normalization.
    std::vector<Integer> raw_weights;
    Integer mu;
    std::vector<Integer> torsion;

    WeightSystem normalized() const;
};

ChainCycleForecast chain_cycle_closed_forms(const SplitDecomposition& s, const std::array<Integer, 5>& exponents);
// Same, reading the layout and exponents off a chain-cycle polynomial for ws.
ChainCycleForecast chain_cycle_closed_forms(const WeightSystem& ws, const InvertiblePolynomial& p);

// Positions within the 3-cycle (0, 1, 2 for a2, a3, a4) whose exponents are exchanged.
struct CycleSwap {
    std::size_t first = 1;
    std::size_t second = 2;
};

std::pair<InvertiblePolynomial, WeightSystem> swap_twin(const InvertiblePolynomial& p, CycleSwap which = {});

struct DualReport {
    InvertiblePolynomial source;
    TypeLabel type;
    WeightSystem source_weights;
    std::optional<HomologyProfile> source_profile;
    SasakiVerdict source_verdict;

    std::optional<InvertiblePolynomial> dual;
    std::optional<WeightSystem> dual_weights;
    std::optional<HomologyProfile> dual_profile;
    std::optional<SasakiVerdict> dual_verdict;

    bool twin = false;
    // Set for chain-cycle sources where the closed forms apply.
    std::optional<bool> closed_form_agrees;
    std::vector<std::string> errors;
};

// One report per representation; failures are recorded, never thrown.
std::vector<DualReport> pipeline(const WeightSystem& ws);

}  // namespace bhlink
