#pragma once
#include "bhlink/duality.hpp"
#include "bhlink/invariants.hpp"
#include "bhlink/polynomial.hpp"
#include "bhlink/weights.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhlink {

// (factor, multiplicity) in decreasing factor order.
std::vector<std::pair<Integer, std::size_t>> group_torsion(const std::vector<Integer>& torsion);
// "Z_3315+Z_51^3"; "0" for the trivial group.
std::string format_torsion(const std::vector<Integer>& torsion);
std::vector<Integer> parse_torsion(std::string_view text);
// "a;b;c" lists used in CSV cells.
std::string format_list(const std::vector<Integer>& xs);
std::vector<Integer> parse_list(std::string_view text, char sep = ';');

struct Analysis {
    WeightSystem weights;
    HomologyProfile profile;
    Integer index;
    bool wellformed_space;
    bool wellformed_hypersurface;
    SasakiVerdict verdict;
    std::vector<InvertiblePolynomial> representations;
    // Torsion is established when an invertible representation exists.
    bool torsion_proven;
};

Analysis analyze(const WeightSystem& ws);

nlohmann::ordered_json to_json(const Integer& z);
nlohmann::ordered_json to_json(const HomologyProfile& p);
nlohmann::ordered_json to_json(const SasakiVerdict& v);
nlohmann::ordered_json to_json(const Analysis& a);
nlohmann::ordered_json to_json(const DualReport& r);

std::string render_text(const Analysis& a);
std::string render_text(const WeightSystem& ws, const std::vector<DualReport>& reports);

}  // namespace bhlink
