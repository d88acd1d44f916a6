#pragma once
#include "bhlink/duality.hpp"
#include "bhlink/weights.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bhlink {

struct TableRow {
    std::size_t line;
    WeightSystem source;
    std::vector<Integer> dual_weights;
    Integer dual_degree;
    Integer dual_mu;
    std::vector<Integer> dual_torsion;
};

// Header: w0..w4,d,table_dual_w,table_dual_d,table_dual_mu,table_dual_torsion
std::vector<TableRow> parse_table(std::string_view csv);
const std::vector<TableRow>& embedded_table();

struct RowCheck {
    bool pass = false;
    std::optional<InvertiblePolynomial> representation;
    std::optional<WeightSystem> dual;
    std::optional<HomologyProfile> profile;
    std::optional<SasakiVerdict> verdict;
    std::optional<bool> closed_form_agrees;
    std::vector<std::string> diffs;
};

RowCheck verify_row(const TableRow& row);
std::vector<RowCheck> verify_table(const std::vector<TableRow>& rows, unsigned jobs = 1);

}  // namespace bhlink
