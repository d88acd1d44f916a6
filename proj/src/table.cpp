#include "bhlink/table.hpp"

#include "bhlink/appendix_table_data.hpp"
#include "bhlink/batch.hpp"
#include "bhlink/errors.hpp"
#include "bhlink/report.hpp"
#include "bhlink/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bhlink {

std::vector<TableRow> parse_table(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    CsvTable t = read_csv(in);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < t.header.size(); ++i) col[t.header[i]] = i;
    const char* needed[] = {"w0", "w1", "w2", "w3", "w4", "d", "table_dual_w", "table_dual_d", "table_dual_mu",
                            "table_dual_torsion"};
    for (const char* name : needed)
        if (!col.count(name)) throw Error(ErrorKind::InvalidInput, std::string("table is missing column ") + name);

    std::vector<TableRow> rows;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& cells = t.rows[r];
        auto num = [&](const char* name) {
            auto v = parse_integer(cells[col[name]]);
            if (!v) throw Error(ErrorKind::InvalidInput, "table line " + std::to_string(r + 2) + ": bad " + name);
            return *v;
        };
        std::vector<Integer> w;
        for (const char* name : {"w0", "w1", "w2", "w3", "w4"}) w.push_back(num(name));
        rows.push_back(TableRow{r + 2, WeightSystem(std::move(w), num("d")), parse_list(cells[col["table_dual_w"]]),
                                num("table_dual_d"), num("table_dual_mu"),
                                parse_torsion(cells[col["table_dual_torsion"]])});
    }
    return rows;
}

const std::vector<TableRow>& embedded_table() {
    static const std::vector<TableRow> rows = parse_table(detail::kAppendixTableCsv);
    return rows;
}

namespace {

std::vector<Integer> sorted(std::vector<Integer> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
}

bool some_order_solves(const InvertiblePolynomial& dual, const std::vector<Integer>& w, const Integer& d) {
    std::vector<Integer> perm = sorted(w);
    do {
        try {
            if (satisfies(dual, WeightSystem(perm, d))) return true;
        } catch (const Error&) {
            return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

RowCheck verify_row(const TableRow& row) {
    RowCheck c;
    auto diff = [&](std::string what, const std::string& table, const std::string& got) {
        c.diffs.push_back(what + ": table " + table + ", computed " + got);
    };
    try {
        c.representation = find_chain_cycle(row.source);
        auto [t, w] = bh_dual(*c.representation);
        c.dual = w;
        c.profile = homology_profile(w);
        c.verdict = se_certificate(w);

        if (sorted(w.weights()) != sorted(row.dual_weights)) {
            diff("dual weights", format_list(row.dual_weights), format_list(w.weights()));
            if (!some_order_solves(t, row.dual_weights, row.dual_degree))
                c.diffs.push_back("no ordering of the table weights solves the transposed system " + render(t));
        }
        if (w.degree() != row.dual_degree) diff("dual degree", row.dual_degree.get_str(), w.degree().get_str());
        if (c.profile->mu != row.dual_mu) diff("dual mu", row.dual_mu.get_str(), c.profile->mu.get_str());
        if (c.profile->betti != 0) c.diffs.push_back("dual b3 is " + c.profile->betti.get_str());
        if (c.profile->torsion != row.dual_torsion)
            diff("dual torsion", format_torsion(row.dual_torsion), format_torsion(c.profile->torsion));
        if (c.verdict->verdict != Verdict::SasakiEinstein)
            c.diffs.push_back("dual is not certified: " + to_string(c.verdict->verdict));

        ChainCycleForecast f = chain_cycle_closed_forms(row.source, *c.representation);
        c.closed_form_agrees = f.normalized() == w && f.mu == c.profile->mu && f.torsion == c.profile->torsion;
        if (!*c.closed_form_agrees) c.diffs.push_back("closed forms disagree with the transposed system");
    } catch (const std::exception& e) {
        c.diffs.push_back(e.what());
    }
    c.pass = c.diffs.empty();
    return c;
}

std::vector<RowCheck> verify_table(const std::vector<TableRow>& rows, unsigned jobs) {
    std::vector<RowCheck> out(rows.size());
    parallel_for(rows.size(), jobs, [&](std::size_t i) { out[i] = verify_row(rows[i]); });
    return out;
}

}  // namespace bhlink
