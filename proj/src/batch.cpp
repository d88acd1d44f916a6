#include "bhlink/batch.hpp"

#include "bhlink/duality.hpp"
#include "bhlink/errors.hpp"
#include "bhlink/report.hpp"
#include "bhlink/representation.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <thread>

namespace bhlink {

namespace {

std::string trim(std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        cells.push_back(trim(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return cells;
}

const char* const kResultColumns[] = {"b3",     "torsion", "mu",      "index",        "wellformed",
                                      "se_verdict", "n_reps",  "dual_w",  "dual_d",       "dual_torsion",
                                      "dual_mu",    "dual_se", "twin",    "error"};

struct ResultRow {
    std::string line;
    bool failed;
};

ResultRow finish(const std::vector<std::string>& cells, const std::vector<std::string>& res) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
    for (const auto& r : res) line += "," + r;
    return {std::move(line), !res.back().empty()};
}

ResultRow result_row(const std::vector<std::string>& cells, std::size_t n_weights, std::size_t d_col) {
    std::vector<std::string> res(std::size(kResultColumns));
    try {
        std::vector<Integer> w;
        for (std::size_t i = 0; i < n_weights; ++i) {
            auto v = parse_integer(cells[i]);
            if (!v) throw Error(ErrorKind::InvalidInput, "bad weight '" + cells[i] + "'");
            w.push_back(*v);
        }
        auto d = parse_integer(cells[d_col]);
        if (!d) throw Error(ErrorKind::InvalidInput, "bad degree '" + cells[d_col] + "'");
        WeightSystem ws(std::move(w), *d);

        const SasakiVerdict verdict = se_certificate(ws);
        res[3] = fano_index(ws).get_str();
        res[4] = is_wellformed_hypersurface(ws) ? "true" : "false";
        res[5] = to_string(verdict.verdict);

        auto reps = enumerate_representations(ws);
        res[6] = std::to_string(reps.size());
        HomologyProfile prof = homology_profile(ws);
        res[0] = prof.betti.get_str();
        res[1] = format_torsion(prof.torsion);
        res[2] = prof.mu.get_str();
        if (reps.empty()) return finish(cells, res);

        InvertiblePolynomial chosen = reps.front();
        if (ws.size() == 5) {
            try {
                chosen = find_chain_cycle(ws);
            } catch (const Error&) {
            }
        }
        auto [t, tw] = bh_dual(chosen);
        HomologyProfile dual = homology_profile(tw);
        res[7] = format_list(tw.weights());
        res[8] = tw.degree().get_str();
        res[9] = format_torsion(dual.torsion);
        res[10] = dual.mu.get_str();
        res[11] = to_string(se_certificate(tw).verdict);
        res[12] = is_twin(prof, dual) ? "true" : "false";
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& ch : msg)
            if (ch == ',' || ch == '\n') ch = ' ';
        res[13] = msg;
    }
    return finish(cells, res);
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (t.header.empty()) {
            if (lineno == 1 && cells[0].rfind("\xEF\xBB\xBF", 0) == 0) cells[0].erase(0, 3);
            t.header = std::move(cells);
            continue;
        }
        if (cells.size() != t.header.size())
            throw Error(ErrorKind::InvalidInput, "line " + std::to_string(lineno) + " has " +
                                                     std::to_string(cells.size()) + " cells, header has " +
                                                     std::to_string(t.header.size()));
        t.rows.push_back(std::move(cells));
    }
    if (t.header.empty()) throw Error(ErrorKind::InvalidInput, "CSV has no header");
    return t;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs && j < n; ++j)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) f(i);
        });
    for (auto& th : pool) th.join();
}

BatchSummary run_batch(std::istream& in, std::ostream& out, unsigned jobs) {
    CsvTable t = read_csv(in);
    std::size_t n_weights = 0;
    while (n_weights < t.header.size() && t.header[n_weights] == "w" + std::to_string(n_weights)) ++n_weights;
    if (n_weights < 2 || n_weights >= t.header.size() || t.header[n_weights] != "d")
        throw Error(ErrorKind::InvalidInput, "header must start with w0,...,wn,d");
    for (const auto& h : t.header)
        for (const char* r : kResultColumns)
            if (h == r) throw Error(ErrorKind::InvalidInput, "input column '" + h + "' clashes with a result column");

    std::vector<ResultRow> lines(t.rows.size());
    parallel_for(t.rows.size(), jobs, [&](std::size_t i) { lines[i] = result_row(t.rows[i], n_weights, n_weights); });

    std::string header;
    for (std::size_t i = 0; i < t.header.size(); ++i) header += (i ? "," : "") + t.header[i];
    for (const char* r : kResultColumns) header += std::string(",") + r;
    out << header << "\n";
    BatchSummary s;
    s.rows = lines.size();
    for (const auto& l : lines) {
        out << l.line << "\n";
        if (l.failed) ++s.failed;
    }
    return s;
}

}  // namespace bhlink
