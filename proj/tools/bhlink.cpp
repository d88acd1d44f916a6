#include "bhlink/batch.hpp"
#include "bhlink/errors.hpp"
#include "bhlink/invariants.hpp"
#include "bhlink/report.hpp"
#include "bhlink/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bhlink;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kCrossCheck = 3 };

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput:
        case ErrorKind::NonIntegralMilnor:
        case ErrorKind::NonIntegralExpansion:
        case ErrorKind::NonPositiveWeights:
        case ErrorKind::PreconditionFailed:
            return kInvalid;
        default:
            return kCrossCheck;
    }
}

WeightSystem read_weights(const std::string& list, const std::string& degree) {
    auto w = parse_list(list, ',');
    auto d = parse_integer(degree);
    if (!d) throw Error(ErrorKind::InvalidInput, "degree must be an integer");
    if (w.size() < 5 || w.size() > 8) throw Error(ErrorKind::InvalidInput, "expected 5 to 8 weights");
    return WeightSystem(std::move(w), *d);
}

int cmd_verify(const std::string& fixture, bool json, unsigned jobs) {
    std::vector<TableRow> rows;
    if (fixture.empty()) {
        rows = embedded_table();
    } else {
        std::ifstream in(fixture);
        if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + fixture);
        std::stringstream ss;
        ss << in.rdbuf();
        rows = parse_table(ss.str());
    }
    auto checks = verify_table(rows, jobs);
    std::size_t passed = 0;
    auto out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = checks[i];
        passed += c.pass;
        if (json) {
            nlohmann::ordered_json j;
            j["line"] = rows[i].line;
            j["source"] = rows[i].source.str();
            j["pass"] = c.pass;
            j["diffs"] = c.diffs;
            out.push_back(j);
            continue;
        }
        std::cout << (c.pass ? "PASS " : "FAIL ") << rows[i].source.str();
        if (c.dual) std::cout << " -> " << c.dual->str();
        std::cout << "\n";
        for (const auto& d : c.diffs) std::cout << "     " << d << "\n";
    }
    if (json)
        std::cout << nlohmann::ordered_json{{"rows", out}, {"passed", passed}, {"total", rows.size()}}.dump(2) << "\n";
    else
        std::cout << passed << "/" << rows.size() << " rows match\n";
    return passed == rows.size() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology of links of invertible weighted-homogeneous singularities and their transposes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    unsigned jobs = 1;
    std::string fixture;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--jobs", jobs, "worker threads for batch and verify-table")->check(CLI::Range(1u, 256u));
    app.add_option("--fixture", fixture, "table CSV replacing the embedded one");

    std::string weights, degree;
    auto* analyze = app.add_subcommand("analyze", "homology, index, well-formedness and SE verdict");
    auto* pipe = app.add_subcommand("pipeline", "every representation with its transpose dual");
    for (auto* sub : {analyze, pipe}) {
        sub->add_option("-w,--weights", weights, "comma-separated weights")->required();
        sub->add_option("-d,--degree", degree, "degree")->required();
    }

    std::string input, output;
    auto* batch = app.add_subcommand("batch", "process a CSV of weight systems");
    batch->add_option("input", input, "input CSV")->required();
    batch->add_option("-o,--output", output, "output CSV (default stdout)");

    auto* verify = app.add_subcommand("verify-table", "reproduce the reference table");

    std::string p;
    auto* cover = app.add_subcommand("cover", "diffeomorphism type of the p-fold branched cover z^p + f");
    cover->add_option("-w,--weights", weights)->required();
    cover->add_option("-d,--degree", degree)->required();
    cover->add_option("-p", p, "cover order")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            Analysis a = bhlink::analyze(read_weights(weights, degree));
            std::cout << (json ? to_json(a).dump(2) + "\n" : render_text(a));
            return kOk;
        }
        if (*pipe) {
            WeightSystem ws = read_weights(weights, degree);
            auto reports = pipeline(ws);
            if (json) {
                nlohmann::ordered_json j;
                j["weights"] = ws.str();
                j["reports"] = nlohmann::ordered_json::array();
                for (const auto& r : reports) j["reports"].push_back(to_json(r));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << render_text(ws, reports);
            }
            bool clean = true;
            for (const auto& r : reports) clean = clean && r.errors.empty();
            return clean ? kOk : kCrossCheck;
        }
        if (*batch) {
            std::ifstream in(input);
            if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + input);
            BatchSummary s;
            if (output.empty()) {
                s = run_batch(in, std::cout, jobs);
            } else {
                std::ofstream out(output);
                if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + output);
                s = run_batch(in, out, jobs);
            }
            std::cerr << s.rows << " rows, " << s.failed << " with errors\n";
            return kOk;
        }
        if (*verify) return cmd_verify(fixture, json, jobs);
        if (*cover) {
            auto order = parse_integer(p);
            if (!order) throw Error(ErrorKind::InvalidInput, "p must be an integer");
            WeightSystem ws = read_weights(weights, degree);
            BranchedCover c = branched_cover_profile(ws, *order);
            if (json) {
                nlohmann::ordered_json j;
                j["cover"] = c.system.str();
                j["label"] = to_string(c.label);
                j["delta_at_minus_one"] = c.delta_at_minus_one ? nlohmann::ordered_json(c.delta_at_minus_one->get_str()) : nlohmann::ordered_json();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "cover    " << c.system.str() << "\n";
                if (c.delta_at_minus_one) std::cout << "D(-1)    " << c.delta_at_minus_one->get_str() << "\n";
                std::cout << "type     " << to_string(c.label) << "\n";
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCrossCheck;
    }
    return kOk;
}
