#include "bhlink/report.hpp"

#include "bhlink/errors.hpp"
#include "bhlink/representation.hpp"

#include <algorithm>
#include <sstream>

namespace bhlink {

std::vector<std::pair<Integer, std::size_t>> group_torsion(const std::vector<Integer>& torsion) {
    std::vector<Integer> sorted = torsion;
    std::sort(sorted.begin(), sorted.end(), [](const Integer& a, const Integer& b) { return a > b; });
    std::vector<std::pair<Integer, std::size_t>> out;
    for (const auto& t : sorted) {
        if (!out.empty() && out.back().first == t)
            ++out.back().second;
        else
            out.emplace_back(t, 1);
    }
    return out;
}

std::string format_torsion(const std::vector<Integer>& torsion) {
    if (torsion.empty()) return "0";
    std::string s;
    for (const auto& [f, m] : group_torsion(torsion)) {
        if (!s.empty()) s += "+";
        s += "Z_" + f.get_str();
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

std::vector<Integer> parse_torsion(std::string_view text) {
    std::vector<Integer> out;
    if (text == "0") return out;
    auto bad = [&] { return Error(ErrorKind::InvalidInput, "malformed torsion '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('+', pos);
        std::string_view item = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        if (item.substr(0, 2) != "Z_") throw bad();
        item.remove_prefix(2);
        std::size_t caret = item.find('^');
        auto factor = parse_integer(item.substr(0, caret));
        Integer mult = 1;
        if (caret != std::string_view::npos) {
            auto m = parse_integer(item.substr(caret + 1));
            if (!m || *m < 1) throw bad();
            mult = *m;
        }
        if (!factor || *factor < 2) throw bad();
        for (Integer i = 0; i < mult; ++i) out.push_back(*factor);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

std::string format_list(const std::vector<Integer>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + xs[i].get_str();
    return s;
}

std::vector<Integer> parse_list(std::string_view text, char sep) {
    std::vector<Integer> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find(sep, pos);
        auto v = parse_integer(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (!v) throw Error(ErrorKind::InvalidInput, "malformed integer list '" + std::string(text) + "'");
        out.push_back(*v);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

Analysis analyze(const WeightSystem& ws) {
    Analysis a{ws, homology_profile(ws), fano_index(ws), is_wellformed_space(ws.weights()),
               is_wellformed_hypersurface(ws), se_certificate(ws), enumerate_representations(ws), false};
    a.torsion_proven = !a.representations.empty();
    return a;
}

nlohmann::ordered_json to_json(const Integer& z) {
    if (auto v = to_int64(z)) return *v;
    return z.get_str();
}

namespace {

nlohmann::ordered_json list_json(const std::vector<Integer>& xs) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& x : xs) j.push_back(to_json(x));
    return j;
}

nlohmann::ordered_json torsion_json(const std::vector<Integer>& t) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& [f, m] : group_torsion(t)) j.push_back(nlohmann::ordered_json::array({to_json(f), m}));
    return j;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void text_profile(std::ostream& os, const char* indent, const HomologyProfile& p) {
    os << indent << "b3       " << p.betti.get_str() << "\n";
    os << indent << "H3 tors  " << format_torsion(p.torsion) << "\n";
    os << indent << "mu       " << p.mu.get_str() << "\n";
}

}  // namespace

nlohmann::ordered_json to_json(const HomologyProfile& p) {
    nlohmann::ordered_json j;
    j["b3"] = to_json(p.betti);
    j["torsion"] = torsion_json(p.torsion);
    j["mu"] = to_json(p.mu);
    j["degree"] = to_json(p.degree);
    j["rational_homology_sphere"] = p.betti == 0;
    return j;
}

nlohmann::ordered_json to_json(const SasakiVerdict& v) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(v.verdict);
    j["fano"] = v.fano;
    j["inequality_holds"] = v.inequality_holds;
    return j;
}

nlohmann::ordered_json to_json(const Analysis& a) {
    nlohmann::ordered_json j;
    j["weights"] = list_json(a.weights.weights());
    j["degree"] = to_json(a.weights.degree());
    j["profile"] = to_json(a.profile);
    j["index"] = to_json(a.index);
    j["wellformed_space"] = a.wellformed_space;
    j["wellformed_hypersurface"] = a.wellformed_hypersurface;
    j["se"] = to_json(a.verdict);
    j["torsion_status"] = a.torsion_proven ? "proven" : "conjectural";
    auto reps = nlohmann::ordered_json::array();
    for (const auto& p : a.representations) reps.push_back({{"type", classify(p).str()}, {"polynomial", render(p)}});
    j["representations"] = reps;
    return j;
}

nlohmann::ordered_json to_json(const DualReport& r) {
    nlohmann::ordered_json j;
    j["type"] = r.type.str();
    j["polynomial"] = render(r.source);
    j["source"] = r.source_profile ? to_json(*r.source_profile) : nlohmann::ordered_json();
    j["source_se"] = to_json(r.source_verdict);
    nlohmann::ordered_json d;
    if (r.dual) d["polynomial"] = render(*r.dual);
    if (r.dual_weights) {
        d["weights"] = list_json(r.dual_weights->weights());
        d["degree"] = to_json(r.dual_weights->degree());
        d["wellformed_hypersurface"] = is_wellformed_hypersurface(*r.dual_weights);
    }
    if (r.dual_profile) d["profile"] = to_json(*r.dual_profile);
    if (r.dual_verdict) d["se"] = to_json(*r.dual_verdict);
    j["dual"] = d;
    j["twin"] = r.twin;
    j["closed_form_agrees"] = r.closed_form_agrees ? nlohmann::ordered_json(*r.closed_form_agrees) : nlohmann::ordered_json();
    j["errors"] = r.errors;
    return j;
}

std::string render_text(const Analysis& a) {
    std::ostringstream os;
    os << "weights  " << a.weights.str() << "\n";
    text_profile(os, "", a.profile);
    os << "RHS      " << yes(a.profile.betti == 0) << "\n";
    os << "index    " << a.index.get_str() << "\n";
    os << "wellformed space=" << yes(a.wellformed_space) << " hypersurface=" << yes(a.wellformed_hypersurface)
       << "\n";
    os << "SE       " << to_string(a.verdict.verdict) << " (inequality " << (a.verdict.inequality_holds ? "holds" : "fails")
       << ")\n";
    os << "torsion  " << (a.torsion_proven ? "proven" : "conjectural, no invertible representation") << "\n";
    os << "representations " << a.representations.size() << "\n";
    for (const auto& p : a.representations) os << "  " << classify(p).str() << "  " << render(p) << "\n";
    return os.str();
}

std::string render_text(const WeightSystem& ws, const std::vector<DualReport>& reports) {
    std::ostringstream os;
    os << "weights  " << ws.str() << "\n";
    os << "representations " << reports.size() << "\n";
    for (const auto& r : reports) {
        os << "\n[" << r.type.str() << "] " << render(r.source) << "\n";
        if (r.source_profile) text_profile(os, "  ", *r.source_profile);
        os << "  SE       " << to_string(r.source_verdict.verdict) << "\n";
        if (r.dual) os << "  dual     " << render(*r.dual) << "\n";
        if (r.dual_weights)
            os << "  dual w   " << r.dual_weights->str()
               << (is_wellformed_hypersurface(*r.dual_weights) ? "" : "  (not well-formed)") << "\n";
        if (r.dual_profile) {
            os << "  dual profile\n";
            text_profile(os, "    ", *r.dual_profile);
        }
        if (r.dual_verdict) os << "  dual SE  " << to_string(r.dual_verdict->verdict) << "\n";
        os << "  twin     " << yes(r.twin) << "\n";
        if (r.closed_form_agrees) os << "  closed forms " << (*r.closed_form_agrees ? "agree" : "DISAGREE") << "\n";
        for (const auto& e : r.errors) os << "  error    " << e << "\n";
    }
    return os.str();
}

}  // namespace bhlink
