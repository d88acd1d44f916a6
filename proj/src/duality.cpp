#include "bhlink/duality.hpp"

#include "bhlink/errors.hpp"
#include "bhlink/representation.hpp"

#include <algorithm>

namespace bhlink {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::SasakiEinstein: return "SasakiEinstein";
        case Verdict::PositiveRicciOnly: return "PositiveRicciOnly";
        case Verdict::NotFano: return "NotFano";
    }
    return "?";
}

SasakiVerdict se_certificate(const WeightSystem& ws) {
    if (ws.size() < 3) throw Error(ErrorKind::PreconditionFailed, "inequality needs at least 3 variables");
    const Integer n = Integer(static_cast<unsigned long>(ws.size() - 1));
    const auto& w = ws.weights();
    Integer min_prod = w[0] * w[1];
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) min_prod = std::min<Integer>(min_prod, w[i] * w[j]);
    Integer index = fano_index(ws);
    SasakiVerdict v;
    v.fano = index > 0;
    v.inequality_holds = index * ws.degree() * (n - 1) < n * min_prod;
    v.verdict = !v.fano ? Verdict::NotFano : v.inequality_holds ? Verdict::SasakiEinstein : Verdict::PositiveRicciOnly;
    return v;
}

std::pair<InvertiblePolynomial, WeightSystem> bh_dual(const InvertiblePolynomial& p) {
    InvertiblePolynomial t = transpose(p);
    WeightSystem w = solve_weights(t);
    return {std::move(t), std::move(w)};
}

bool is_twin(const HomologyProfile& a, const HomologyProfile& b) {
    return a.degree == b.degree && a.mu == b.mu && a.betti == b.betti && a.torsion == b.torsion;
}

WeightSystem ChainCycleForecast::normalized() const { return WeightSystem(raw_weights, raw_degree).normalized(); }

ChainCycleForecast chain_cycle_closed_forms(const SplitDecomposition& s, const std::array<Integer, 5>& a) {
    if (s.m3_group.size() != 2 || s.m2_group.size() != 3 || s.v.size() != 5)
        throw Error(ErrorKind::PreconditionFailed, "closed forms need a 2+3 split of five variables");
    const std::size_t h = s.m3_group[0], t = s.m3_group[1];
    const Integer& m2 = s.m2;
    const Integer& m3 = s.m3;
    const Integer& v1 = s.v[t];
    if (a[0] != m2 || s.v[h] != 1)
        throw Error(ErrorKind::PreconditionFailed, "chain head exponent must equal m2");
    if (a[1] * v1 != m2 - 1) throw Error(ErrorKind::PreconditionFailed, "chain tail exponent must be (m2-1)/v1");
    if (a[2] * a[3] * a[4] + 1 != m3)
        throw Error(ErrorKind::PreconditionFailed, "cycle exponents violate a2 a3 a4 + 1 = m3");

    ChainCycleForecast f;
    const Integer d = m2 * m3;
    f.raw_degree = d * (m2 - 1);
    f.raw_weights.assign(5, Integer(0));
    const Integer q = m2 * (m2 - 1);
    f.raw_weights[h] = m3 * v1 * (a[1] - 1);
    f.raw_weights[t] = m3 * m2 * v1;
    f.raw_weights[s.m2_group[0]] = q * (1 - a[4] + a[3] * a[4]);
    f.raw_weights[s.m2_group[1]] = q * (1 - a[2] + a[2] * a[4]);
    f.raw_weights[s.m2_group[2]] = q * (1 - a[3] + a[2] * a[3]);
    f.mu = (a[1] * (m2 - 1) + 1) * (m3 - 1);

    const Integer g = gcd(a[1], m3);
    if (g == 1) {
        f.torsion = {m3};
    } else if (g == 2) {
        f.torsion = {d};
    } else {
        f.torsion = {d};
        for (Integer i = 0; i < g - 2; ++i) f.torsion.push_back(m2);
    }
    return f;
}

ChainCycleForecast chain_cycle_closed_forms(const WeightSystem& ws, const InvertiblePolynomial& p) {
    auto parts = chain_cycle_parts(p);
    if (!parts || ws.size() != 5) throw Error(ErrorKind::PreconditionFailed, "not a chain-cycle polynomial");
    if (!satisfies(p, ws)) throw Error(ErrorKind::PreconditionFailed, "polynomial does not match " + ws.str());
    SplitDecomposition s = split(ws, parts->chain->variables);
    s.m3_group = parts->chain->variables;
    s.m2_group = parts->cycle->variables;
    const auto& ce = parts->chain->exponents;
    const auto& ye = parts->cycle->exponents;
    return chain_cycle_closed_forms(s, {ce[0], ce[1], ye[0], ye[1], ye[2]});
}

std::pair<InvertiblePolynomial, WeightSystem> swap_twin(const InvertiblePolynomial& p, CycleSwap which) {
    auto parts = chain_cycle_parts(p);
    if (!parts) throw Error(ErrorKind::PreconditionFailed, "twin swap needs a chain-cycle polynomial");
    if (which.first > 2 || which.second > 2)
        throw Error(ErrorKind::InvalidInput, "cycle positions must be 0, 1 or 2");
    WeightSystem ws = solve_weights(p);
    if (betti(ws) != 0) throw Error(ErrorKind::PreconditionFailed, "twin swap needs a rational homology sphere");
    std::vector<Block> blocks = p.blocks();
    for (auto& b : blocks) {
        if (b.kind != BlockKind::Cycle) continue;
        std::swap(b.exponents[which.first], b.exponents[which.second]);
    }
    InvertiblePolynomial g(p.n_vars(), std::move(blocks));
    WeightSystem gw = solve_weights(g);
    return {std::move(g), std::move(gw)};
}

namespace {

template <class F>
void attempt(std::vector<std::string>& errors, const char* stage, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        errors.push_back(std::string(stage) + ": " + e.what());
    }
}

bool forecast_matches(const ChainCycleForecast& f, const WeightSystem& dual, const HomologyProfile& prof) {
    return f.normalized() == dual && f.mu == prof.mu && f.torsion == prof.torsion && prof.betti == 0;
}

}  // namespace

std::vector<DualReport> pipeline(const WeightSystem& ws) {
    std::vector<DualReport> out;
    std::optional<HomologyProfile> source_profile;
    std::string source_error;
    try {
        source_profile = homology_profile(ws);
    } catch (const std::exception& e) {
        source_error = std::string("source profile: ") + e.what();
    }
    const SasakiVerdict source_verdict = se_certificate(ws);

    for (auto& p : enumerate_representations(ws)) {
        DualReport r{p, classify(p), ws, source_profile, source_verdict, {}, {}, {}, {}, false, {}, {}};
        if (!source_error.empty()) r.errors.push_back(source_error);
        attempt(r.errors, "dual", [&] {
            auto [t, tw] = bh_dual(p);
            r.dual = std::move(t);
            r.dual_weights = std::move(tw);
            r.dual_verdict = se_certificate(*r.dual_weights);
        });
        if (r.dual_weights) attempt(r.errors, "dual profile", [&] { r.dual_profile = homology_profile(*r.dual_weights); });
        if (r.source_profile && r.dual_profile) r.twin = is_twin(*r.source_profile, *r.dual_profile);

        if (r.dual_profile && chain_cycle_parts(p)) {
            std::optional<ChainCycleForecast> f;
            try {
                f = chain_cycle_closed_forms(ws, p);
            } catch (const Error&) {
                // Outside the closed-form hypotheses; nothing to compare.
            }
            if (f) {
                r.closed_form_agrees = forecast_matches(*f, *r.dual_weights, *r.dual_profile);
                if (!*r.closed_form_agrees) r.errors.push_back("closed forms disagree with the transposed system");
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bhlink
