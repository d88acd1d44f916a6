#include "bhlink/representation.hpp"

#include "bhlink/errors.hpp"

#include <algorithm>
#include <functional>

namespace bhlink {

namespace {

using Vars = std::vector<std::size_t>;

// Exponent e with e*w_var + w_link = d, or nothing if not a positive integer >= floor.
std::optional<Integer> forced(const WeightSystem& ws, std::size_t var, const Integer& link_weight, long floor) {
    Integer rest = ws.degree() - link_weight;
    if (rest <= 0 || !divides(ws.weight(var), rest)) return std::nullopt;
    Integer e = rest / ws.weight(var);
    if (e < floor) return std::nullopt;
    return e;
}

void chain_candidates(const WeightSystem& ws, Vars order, std::vector<Block>& out) {
    std::vector<Integer> exps;
    for (std::size_t j = 0; j < order.size(); ++j) {
        auto e = j == 0 ? forced(ws, order[0], 0, 2) : forced(ws, order[j], ws.weight(order[j - 1]), 1);
        if (!e) return;
        exps.push_back(*e);
    }
    out.push_back(Block::chain(std::move(order), std::move(exps)));
}

void cycle_candidates(const WeightSystem& ws, const Vars& order, std::vector<Block>& out) {
    std::vector<Integer> exps;
    for (std::size_t j = 0; j < order.size(); ++j) {
        std::size_t prev = order[j == 0 ? order.size() - 1 : j - 1];
        auto e = forced(ws, order[j], ws.weight(prev), 1);
        if (!e) return;
        exps.push_back(*e);
    }
    out.push_back(Block::cycle(order, std::move(exps)));
}

std::vector<Block> block_candidates(const WeightSystem& ws, Vars vars) {
    std::vector<Block> out;
    std::sort(vars.begin(), vars.end());
    if (vars.size() == 1) {
        if (auto e = forced(ws, vars[0], 0, 2)) out.push_back(Block::fermat(vars[0], *e));
        return out;
    }
    Vars perm = vars;
    do chain_candidates(ws, perm, out);
    while (std::next_permutation(perm.begin(), perm.end()));
    // Cycles up to rotation: fix the smallest index in front.
    Vars tail(vars.begin() + 1, vars.end());
    do {
        Vars order{vars[0]};
        order.insert(order.end(), tail.begin(), tail.end());
        cycle_candidates(ws, order, out);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

// Calls f with each set partition of {0..n-1} as a list of blocks.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<Vars>&)>& f) {
    std::vector<Vars> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            f(blocks);
            return;
        }
        // Index loop: the recursion appends to `blocks`.
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k].push_back(i);
            rec(i + 1);
            blocks[k].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

}  // namespace

std::vector<InvertiblePolynomial> enumerate_representations(const WeightSystem& ws) {
    const std::size_t n = ws.size();
    std::vector<InvertiblePolynomial> out;
    for_each_partition(n, [&](const std::vector<Vars>& parts) {
        std::vector<std::vector<Block>> options;
        for (const auto& p : parts) {
            options.push_back(block_candidates(ws, p));
            if (options.back().empty()) return;
        }
        std::vector<Block> chosen;
        std::function<void(std::size_t)> pick = [&](std::size_t k) {
            if (k == options.size()) {
                InvertiblePolynomial poly(n, chosen);
                if (validate(poly).empty()) out.push_back(std::move(poly));
                return;
            }
            for (const auto& b : options[k]) {
                chosen.push_back(b);
                pick(k + 1);
                chosen.pop_back();
            }
        };
        pick(0);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<ChainCycleParts> chain_cycle_parts(const InvertiblePolynomial& p) {
    const Block* chain = nullptr;
    const Block* cycle = nullptr;
    for (const auto& b : p.blocks()) {
        if (b.kind == BlockKind::Chain && b.variables.size() == 2 && !chain)
            chain = &b;
        else if (b.kind == BlockKind::Cycle && b.variables.size() == 3 && !cycle)
            cycle = &b;
        else
            return std::nullopt;
    }
    if (!chain || !cycle) return std::nullopt;
    return ChainCycleParts{chain, cycle};
}

InvertiblePolynomial find_chain_cycle(const WeightSystem& ws) {
    if (ws.size() != 5) throw Error(ErrorKind::PreconditionFailed, "chain-cycle search needs 5 variables");
    std::optional<InvertiblePolynomial> best;
    std::vector<Integer> best_key;
    for (auto& p : enumerate_representations(ws)) {
        auto parts = chain_cycle_parts(p);
        if (!parts) continue;
        Vars g3 = parts->chain->variables;
        std::sort(g3.begin(), g3.end());
        try {
            split(ws, g3);
        } catch (const Error&) {
            continue;
        }
        std::vector<Integer> key = parts->chain->exponents;
        key.insert(key.end(), parts->cycle->exponents.begin(), parts->cycle->exponents.end());
        // Candidates arrive in canonical order, so strict < keeps the first on ties.
        if (!best || key < best_key) {
            best = std::move(p);
            best_key = std::move(key);
        }
    }
    if (!best) throw Error(ErrorKind::NoRepresentation, "no chain-cycle representation of " + ws.str());
    return *best;
}

}  // namespace bhlink
