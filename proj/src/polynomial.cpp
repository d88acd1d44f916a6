#include "bhlink/polynomial.hpp"

#include "bhlink/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bhlink {

Block Block::fermat(std::size_t var, Integer exponent) {
    return Block{BlockKind::Fermat, {var}, {std::move(exponent)}};
}

Block Block::chain(std::vector<std::size_t> vars, std::vector<Integer> exponents) {
    return Block{BlockKind::Chain, std::move(vars), std::move(exponents)};
}

Block Block::cycle(std::vector<std::size_t> vars, std::vector<Integer> exponents) {
    return Block{BlockKind::Cycle, std::move(vars), std::move(exponents)};
}

bool operator<(const Block& a, const Block& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.variables != b.variables) return a.variables < b.variables;
    return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(), b.exponents.begin(),
                                        b.exponents.end());
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorKind::InvalidInput, "matrix must be square");
        std::size_t c = 0;
        for (long v : row) (*this)(r, c++) = v;
        ++r;
    }
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Integer IntMatrix::determinant() const {
    // Bareiss fraction-free elimination.
    if (n_ == 0) return 1;
    std::vector<Integer> m = data_;
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n_ + c]; };
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n_ && at(p, k) == 0) ++p;
            if (p == n_) return 0;
            for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i)
            for (std::size_t j = k + 1; j < n_; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }
    return sign * at(n_ - 1, n_ - 1);
}

std::string TypeLabel::str() const {
    switch (type) {
        case PolynomialType::BP: return "BP";
        case PolynomialType::Chain: return "Chain";
        case PolynomialType::Cycle: return "Cycle";
        case PolynomialType::BPChain: return "BP-Chain";
        case PolynomialType::BPCycle: return "BP-Cycle";
        case PolynomialType::ChainCycle: return "Chain-Cycle";
        case PolynomialType::CycleCycle: return "Cycle-Cycle";
        case PolynomialType::Mixed: break;
    }
    std::string s = "Mixed(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += to_string(blocks[i]);
    }
    return s + ")";
}

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Fermat: return "Fermat";
        case BlockKind::Chain: return "Chain";
        case BlockKind::Cycle: return "Cycle";
    }
    return "?";
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::NotAPartition: return "blocks do not partition the variables";
        case Violation::VariableOutOfRange: return "variable index out of range";
        case Violation::EmptyBlock: return "empty block";
        case Violation::ExponentCountMismatch: return "exponent count differs from block length";
        case Violation::FermatArity: return "Fermat block must hold one variable";
        case Violation::FermatExponentTooSmall: return "Fermat exponent below 2";
        case Violation::ChainTooShort: return "chain needs at least 2 variables";
        case Violation::ChainHeadTooSmall: return "chain head exponent below 2";
        case Violation::ChainExponentTooSmall: return "chain exponent below 1";
        case Violation::CycleTooShort: return "cycle needs at least 2 variables";
        case Violation::CycleExponentTooSmall: return "cycle exponent below 1";
        case Violation::EvenCycleDegenerate: return "even cycle with unit exponents at alternate positions";
        case Violation::SingularMatrix: return "exponent matrix is singular";
    }
    return "?";
}

namespace {

void canonicalize(Block& b) {
    if (b.kind != BlockKind::Cycle || b.variables.empty()) return;
    auto pos = std::min_element(b.variables.begin(), b.variables.end()) - b.variables.begin();
    std::rotate(b.variables.begin(), b.variables.begin() + pos, b.variables.end());
    if (static_cast<std::size_t>(pos) < b.exponents.size())
        std::rotate(b.exponents.begin(), b.exponents.begin() + pos, b.exponents.end());
}

bool structurally_sound(const InvertiblePolynomial& p, std::vector<Violation>* out) {
    std::vector<int> seen(p.n_vars(), 0);
    bool ok = true;
    auto flag = [&](Violation v) {
        ok = false;
        if (out && std::find(out->begin(), out->end(), v) == out->end()) out->push_back(v);
    };
    for (const auto& b : p.blocks()) {
        if (b.variables.empty()) flag(Violation::EmptyBlock);
        if (b.variables.size() != b.exponents.size()) flag(Violation::ExponentCountMismatch);
        for (auto v : b.variables) {
            if (v >= p.n_vars()) {
                flag(Violation::VariableOutOfRange);
                continue;
            }
            ++seen[v];
        }
    }
    for (int s : seen)
        if (s != 1) flag(Violation::NotAPartition);
    return ok;
}

std::size_t predecessor(const Block& b, std::size_t j) {
    return j == 0 ? b.variables.back() : b.variables[j - 1];
}

}  // namespace

InvertiblePolynomial::InvertiblePolynomial(std::size_t n_vars, std::vector<Block> blocks)
    : n_vars_(n_vars), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) canonicalize(b);
    std::sort(blocks_.begin(), blocks_.end());
}

bool operator<(const InvertiblePolynomial& a, const InvertiblePolynomial& b) {
    if (a.n_vars_ != b.n_vars_) return a.n_vars_ < b.n_vars_;
    return a.blocks_ < b.blocks_;
}

std::vector<Violation> validate(const InvertiblePolynomial& p) {
    std::vector<Violation> out;
    bool sound = structurally_sound(p, &out);
    auto flag = [&](Violation v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    for (const auto& b : p.blocks()) {
        const auto& e = b.exponents;
        if (b.variables.size() != e.size() || e.empty()) continue;
        switch (b.kind) {
            case BlockKind::Fermat:
                if (e.size() != 1) flag(Violation::FermatArity);
                if (e[0] < 2) flag(Violation::FermatExponentTooSmall);
                break;
            case BlockKind::Chain:
                if (e.size() < 2) flag(Violation::ChainTooShort);
                if (e[0] < 2) flag(Violation::ChainHeadTooSmall);
                for (std::size_t j = 1; j < e.size(); ++j)
                    if (e[j] < 1) flag(Violation::ChainExponentTooSmall);
                break;
            case BlockKind::Cycle: {
                if (e.size() < 2) flag(Violation::CycleTooShort);
                bool any_small = false;
                for (const auto& x : e)
                    if (x < 1) any_small = true;
                if (any_small) flag(Violation::CycleExponentTooSmall);
                if (e.size() % 2 == 0) {
                    bool even_ones = true, odd_ones = true;
                    for (std::size_t j = 0; j < e.size(); ++j) {
                        if (e[j] != 1) (j % 2 == 0 ? even_ones : odd_ones) = false;
                    }
                    if (even_ones || odd_ones) flag(Violation::EvenCycleDegenerate);
                }
                break;
            }
        }
    }
    if (sound && exponent_matrix(p).determinant() == 0) flag(Violation::SingularMatrix);
    return out;
}

void require_valid(const InvertiblePolynomial& p) {
    auto v = validate(p);
    if (v.empty()) return;
    std::string msg = "invalid polynomial " + render(p) + ":";
    for (auto x : v) msg += " " + to_string(x) + ";";
    throw Error(ErrorKind::InvalidInput, msg);
}

IntMatrix exponent_matrix(const InvertiblePolynomial& p) {
    if (!structurally_sound(p, nullptr))
        throw Error(ErrorKind::InvalidInput, "blocks do not form a partition of the variables");
    IntMatrix a(p.n_vars());
    for (const auto& b : p.blocks()) {
        for (std::size_t j = 0; j < b.variables.size(); ++j) {
            std::size_t v = b.variables[j];
            a(v, v) = b.exponents[j];
            bool linked = b.kind == BlockKind::Cycle || (b.kind == BlockKind::Chain && j > 0);
            if (linked) a(v, predecessor(b, j)) += 1;
        }
    }
    return a;
}

namespace {

struct RowShape {
    // Candidate (power column, link column or npos) readings of a row.
    std::vector<std::pair<std::size_t, std::size_t>> readings;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::optional<InvertiblePolynomial> assemble(const IntMatrix& a, const std::vector<std::size_t>& power,
                                             const std::vector<std::size_t>& link) {
    const std::size_t n = a.size();
    // row r: z_{power[r]}^{a(r,power[r])} * z_{link[r]}
    std::vector<std::size_t> row_of(n, npos);
    for (std::size_t r = 0; r < n; ++r) row_of[power[r]] = r;
    std::vector<std::size_t> pred(n, npos), succ(n, npos);
    for (std::size_t r = 0; r < n; ++r) {
        if (link[r] == npos) continue;
        std::size_t v = power[r], p = link[r];
        if (succ[p] != npos) return std::nullopt;
        pred[v] = p;
        succ[p] = v;
    }
    std::vector<char> used(n, 0);
    std::vector<Block> blocks;
    auto exp_of = [&](std::size_t v) { return a(row_of[v], v); };
    for (std::size_t v = 0; v < n; ++v) {
        if (pred[v] != npos) continue;
        std::vector<std::size_t> vars;
        std::vector<Integer> exps;
        for (std::size_t x = v; x != npos; x = succ[x]) {
            vars.push_back(x);
            exps.push_back(exp_of(x));
            used[x] = 1;
        }
        if (vars.size() == 1)
            blocks.push_back(Block::fermat(v, exps[0]));
        else
            blocks.push_back(Block::chain(std::move(vars), std::move(exps)));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::vector<std::size_t> vars;
        std::vector<Integer> exps;
        std::size_t x = v;
        do {
            vars.push_back(x);
            exps.push_back(exp_of(x));
            used[x] = 1;
            x = succ[x];
        } while (x != v);
        if (vars.size() == 1) return std::nullopt;
        blocks.push_back(Block::cycle(std::move(vars), std::move(exps)));
    }
    return InvertiblePolynomial(n, std::move(blocks));
}

}  // namespace

InvertiblePolynomial from_exponent_matrix(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<RowShape> shapes(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c < n; ++c) {
            if (a(r, c) < 0) throw Error(ErrorKind::NotInvertibleShape, "negative exponent");
            if (a(r, c) != 0) nz.push_back(c);
        }
        if (nz.size() == 1) {
            shapes[r].readings.push_back({nz[0], npos});
        } else if (nz.size() == 2) {
            // Prefer the diagonal reading so that the canonical layout round-trips.
            auto [x, y] = std::pair{nz[0], nz[1]};
            if (y == r) std::swap(x, y);
            if (a(r, y) == 1) shapes[r].readings.push_back({x, y});
            if (a(r, x) == 1) shapes[r].readings.push_back({y, x});
        }
        if (shapes[r].readings.empty())
            throw Error(ErrorKind::NotInvertibleShape, "row " + std::to_string(r) + " is not a block monomial");
    }

    std::vector<std::size_t> power(n), link(n);
    std::vector<char> taken(n, 0);
    std::optional<InvertiblePolynomial> found;
    std::function<void(std::size_t)> search = [&](std::size_t r) {
        if (found) return;
        if (r == n) {
            found = assemble(a, power, link);
            return;
        }
        for (auto [pc, lc] : shapes[r].readings) {
            if (taken[pc]) continue;
            taken[pc] = 1;
            power[r] = pc;
            link[r] = lc;
            search(r + 1);
            taken[pc] = 0;
            if (found) return;
        }
    };
    search(0);
    if (!found) throw Error(ErrorKind::NotInvertibleShape, "matrix is not a sum of chain, cycle and Fermat blocks");
    if (a.determinant() == 0) throw Error(ErrorKind::NotInvertibleShape, "exponent matrix is singular");
    return *found;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& p) {
    require_valid(p);
    InvertiblePolynomial t = from_exponent_matrix(exponent_matrix(p).transposed());
    require_valid(t);
    return t;
}

TypeLabel classify(const InvertiblePolynomial& p) {
    TypeLabel label{PolynomialType::Mixed, {}};
    std::size_t fermat = 0, chains = 0, cycles = 0;
    for (const auto& b : p.blocks()) {
        label.blocks.push_back(b.kind);
        switch (b.kind) {
            case BlockKind::Fermat: ++fermat; break;
            case BlockKind::Chain: ++chains; break;
            case BlockKind::Cycle: ++cycles; break;
        }
    }
    bool f = fermat > 0;
    if (chains == 0 && cycles == 0)
        label.type = PolynomialType::BP;
    else if (!f && chains == 1 && cycles == 0)
        label.type = PolynomialType::Chain;
    else if (!f && chains == 0 && cycles == 1)
        label.type = PolynomialType::Cycle;
    else if (f && chains == 1 && cycles == 0)
        label.type = PolynomialType::BPChain;
    else if (f && chains == 0 && cycles == 1)
        label.type = PolynomialType::BPCycle;
    else if (!f && chains == 1 && cycles == 1)
        label.type = PolynomialType::ChainCycle;
    else if (!f && chains == 0 && cycles == 2)
        label.type = PolynomialType::CycleCycle;
    return label;
}

std::string render(const InvertiblePolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& b : p.blocks()) {
        for (std::size_t j = 0; j < b.variables.size(); ++j) {
            if (!first) os << " + ";
            first = false;
            bool linked = b.kind == BlockKind::Cycle || (b.kind == BlockKind::Chain && j > 0);
            if (linked) os << "z" << predecessor(b, j) << "*";
            os << "z" << b.variables[j];
            const Integer& e = j < b.exponents.size() ? b.exponents[j] : Integer(1);
            if (e != 1) os << "^" << e.get_str();
        }
    }
    return os.str();
}

}  // namespace bhlink
