#pragma once
#include "bhlink/arith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bhlink {

enum class BlockKind { Fermat, Chain, Cycle };

// One atomic summand. Monomial j of a chain or cycle is
// z_{v[j]}^{e[j]} * z_{v[j-1]}; a chain's head (j = 0) is z_{v[0]}^{e[0]},
// a cycle takes v[-1] to mean its last variable.
struct Block {
    BlockKind kind;
    std::vector<std::size_t> variables;
    std::vector<Integer> exponents;

    static Block fermat(std::size_t var, Integer exponent);
    static Block chain(std::vector<std::size_t> vars, std::vector<Integer> exponents);
    static Block cycle(std::vector<std::size_t> vars, std::vector<Integer> exponents);

    friend bool operator==(const Block&, const Block&) = default;
};

bool operator<(const Block& a, const Block& b);

class IntMatrix {
public:
    explicit IntMatrix(std::size_t n = 0);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t size() const noexcept { return n_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    IntMatrix transposed() const;
    Integer determinant() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Integer> data_;
};

enum class PolynomialType { BP, Chain, Cycle, BPChain, BPCycle, ChainCycle, CycleCycle, Mixed };

struct TypeLabel {
    PolynomialType type;
    // Block kinds in canonical order; this is what distinguishes Mixed labels.
    std::vector<BlockKind> blocks;

    std::string str() const;
    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

enum class Violation {
    NotAPartition,
    VariableOutOfRange,
    EmptyBlock,
    ExponentCountMismatch,
    FermatArity,
    FermatExponentTooSmall,
    ChainTooShort,
    ChainHeadTooSmall,
    ChainExponentTooSmall,
    CycleTooShort,
    CycleExponentTooSmall,
    EvenCycleDegenerate,
    SingularMatrix,
};

std::string to_string(Violation v);
std::string to_string(BlockKind k);

// Blocks are stored in canonical order: Fermat, chains, cycles, each sorted
// by leading variable, with cycles rotated to start at their smallest index.
class InvertiblePolynomial {
public:
    InvertiblePolynomial(std::size_t n_vars, std::vector<Block> blocks);

    std::size_t n_vars() const noexcept { return n_vars_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    friend bool operator==(const InvertiblePolynomial&, const InvertiblePolynomial&) = default;
    friend bool operator<(const InvertiblePolynomial& a, const InvertiblePolynomial& b);

private:
    std::size_t n_vars_;
    std::vector<Block> blocks_;
};

std::vector<Violation> validate(const InvertiblePolynomial& p);
void require_valid(const InvertiblePolynomial& p);

// Row i holds the monomial in which z_i carries its block exponent.
IntMatrix exponent_matrix(const InvertiblePolynomial& p);
InvertiblePolynomial from_exponent_matrix(const IntMatrix& a);
// Throws InvalidInput when the transposed matrix is not a valid polynomial,
// as for a chain whose last exponent is 1.
InvertiblePolynomial transpose(const InvertiblePolynomial& p);
TypeLabel classify(const InvertiblePolynomial& p);

// e.g. "z0^3 + z0*z1^2 + z4*z2^5 + z2*z3^22 + z3*z4^8"
std::string render(const InvertiblePolynomial& p);

}  // namespace bhlink
