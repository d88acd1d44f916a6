#pragma once
#include "bhlink/arith.hpp"
#include "bhlink/divisor.hpp"
#include "bhlink/polynomial.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bhlink {

// Weights w_0..w_n of a quasi-homogeneous hypersurface of degree d.
// Construction rejects non-positive weights and weights not below d.
class WeightSystem {
public:
    WeightSystem(std::vector<Integer> weights, Integer degree);
    WeightSystem(std::initializer_list<long> weights, long degree);

    const std::vector<Integer>& weights() const noexcept { return weights_; }
    const Integer& weight(std::size_t i) const { return weights_.at(i); }
    const Integer& degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return weights_.size(); }

    Integer weight_sum() const;
    // Divides weights and degree by their joint gcd.
    WeightSystem normalized() const;
    bool is_normalized() const;
    WeightSystem permuted(std::span<const std::size_t> order) const;
    std::vector<Integer> sorted_weights() const;

    std::string str() const;
    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<Integer> weights_;
    Integer degree_;
};

struct ReducedWeights {
    std::vector<Integer> u;
    std::vector<Integer> v;

    std::vector<LinkFactor> factors() const;
};

struct SplitDecomposition {
    Integer m2;
    Integer m3;
    std::vector<Integer> v;
    std::vector<std::size_t> m3_group;
    std::vector<std::size_t> m2_group;
};

WeightSystem solve_weights(const InvertiblePolynomial& p);
// Exact check of A W = d 1 for the given (w, d).
bool satisfies(const InvertiblePolynomial& p, const WeightSystem& ws);

ReducedWeights reduce(const WeightSystem& ws);
Integer fano_index(const WeightSystem& ws);
bool is_wellformed_space(std::span<const Integer> weights);
bool is_wellformed_hypersurface(const WeightSystem& ws);

inline constexpr std::size_t kDefaultM3Group[] = {0, 1};
SplitDecomposition split(const WeightSystem& ws, std::span<const std::size_t> m3_group = kDefaultM3Group);

}  // namespace bhlink
