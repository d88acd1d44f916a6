#include "bhlink/weights.hpp"

#include "bhlink/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bhlink {

WeightSystem::WeightSystem(std::vector<Integer> weights, Integer degree)
    : weights_(std::move(weights)), degree_(std::move(degree)) {
    if (weights_.empty()) throw Error(ErrorKind::InvalidInput, "weight system has no weights");
    if (degree_ <= 0) throw Error(ErrorKind::InvalidInput, "degree must be positive");
    for (const auto& w : weights_) {
        if (w <= 0) throw Error(ErrorKind::InvalidInput, "weights must be positive in " + str());
        if (w >= degree_) throw Error(ErrorKind::InvalidInput, "each weight must be below the degree in " + str());
    }
}

WeightSystem::WeightSystem(std::initializer_list<long> weights, long degree)
    : WeightSystem(std::vector<Integer>(weights.begin(), weights.end()), Integer(degree)) {}

Integer WeightSystem::weight_sum() const {
    Integer s = 0;
    for (const auto& w : weights_) s += w;
    return s;
}

WeightSystem WeightSystem::normalized() const {
    Integer g = gcd(gcd_of(weights_), degree_);
    if (g == 1) return *this;
    std::vector<Integer> w;
    w.reserve(weights_.size());
    for (const auto& x : weights_) w.push_back(x / g);
    return WeightSystem(std::move(w), degree_ / g);
}

bool WeightSystem::is_normalized() const { return gcd(gcd_of(weights_), degree_) == 1; }

WeightSystem WeightSystem::permuted(std::span<const std::size_t> order) const {
    if (order.size() != weights_.size()) throw Error(ErrorKind::InvalidInput, "permutation length mismatch");
    std::vector<Integer> w;
    for (auto i : order) w.push_back(weights_.at(i));
    return WeightSystem(std::move(w), degree_);
}

std::vector<Integer> WeightSystem::sorted_weights() const {
    std::vector<Integer> w = weights_;
    std::sort(w.begin(), w.end());
    return w;
}

std::string WeightSystem::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i].get_str();
    os << "), d=" << degree_.get_str();
    return os.str();
}

std::vector<LinkFactor> ReducedWeights::factors() const {
    std::vector<LinkFactor> f;
    for (std::size_t i = 0; i < u.size(); ++i) f.push_back({u[i], v[i]});
    return f;
}

WeightSystem solve_weights(const InvertiblePolynomial& p) {
    require_valid(p);
    IntMatrix a = exponent_matrix(p);
    const std::size_t n = a.size();
    // Gauss-Jordan on [A | 1] over the rationals.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(a(r, c));
        m[r][n] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::SingularSystem, "exponent matrix of " + render(p) + " is singular");
        std::swap(m[piv], m[col]);
        Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    // x = A^{-1} 1 = W / d; clear denominators.
    Integer den = 1;
    for (std::size_t r = 0; r < n; ++r) den = lcm(den, m[r][n].get_den());
    std::vector<Integer> w;
    for (std::size_t r = 0; r < n; ++r) {
        Rational scaled = m[r][n] * Rational(den);
        if (scaled <= 0) throw Error(ErrorKind::NonPositiveWeights, "non-positive weight solving " + render(p));
        w.push_back(scaled.get_num());
    }
    Integer g = gcd(gcd_of(w), den);
    for (auto& x : w) x /= g;
    Integer d = den / g;
    for (const auto& x : w)
        if (x >= d)
            throw Error(ErrorKind::NonPositiveWeights, "weight not below degree solving " + render(p));
    return WeightSystem(std::move(w), d);
}

bool satisfies(const InvertiblePolynomial& p, const WeightSystem& ws) {
    if (p.n_vars() != ws.size()) return false;
    IntMatrix a = exponent_matrix(p);
    for (std::size_t r = 0; r < a.size(); ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < a.size(); ++c) s += a(r, c) * ws.weight(c);
        if (s != ws.degree()) return false;
    }
    return true;
}

ReducedWeights reduce(const WeightSystem& ws) {
    ReducedWeights r;
    for (const auto& w : ws.weights()) {
        Integer g = gcd(ws.degree(), w);
        r.u.push_back(ws.degree() / g);
        r.v.push_back(w / g);
    }
    return r;
}

Integer fano_index(const WeightSystem& ws) { return ws.weight_sum() - ws.degree(); }

namespace {

// gcd of the weights with the indices in `skip` removed.
Integer gcd_without(std::span<const Integer> w, std::size_t skip_a, std::size_t skip_b) {
    Integer g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != skip_a && i != skip_b) g = gcd(g, w[i]);
    return g;
}

}  // namespace

bool is_wellformed_space(std::span<const Integer> weights) {
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (gcd_without(weights, i, i) != 1) return false;
    return true;
}

bool is_wellformed_hypersurface(const WeightSystem& ws) {
    const auto& w = ws.weights();
    if (!is_wellformed_space(w)) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!divides(gcd_without(w, i, j), ws.degree())) return false;
    return true;
}

SplitDecomposition split(const WeightSystem& ws, std::span<const std::size_t> m3_group) {
    const std::size_t n = ws.size();
    std::vector<char> in_g3(n, 0);
    for (auto i : m3_group) {
        if (i >= n || in_g3[i]) throw Error(ErrorKind::InvalidInput, "bad split grouping");
        in_g3[i] = 1;
    }
    if (m3_group.empty() || m3_group.size() == n) throw Error(ErrorKind::InvalidInput, "split grouping must be proper");

    SplitDecomposition s;
    const Integer& d = ws.degree();
    std::optional<Integer> m2;
    for (auto i : m3_group) {
        Integer cand = d / gcd(d, ws.weight(i));
        if (m2 && *m2 != cand)
            throw Error(ErrorKind::NoSplit, "m2 disagrees across the m3 group of " + ws.str());
        m2 = cand;
    }
    s.m2 = *m2;
    s.m3 = d / s.m2;
    if (gcd(s.m2, s.m3) != 1) throw Error(ErrorKind::NoSplit, "m2 and m3 are not coprime for " + ws.str());
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& m = in_g3[i] ? s.m3 : s.m2;
        if (!divides(m, ws.weight(i)))
            throw Error(ErrorKind::NoSplit, to_string(m) + " does not divide w" + std::to_string(i) + " of " + ws.str());
        s.v.push_back(ws.weight(i) / m);
        (in_g3[i] ? s.m3_group : s.m2_group).push_back(i);
    }
    return s;
}

}  // namespace bhlink
