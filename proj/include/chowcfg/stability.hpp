#pragma once

#include <optional>
#include <vector>

#include "chowcfg/rational.hpp"
#include "chowcfg/subsets.hpp"

namespace chowcfg {

// Stability condition for the m-subspace quiver with dimension vector
// (1,...,1;2), normalized to sink weight -1. Holds the source weights
// theta_1..theta_m, which must sum to 2; m is capped at kMaxArity because
// every predicate below enumerates the 2^m subset sums.
class Stability {
public:
    explicit Stability(std::vector<Rational> weights);

    int arity() const { return static_cast<int>(weights_.size()); }
    const std::vector<Rational>& weights() const { return weights_; }
    Rational weight(int i) const { return weights_[i - 1]; }  // i in 1..m

    // theta_I = sum of the weights over I
    Rational value(Mask I) const;

    bool operator==(const Stability& o) const = default;

private:
    std::vector<Rational> weights_;
};

// theta^0 = (2/m, ..., 2/m)
Stability canonical(int m);

enum class Sign { plus, minus };

// Bound and default for the deformation parameter: the closed-form forbidden
// families below hold for every 0 < eps < (2n-1)/(n(n+1)); the default is
// half of that.
Rational epsilon_bound(int n);
Rational default_epsilon(int n);

// theta^+ = (1/n + eps, 1/n - eps/(2n-1), ...), theta^- with flipped signs;
// m = 2n entries. Throws if eps is outside (0, epsilon_bound(n)).
Stability theta_pm(int n, Sign sign, std::optional<Rational> eps = std::nullopt);

inline Stability theta_plus(int n, std::optional<Rational> eps = std::nullopt) {
    return theta_pm(n, Sign::plus, eps);
}
inline Stability theta_minus(int n, std::optional<Rational> eps = std::nullopt) {
    return theta_pm(n, Sign::minus, eps);
}

// Stable locus non-empty: 0 < theta_i < 1 for all i.
bool is_nontrivial(const Stability& theta);

// theta_I != 1 for every nonempty proper subset.
bool is_coprime(const Stability& theta);

// For every nonempty proper I: theta_I < 1 implies theta'_I < 1, and
// theta'_I <= 1 implies theta_I <= 1.
bool is_deformation(const Stability& theta, const Stability& theta_prime);

struct ForbiddenFamily {
    int m = 0;
    std::vector<Mask> all;      // every nonempty I with theta_I > 1, sorted by (size, lex)
    std::vector<Mask> minimal;  // the inclusion-minimal members

    bool contains(Mask I) const;
};

ForbiddenFamily forbidden(const Stability& theta);

// Recognizes the theta_pm presets exactly (arbitrary valid eps); used to
// select closed-form reduction paths.
struct ThetaPmShape {
    int n = 0;
    Sign sign = Sign::plus;
    Rational eps;
};
std::optional<ThetaPmShape> match_theta_pm(const Stability& theta);

}  // namespace chowcfg
