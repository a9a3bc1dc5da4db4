#include "chowcfg/stability.hpp"

#include <algorithm>
#include <bit>

namespace chowcfg {

namespace {

// Visits every nonempty mask exactly once in Gray-code order, maintaining
// the running subset sums of the given weight vectors.
template <class Fn>
void scan_subset_sums(const std::vector<const std::vector<Rational>*>& weights, int m, Fn&& fn) {
    std::vector<Rational> sums(weights.size(), Rational(0));
    Mask gray = 0;
    std::uint64_t steps = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < steps; ++i) {
        Mask next = static_cast<Mask>(i ^ (i >> 1));
        Mask flipped = gray ^ next;
        int bit = std::countr_zero(flipped);
        bool added = (next & flipped) != 0;
        for (size_t w = 0; w < weights.size(); ++w) {
            if (added) sums[w] += (*weights[w])[bit];
            else sums[w] -= (*weights[w])[bit];
        }
        gray = next;
        if (!fn(gray, sums)) return;
    }
}

bool is_proper(Mask I, int m) { return I != (Mask{1} << m) - 1; }

}  // namespace

Stability::Stability(std::vector<Rational> weights) : weights_(std::move(weights)) {
    int m = static_cast<int>(weights_.size());
    if (m < 3) throw std::invalid_argument("stability needs at least 3 weights");
    if (m > kMaxArity) throw std::invalid_argument("stability arity exceeds the enumeration guard");
    Rational sum(0);
    for (const Rational& w : weights_) sum += w;
    if (sum != 2) throw std::invalid_argument("stability weights must sum to 2");
}

Rational Stability::value(Mask I) const {
    Rational s(0);
    for (int i : mask_members(I)) s += weights_[i - 1];
    return s;
}

Stability canonical(int m) {
    if (m < 3) throw std::invalid_argument("canonical stability needs m >= 3");
    return Stability(std::vector<Rational>(m, rat(2, m)));
}

Rational epsilon_bound(int n) { return rat(2 * n - 1, n * (n + 1)); }

Rational default_epsilon(int n) { return rat(2 * n - 1, 2 * n * (n + 1)); }

Stability theta_pm(int n, Sign sign, std::optional<Rational> eps) {
    if (n < 2) throw std::invalid_argument("theta_pm needs n >= 2");
    Rational e = eps.value_or(default_epsilon(n));
    if (sgn(e) <= 0 || e >= epsilon_bound(n))
        throw std::invalid_argument("epsilon outside (0, (2n-1)/(n(n+1)))");
    Rational head = rat(1, n), tail = rat(1, n);
    Rational spread = e / (2 * n - 1);
    if (sign == Sign::plus) {
        head += e;
        tail -= spread;
    } else {
        head -= e;
        tail += spread;
    }
    std::vector<Rational> w(2 * n, tail);
    w[0] = head;
    return Stability(std::move(w));
}

bool is_nontrivial(const Stability& theta) {
    return std::all_of(theta.weights().begin(), theta.weights().end(),
                       [](const Rational& w) { return sgn(w) > 0 && w < 1; });
}

bool is_coprime(const Stability& theta) {
    int m = theta.arity();
    bool ok = true;
    scan_subset_sums({&theta.weights()}, m, [&](Mask I, const std::vector<Rational>& s) {
        if (is_proper(I, m) && s[0] == 1) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_deformation(const Stability& theta, const Stability& theta_prime) {
    if (theta.arity() != theta_prime.arity())
        throw std::invalid_argument("deformation check needs equal arity");
    int m = theta.arity();
    bool ok = true;
    scan_subset_sums({&theta.weights(), &theta_prime.weights()}, m,
                     [&](Mask I, const std::vector<Rational>& s) {
                         if (!is_proper(I, m)) return true;
                         if ((s[0] < 1 && !(s[1] < 1)) || (s[1] <= 1 && !(s[0] <= 1))) {
                             ok = false;
                             return false;
                         }
                         return true;
                     });
    return ok;
}

bool ForbiddenFamily::contains(Mask I) const {
    return std::find(all.begin(), all.end(), I) != all.end();
}

ForbiddenFamily forbidden(const Stability& theta) {
    int m = theta.arity();
    ForbiddenFamily fam;
    fam.m = m;
    scan_subset_sums({&theta.weights()}, m, [&](Mask I, const std::vector<Rational>& s) {
        if (s[0] > 1) fam.all.push_back(I);
        return true;
    });
    auto by_size_lex = [](Mask a, Mask b) {
        if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
        return subset_lex_less(a, b);
    };
    std::sort(fam.all.begin(), fam.all.end(), by_size_lex);

    bool positive = std::all_of(theta.weights().begin(), theta.weights().end(),
                                [](const Rational& w) { return sgn(w) > 0; });
    if (positive) {
        // Dropping one index can only lower theta_I, so minimality reduces to
        // checking the one-element-smaller subsets.
        for (Mask I : fam.all) {
            bool minimal = true;
            for (int i : mask_members(I)) {
                Mask J = I & ~(Mask{1} << (i - 1));
                if (J != 0 && theta.value(J) > 1) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) fam.minimal.push_back(I);
        }
    } else {
        for (Mask I : fam.all) {
            bool minimal = std::none_of(fam.all.begin(), fam.all.end(), [&](Mask J) {
                return J != I && (J & I) == J;
            });
            if (minimal) fam.minimal.push_back(I);
        }
    }
    std::sort(fam.minimal.begin(), fam.minimal.end(), by_size_lex);
    return fam;
}

std::optional<ThetaPmShape> match_theta_pm(const Stability& theta) {
    int m = theta.arity();
    if (m % 2 != 0 || m < 4) return std::nullopt;
    int n = m / 2;
    const auto& w = theta.weights();
    for (int i = 2; i < m; ++i)
        if (w[i] != w[1]) return std::nullopt;
    Rational head_dev = w[0] - rat(1, n);
    if (sgn(head_dev) == 0) return std::nullopt;
    ThetaPmShape shape;
    shape.sign = sgn(head_dev) > 0 ? Sign::plus : Sign::minus;
    shape.n = n;
    shape.eps = abs(head_dev);
    if (shape.eps >= epsilon_bound(n)) return std::nullopt;
    Rational expect_tail = rat(1, n) + (shape.sign == Sign::plus ? -shape.eps : shape.eps) / (2 * n - 1);
    if (w[1] != expect_tail) return std::nullopt;
    return shape;
}

}  // namespace chowcfg
