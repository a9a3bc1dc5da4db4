#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chowcfg {

// Exact rational scalar, the coefficient field everywhere. GMP keeps values
// in lowest terms with positive denominator after every operation; the
// constructors below canonicalize eagerly so that 0 is always 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Accepts "p" or "p/q" with optional leading minus; rejects everything else.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& r);

// splitmix64. Standard-library distributions are implementation defined, so
// every frozen test value goes through this generator instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    long next_long(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational next_rational(long max_num, long max_den) {
        return rat(next_long(-max_num, max_num), next_long(1, max_den));
    }

private:
    std::uint64_t state_;
};

}  // namespace chowcfg
