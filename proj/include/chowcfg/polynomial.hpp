#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowcfg/rational.hpp"

namespace chowcfg {

// Sparse multivariate polynomial over Q with a fixed variable count. Terms
// are kept in a map from exponent vectors (lexicographic key order, variable
// 0 most significant) to nonzero coefficients; zero coefficients are dropped
// eagerly, so equality is map equality.
class Polynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);  // 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const = default;

    Polynomial pow(int k) const;

    // Ring map sending variable i to images[i]; images live in a common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_arity(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace chowcfg
