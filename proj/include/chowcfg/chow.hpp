#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowcfg/polynomial.hpp"
#include "chowcfg/subsets.hpp"
#include "chowcfg/torus.hpp"

namespace chowcfg {

// Label of a normal-form basis monomial X_J * Y^k of the ambient ring
// A = Q[X_1..X_m, Y] / (X_i^2 - Y): J squarefree, degree |J| + 2k.
struct ChowLabel {
    Mask J = 0;
    int k = 0;
    int degree() const { return subset_size(J) + 2 * k; }
    bool operator==(const ChowLabel&) const = default;
};

// Term order: degree, then k ascending, then J in subset_lex order. Within
// one degree this lists the squarefree part first and pure Y-powers last.
struct ChowLabelLess {
    bool operator()(const ChowLabel& a, const ChowLabel& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.k != b.k) return a.k < b.k;
        return subset_lex_less(a.J, b.J);
    }
};

// Element of A in canonical normal form: a map from labels to nonzero
// coefficients. Products rewrite X_i^2 -> Y, so the label set stays
// squarefree and the representation is unique.
class ChowElement {
public:
    using TermMap = std::map<ChowLabel, Rational, ChowLabelLess>;

    explicit ChowElement(int m);

    static ChowElement zero(int m) { return ChowElement(m); }
    static ChowElement one(int m);
    static ChowElement X(int m, int i);  // i in 1..m
    static ChowElement Y(int m);
    static ChowElement monomial(int m, const ChowLabel& label, const Rational& c);
    // sum_i coeffs[i-1] * X_i
    static ChowElement linear_form(int m, const std::vector<Rational>& coeffs);

    int arity() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const ChowLabel& label) const;

    void add_term(const ChowLabel& label, const Rational& c);

    ChowElement operator-() const;
    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator*(const ChowElement& o) const;
    ChowElement operator*(const Rational& c) const;
    ChowElement& operator+=(const ChowElement& o);
    ChowElement& operator-=(const ChowElement& o);
    bool operator==(const ChowElement& o) const = default;

    ChowElement pow(int k) const;

    bool is_homogeneous() const;
    int degree() const;  // max term degree, -1 for zero
    ChowElement homogeneous_component(int d) const;

    std::string str() const;

private:
    void check_arity(const ChowElement& o) const;

    int m_;
    TermMap terms_;
};

// All labels of degree d, in the ChowLabelLess order (k ascending, J lex).
std::vector<ChowLabel> graded_basis(int m, int d);

// dim A_d for d = 0..D by basis enumeration.
std::vector<long> ambient_hilbert(int m, int D);

// Truncation of (1+q)^(m-1) / (1-q); the independent count the enumeration
// must reproduce.
std::vector<long> ambient_hilbert_series(int m, int D);

// Free polynomial in X_1..X_m, Y, before the X_i^2 = Y rewrite. Used as the
// source of the quotient map onto ChowElement and as the domain of the
// substitution into the torus ring.
class FreePolyXY {
public:
    using Key = std::pair<std::vector<int>, int>;  // (X-exponents, Y-exponent)
    using TermMap = std::map<Key, Rational>;

    explicit FreePolyXY(int m) : m_(m) {}

    static FreePolyXY constant(int m, const Rational& c);
    static FreePolyXY X(int m, int i);
    static FreePolyXY Y(int m);
    static FreePolyXY embed(const ChowElement& a);

    int arity() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Key& key, const Rational& c);

    FreePolyXY operator+(const FreePolyXY& o) const;
    FreePolyXY operator-(const FreePolyXY& o) const;
    FreePolyXY operator*(const FreePolyXY& o) const;
    bool operator==(const FreePolyXY& o) const = default;

    // Quotient map: X_i^e -> Y^(e div 2) X_i^(e mod 2).
    ChowElement normalize() const;

private:
    int m_;
    TermMap terms_;
};

// X_i -> (y_1+y_2)/2 - x_i, Y -> (y_1+y_2)^2/4 - y_1 y_2.
Polynomial substitute_chow(const FreePolyXY& g);
Polynomial substitute_chow(const ChowElement& g);

}  // namespace chowcfg
