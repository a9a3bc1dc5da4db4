#pragma once

#include <vector>

#include "chowcfg/polynomial.hpp"
#include "chowcfg/subsets.hpp"

namespace chowcfg {

// Torus-side ambient ring: Q[x_1..x_m, y_1, y_2] with the fixed variable
// order x_1 < ... < x_m < y_1 < y_2, i.e. nvars = m + 2 and the y's in the
// last two slots. The arity m is recovered from nvars.

inline int torus_arity(const Polynomial& f) { return f.nvars() - 2; }

inline Polynomial torus_zero(int m) { return Polynomial(m + 2); }
inline Polynomial torus_const(int m, const Rational& c) { return Polynomial::constant(m + 2, c); }
inline Polynomial torus_x(int m, int i) { return Polynomial::variable(m + 2, i - 1); }  // i in 1..m
inline Polynomial torus_y1(int m) { return Polynomial::variable(m + 2, m); }
inline Polynomial torus_y2(int m) { return Polynomial::variable(m + 2, m + 1); }

// Exchanges y_1 and y_2 in every term.
Polynomial swap_y(const Polynomial& f);

// (f - swap_y(f)) / (y_2 - y_1). The difference is always divisible; a
// nonzero remainder would mean broken arithmetic, so it aborts the run.
Polynomial divided_difference(const Polynomial& f);

// f^I = prod_{i in I} (y_2 - x_i)
Polynomial subset_product(int m, const SubsetIndex& I);

// j-th elementary symmetric polynomial of the given values; e_0 = one and
// e_j = 0 for j beyond the count. Works over any ring with + and *.
template <class T>
T elementary_symmetric(int j, const std::vector<T>& vars, const T& one) {
    if (j < 0) throw std::invalid_argument("negative elementary symmetric index");
    if (j > static_cast<int>(vars.size())) return one - one;
    std::vector<T> e{one};  // e[t] = e_t of the prefix processed so far
    int processed = 0;
    for (const T& v : vars) {
        ++processed;
        int top = std::min(j, processed);
        int start = top;
        if (static_cast<int>(e.size()) <= top) {
            e.push_back(e[top - 1] * v);
            start = top - 1;
        }
        for (int t = start; t >= 1; --t) e[t] = e[t] + e[t - 1] * v;
    }
    return e[j];
}

}  // namespace chowcfg
