#include "chowcfg/torus.hpp"

#include <utility>

namespace chowcfg {

Polynomial swap_y(const Polynomial& f) {
    int n = f.nvars();
    if (n < 2) throw std::invalid_argument("swap_y needs at least two variables");
    Polynomial r(n);
    Polynomial::Exponents e;
    for (const auto& [exp, c] : f.terms()) {
        e = exp;
        std::swap(e[n - 2], e[n - 1]);
        r.add_term(e, c);
    }
    return r;
}

Polynomial divided_difference(const Polynomial& f) {
    int n = f.nvars();
    Polynomial g = f - swap_y(f);
    if (g.is_zero()) return Polynomial(n);

    // Synthetic division of g, read as a polynomial in y_2, by (y_2 - y_1):
    // walking from the top coefficient down, b_{k-1} = c_k + y_1 * b_k.
    std::map<int, Polynomial> coeff;  // y_2-degree -> coefficient (y_2 slot zeroed)
    int top = 0;
    Polynomial::Exponents e;
    for (const auto& [exp, c] : g.terms()) {
        int k = exp[n - 1];
        top = std::max(top, k);
        e = exp;
        e[n - 1] = 0;
        auto it = coeff.find(k);
        if (it == coeff.end()) it = coeff.emplace(k, Polynomial(n)).first;
        it->second.add_term(e, c);
    }
    auto at = [&](int k) -> Polynomial {
        auto it = coeff.find(k);
        return it == coeff.end() ? Polynomial(n) : it->second;
    };
    auto times_y1 = [&](const Polynomial& p) {
        Polynomial r(n);
        Polynomial::Exponents t;
        for (const auto& [exp, c] : p.terms()) {
            t = exp;
            t[n - 2] += 1;
            r.add_term(t, c);
        }
        return r;
    };

    std::vector<Polynomial> quot(top, Polynomial(n));  // quot[k] = coefficient of y_2^k
    Polynomial carry = at(top);
    for (int k = top - 1; k >= 0; --k) {
        quot[k] = carry;
        carry = at(k) + times_y1(carry);
    }
    if (!carry.is_zero())
        throw std::logic_error("divided_difference: nonzero remainder, exact arithmetic is broken");

    Polynomial result(n);
    for (int k = 0; k < top; ++k) {
        Polynomial::Exponents t;
        for (const auto& [exp, c] : quot[k].terms()) {
            t = exp;
            t[n - 1] = k;
            result.add_term(t, c);
        }
    }
    return result;
}

Polynomial subset_product(int m, const SubsetIndex& I) {
    Polynomial f = torus_const(m, 1);
    for (int i : I.members()) f = f * (torus_y2(m) - torus_x(m, i));
    return f;
}

}  // namespace chowcfg
