#include "chowcfg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chowcfg {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector arity mismatch");
    if (chowcfg::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (chowcfg::is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::check_arity(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (chowcfg::is_zero(c)) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: image count mismatch");
    int target = images.empty() ? 0 : images[0].nvars();
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        r += t;
    }
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (a != 1 || !has_vars) {
            out << rational_str(a);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace chowcfg
