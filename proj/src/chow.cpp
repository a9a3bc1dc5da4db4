#include "chowcfg/chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chowcfg {

ChowElement::ChowElement(int m) : m_(m) {
    if (m < 1 || m > kMaxArity) throw std::invalid_argument("chow arity out of range");
}

ChowElement ChowElement::one(int m) {
    return monomial(m, ChowLabel{0, 0}, 1);
}

ChowElement ChowElement::X(int m, int i) {
    if (i < 1 || i > m) throw std::invalid_argument("X index out of range");
    return monomial(m, ChowLabel{Mask{1} << (i - 1), 0}, 1);
}

ChowElement ChowElement::Y(int m) {
    return monomial(m, ChowLabel{0, 1}, 1);
}

ChowElement ChowElement::monomial(int m, const ChowLabel& label, const Rational& c) {
    ChowElement a(m);
    a.add_term(label, c);
    return a;
}

ChowElement ChowElement::linear_form(int m, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != m) throw std::invalid_argument("linear form arity mismatch");
    ChowElement a(m);
    for (int i = 1; i <= m; ++i) a.add_term(ChowLabel{Mask{1} << (i - 1), 0}, coeffs[i - 1]);
    return a;
}

Rational ChowElement::coefficient(const ChowLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChowElement::add_term(const ChowLabel& label, const Rational& c) {
    if ((label.J >> m_) != 0 || label.k < 0) throw std::invalid_argument("label out of range");
    if (chowcfg::is_zero(c)) return;
    auto it = terms_.find(label);
    if (it == terms_.end()) {
        terms_.emplace(label, c);
    } else {
        it->second += c;
        if (chowcfg::is_zero(it->second)) terms_.erase(it);
    }
}

void ChowElement::check_arity(const ChowElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("chow arity mismatch");
}

ChowElement ChowElement::operator-() const {
    ChowElement r(m_);
    for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
    return r;
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
    check_arity(o);
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
    check_arity(o);
    for (const auto& [l, c] : o.terms_) add_term(l, -c);
    return *this;
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
    ChowElement r = *this;
    r += o;
    return r;
}

ChowElement ChowElement::operator-(const ChowElement& o) const {
    ChowElement r = *this;
    r -= o;
    return r;
}

ChowElement ChowElement::operator*(const ChowElement& o) const {
    check_arity(o);
    ChowElement r(m_);
    for (const auto& [la, ca] : terms_) {
        for (const auto& [lb, cb] : o.terms_) {
            // X_J X_J' = X_(J xor J') Y^(|J and J'|)
            Mask common = la.J & lb.J;
            ChowLabel l{la.J ^ lb.J, la.k + lb.k + subset_size(common)};
            r.add_term(l, ca * cb);
        }
    }
    return r;
}

ChowElement ChowElement::operator*(const Rational& c) const {
    ChowElement r(m_);
    if (chowcfg::is_zero(c)) return r;
    for (const auto& [l, t] : terms_) r.terms_.emplace(l, t * c);
    return r;
}

ChowElement ChowElement::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    ChowElement r = one(m_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool ChowElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

int ChowElement::degree() const {
    int d = -1;
    for (const auto& [l, c] : terms_) d = std::max(d, l.degree());
    return d;
}

ChowElement ChowElement::homogeneous_component(int d) const {
    ChowElement r(m_);
    for (const auto& [l, c] : terms_)
        if (l.degree() == d) r.terms_.emplace(l, c);
    return r;
}

std::string ChowElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool has_vars = l.J != 0 || l.k != 0;
        if (a != 1 || !has_vars) {
            out << rational_str(a);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (int i : mask_members(l.J)) {
            if (!first_var) out << "*";
            first_var = false;
            out << "X" << i;
        }
        if (l.k > 0) {
            if (!first_var) out << "*";
            out << "Y";
            if (l.k > 1) out << "^" << l.k;
        }
    }
    return out.str();
}

std::vector<ChowLabel> graded_basis(int m, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<ChowLabel> out;
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 1);
    for (int k = 0; 2 * k <= d; ++k) {
        int s = d - 2 * k;
        if (s > m) continue;
        for_each_subset_of_size(pool, s, [&](Mask J) { out.push_back(ChowLabel{J, k}); });
    }
    return out;
}

std::vector<long> ambient_hilbert(int m, int D) {
    std::vector<long> out;
    for (int d = 0; d <= D; ++d) out.push_back(static_cast<long>(graded_basis(m, d).size()));
    return out;
}

std::vector<long> ambient_hilbert_series(int m, int D) {
    // (1+q)^(m-1) * (1 + q + q^2 + ...): partial sums of binomials.
    std::vector<long> out;
    long acc = 0;
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return 0L;
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int d = 0; d <= D; ++d) {
        acc += binom(m - 1, d);
        out.push_back(acc);
    }
    return out;
}

FreePolyXY FreePolyXY::constant(int m, const Rational& c) {
    FreePolyXY p(m);
    p.add_term({std::vector<int>(m, 0), 0}, c);
    return p;
}

FreePolyXY FreePolyXY::X(int m, int i) {
    if (i < 1 || i > m) throw std::invalid_argument("X index out of range");
    FreePolyXY p(m);
    std::vector<int> e(m, 0);
    e[i - 1] = 1;
    p.add_term({e, 0}, 1);
    return p;
}

FreePolyXY FreePolyXY::Y(int m) {
    FreePolyXY p(m);
    p.add_term({std::vector<int>(m, 0), 1}, 1);
    return p;
}

FreePolyXY FreePolyXY::embed(const ChowElement& a) {
    FreePolyXY p(a.arity());
    for (const auto& [l, c] : a.terms()) {
        std::vector<int> e(a.arity(), 0);
        for (int i : mask_members(l.J)) e[i - 1] = 1;
        p.add_term({e, l.k}, c);
    }
    return p;
}

void FreePolyXY::add_term(const Key& key, const Rational& c) {
    if (static_cast<int>(key.first.size()) != m_ || key.second < 0)
        throw std::invalid_argument("free term arity mismatch");
    if (chowcfg::is_zero(c)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (chowcfg::is_zero(it->second)) terms_.erase(it);
    }
}

FreePolyXY FreePolyXY::operator+(const FreePolyXY& o) const {
    if (m_ != o.m_) throw std::invalid_argument("free poly arity mismatch");
    FreePolyXY r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

FreePolyXY FreePolyXY::operator-(const FreePolyXY& o) const {
    if (m_ != o.m_) throw std::invalid_argument("free poly arity mismatch");
    FreePolyXY r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

FreePolyXY FreePolyXY::operator*(const FreePolyXY& o) const {
    if (m_ != o.m_) throw std::invalid_argument("free poly arity mismatch");
    FreePolyXY r(m_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka.first, ka.second + kb.second};
            for (int i = 0; i < m_; ++i) k.first[i] += kb.first[i];
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

ChowElement FreePolyXY::normalize() const {
    ChowElement a(m_);
    for (const auto& [key, c] : terms_) {
        ChowLabel l{0, key.second};
        for (int i = 0; i < m_; ++i) {
            l.k += key.first[i] / 2;
            if (key.first[i] % 2) l.J |= Mask{1} << i;
        }
        a.add_term(l, c);
    }
    return a;
}

Polynomial substitute_chow(const FreePolyXY& g) {
    int m = g.arity();
    Rational half = rat(1, 2);
    std::vector<Polynomial> ximg;
    for (int i = 1; i <= m; ++i)
        ximg.push_back((torus_y1(m) + torus_y2(m)) * half - torus_x(m, i));
    Polynomial ysum = torus_y1(m) + torus_y2(m);
    Polynomial yimg = ysum * ysum * rat(1, 4) - torus_y1(m) * torus_y2(m);

    Polynomial out = torus_zero(m);
    for (const auto& [key, c] : g.terms()) {
        Polynomial t = torus_const(m, c);
        for (int i = 0; i < m; ++i)
            if (key.first[i] > 0) t = t * ximg[i].pow(key.first[i]);
        if (key.second > 0) t = t * yimg.pow(key.second);
        out += t;
    }
    return out;
}

Polynomial substitute_chow(const ChowElement& g) {
    return substitute_chow(FreePolyXY::embed(g));
}

}  // namespace chowcfg
