#include "chowcfg/autgroup.hpp"

#include <algorithm>

#include "chowcfg/linalg.hpp"

namespace chowcfg {

ChowElement apply(const SignedScaledPermutation& g, const ChowElement& a) {
    int m = a.arity();
    if (g.arity() != m) throw std::invalid_argument("automorphism arity mismatch");
    ChowElement out(m);
    for (const auto& [l, c] : a.terms()) {
        Mask J = 0;
        int sign = 1;
        for (int i : mask_members(l.J)) {
            J |= Mask{1} << g.sigma[i - 1];
            sign *= g.signs[i - 1];
        }
        Rational scale = c * sign;
        int power = subset_size(l.J) + 2 * l.k;
        for (int p = 0; p < power; ++p) scale *= g.d;
        out.add_term(ChowLabel{J, l.k}, scale);
    }
    return out;
}

CandidateMatrix::CandidateMatrix(std::vector<std::vector<Rational>> entries)
    : entries_(std::move(entries)) {
    size_t m = entries_.size();
    if (m < 1) throw std::invalid_argument("empty matrix");
    for (const auto& row : entries_)
        if (row.size() != m) throw std::invalid_argument("matrix must be square");
}

bool CandidateMatrix::is_invertible() const {
    RowEchelon ech(arity());
    for (const auto& row : entries_) ech.insert(row);
    return ech.full_rank();
}

std::vector<Rational> CandidateMatrix::column(int j) const {
    std::vector<Rational> col;
    for (int i = 0; i < arity(); ++i) col.push_back(entries_[i][j]);
    return col;
}

bool check_conditions(const CandidateMatrix& A) {
    if (!A.is_invertible()) throw SingularMatrixError("candidate matrix is singular");
    int m = A.arity();
    Rational first_sq(0);
    for (int j = 0; j < m; ++j) {
        Rational sq(0);
        for (int i = 0; i < m; ++i) sq += A.at(i, j) * A.at(i, j);
        if (j == 0) first_sq = sq;
        else if (sq != first_sq) return false;
    }
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = i1 + 1; i2 < m; ++i2) {
            Rational prod = A.at(i1, 0) * A.at(i2, 0);
            for (int j = 1; j < m; ++j)
                if (A.at(i1, j) * A.at(i2, j) != prod) return false;
        }
    return true;
}

std::optional<SignedScaledPermutation> decompose(const CandidateMatrix& A) {
    int m = A.arity();
    if (m <= 2) throw std::invalid_argument("decomposition is only classified for m > 2");
    if (!check_conditions(A)) return std::nullopt;

    // Conditions plus invertibility force one nonzero entry per column, all
    // of the same magnitude.
    SignedScaledPermutation g;
    g.sigma.assign(m, -1);
    g.signs.assign(m, 1);
    g.d = 0;
    for (int j = 0; j < m; ++j) {
        int row = -1;
        for (int i = 0; i < m; ++i) {
            if (is_zero(A.at(i, j))) continue;
            if (row >= 0) return std::nullopt;
            row = i;
        }
        if (row < 0) return std::nullopt;
        g.sigma[j] = row;
        g.signs[j] = sgn(A.at(row, j)) > 0 ? 1 : -1;
        Rational mag = abs(A.at(row, j));
        if (j == 0) g.d = mag;
        else if (mag != g.d) return std::nullopt;
    }
    return g;
}

CandidateMatrix matrix_of(const SignedScaledPermutation& g) {
    int m = g.arity();
    std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m, Rational(0)));
    for (int j = 0; j < m; ++j) entries[g.sigma[j]][j] = g.d * g.signs[j];
    return CandidateMatrix(std::move(entries));
}

}  // namespace chowcfg
