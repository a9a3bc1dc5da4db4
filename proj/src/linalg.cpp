#include "chowcfg/linalg.hpp"

#include <algorithm>

namespace chowcfg {

namespace {

void strip_content(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const mpz_class& x : v) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (mpz_class& x : v) x /= g;
}

int leading(const std::vector<mpz_class>& v) {
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
        if (sgn(v[j]) != 0) return j;
    return -1;
}

// v <- v * a - w * b, scaled so the column `col` cancels.
void cross_eliminate(std::vector<mpz_class>& v, const std::vector<mpz_class>& w, int col) {
    mpz_class a = w[col], b = v[col];
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - w[j] * b;
    strip_content(v);
}

}  // namespace

std::vector<int> ReducedBasis::free_columns() const {
    std::vector<int> out;
    size_t r = 0;
    for (int j = 0; j < cols_; ++j) {
        if (r < pivots_.size() && pivots_[r] == j) ++r;
        else out.push_back(j);
    }
    return out;
}

bool ReducedBasis::contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

RowEchelon::RowEchelon(int cols) : cols_(cols) {}

bool RowEchelon::insert(const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    if (full_rank()) return false;

    // Clear denominators.
    mpz_class lcm = 1;
    for (const Rational& x : v)
        if (!is_zero(x)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> row(cols_);
    bool any = false;
    for (int j = 0; j < cols_; ++j) {
        if (is_zero(v[j])) continue;
        row[j] = v[j].get_num() * (lcm / v[j].get_den());
        any = true;
    }
    if (!any) return false;
    strip_content(row);

    int lead = leading(row);
    while (lead >= 0) {
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
        size_t pos = static_cast<size_t>(it - pivots_.begin());
        if (it == pivots_.end() || *it != lead) {
            if (sgn(row[lead]) < 0)
                for (mpz_class& x : row) x = -x;
            rows_.insert(rows_.begin() + pos, std::move(row));
            pivots_.insert(it, lead);
            return true;
        }
        // Keep the row with the smaller leading entry as the stored pivot.
        if (mpz_cmpabs(row[lead].get_mpz_t(), rows_[pos][lead].get_mpz_t()) < 0) {
            std::swap(row, rows_[pos]);
            if (sgn(rows_[pos][lead]) < 0)
                for (mpz_class& x : rows_[pos]) x = -x;
        }
        cross_eliminate(row, rows_[pos], lead);
        lead = leading(row);
    }
    return false;
}

ReducedBasis RowEchelon::finalize() const {
    int r = rank();
    std::vector<std::vector<Rational>> out(r, std::vector<Rational>(cols_, Rational(0)));
    for (int i = r - 1; i >= 0; --i) {
        Rational inv_lead = Rational(1) / Rational(rows_[i][pivots_[i]]);
        for (int j = pivots_[i]; j < cols_; ++j)
            if (sgn(rows_[i][j]) != 0) out[i][j] = Rational(rows_[i][j]) * inv_lead;
        for (int below = i + 1; below < r; ++below) {
            int p = pivots_[below];
            if (is_zero(out[i][p])) continue;
            Rational c = out[i][p];
            for (int j = p; j < cols_; ++j) {
                if (is_zero(out[below][j])) continue;
                out[i][j] -= c * out[below][j];
            }
        }
    }
    return ReducedBasis(cols_, std::move(out), pivots_);
}

}  // namespace chowcfg
