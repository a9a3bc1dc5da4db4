#pragma once

#include <vector>

#include "chowcfg/rational.hpp"

namespace chowcfg {

// Immutable reduced row-echelon basis over Q: rows sorted by pivot column,
// pivot entries 1 and fully back-eliminated. Canonical for the row space,
// so operator== decides span equality.
class ReducedBasis {
public:
    ReducedBasis() : cols_(0) {}
    ReducedBasis(int cols, std::vector<std::vector<Rational>> rows, std::vector<int> pivots)
        : cols_(cols), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }
    std::vector<int> free_columns() const;

    // Canonical coset representative: subtracts the pivot multiples. The
    // scalar type only needs v -= rational * v arithmetic, so polynomial
    // entries work too.
    template <class T>
    void reduce(std::vector<T>& v) const {
        for (int r = 0; r < rank(); ++r) {
            int p = pivots_[r];
            if (is_zero(v[p])) continue;
            T c = v[p];
            for (int j = p; j < cols_; ++j) {
                if (is_zero(rows_[r][j])) continue;
                v[j] -= c * rows_[r][j];
            }
        }
    }

    bool contains(std::vector<Rational> v) const;

    bool operator==(const ReducedBasis& o) const = default;

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

// Incremental exact elimination. Rows are cleared of denominators on entry
// and kept as content-free integer vectors; each insertion cross-multiplies
// against the existing pivots (fraction-free, preferring the smaller leading
// entry as pivot) and strips the gcd. finalize() back-substitutes once over
// Q to produce the ReducedBasis.
class RowEchelon {
public:
    explicit RowEchelon(int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool full_rank() const { return rank() == cols_; }

    // Returns true when the row enlarged the span.
    bool insert(const std::vector<Rational>& v);

    ReducedBasis finalize() const;

private:
    int cols_;
    std::vector<std::vector<mpz_class>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;                   // pivot column per row, strictly increasing
};

}  // namespace chowcfg
