#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chowcfg/chow.hpp"

namespace chowcfg {

// Graded automorphism of A in factored form: X_i -> d * sign_i * X_sigma(i),
// which forces Y -> d^2 Y. Canonical form keeps d > 0 and pushes all signs
// into the sign vector.
struct SignedScaledPermutation {
    Rational d;
    std::vector<int> sigma;  // 0-based images, a permutation of 0..m-1
    std::vector<int> signs;  // entries +1 / -1

    int arity() const { return static_cast<int>(sigma.size()); }
};

ChowElement apply(const SignedScaledPermutation& g, const ChowElement& a);

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Candidate matrix for a degree-preserving ring map X_j -> sum_i a[i][j] X_i.
class CandidateMatrix {
public:
    explicit CandidateMatrix(std::vector<std::vector<Rational>> entries);

    int arity() const { return static_cast<int>(entries_.size()); }
    const Rational& at(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }

    bool is_invertible() const;
    // The image of X_j as a linear form.
    std::vector<Rational> column(int j) const;

private:
    std::vector<std::vector<Rational>> entries_;
};

// The two families of quadratic constraints an automorphism matrix must
// satisfy: equal column sums of squares, and matching off-diagonal products
//   a[i1][j1] a[i2][j1] = a[i1][j2] a[i2][j2].
// Together they say every X_j1^2 - X_j2^2 maps into (X_i^2 - X_j^2).
// Throws SingularMatrixError when A is not invertible.
bool check_conditions(const CandidateMatrix& A);

// Factors a matrix satisfying the conditions into dilation x signs x
// permutation; nullopt when the conditions fail. Only defined for m > 2.
std::optional<SignedScaledPermutation> decompose(const CandidateMatrix& A);

CandidateMatrix matrix_of(const SignedScaledPermutation& g);

}  // namespace chowcfg
