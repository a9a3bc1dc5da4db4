#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowcfg/presentation.hpp"

namespace chowcfg {

// a = sum_i coeffs[i-1] X_i
struct LinearForm {
    std::vector<Rational> coeffs;

    int arity() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    static LinearForm unit(int m, int i);  // e_i
};

// normal_form of a^2 in the quotient; the cache must cover degree 2.
ChowElement square_in_quotient(const QuotientRing& Q, const LinearForm& a);

// Image of a Y-free element in B^theta = A^theta / (Y). For the theta_pm
// presets and degrees up to n-1 the reduction uses the closed-form rewrite
// rules (monomials without index 1 vanish on the minus side and rewrite to
// index-1 monomials on the plus side); anything else falls back to the
// graded linear-algebra reduction, flagged by closed_form = false.
struct BReduction {
    ChowElement value;  // Y-free
    bool closed_form = false;
};
BReduction b_reduce(const Stability& theta, const ChowElement& a);

// Linear-algebra route on its own: project the cached ideal component onto
// the squarefree monomials and reduce there. Columns are ordered with the
// monomials not containing index 1 first, so the surviving representatives
// for the presets are the index-1 monomials.
ChowElement b_reduce_linalg(const QuotientRing& Q, const ChowElement& a);

// a^k in B = Q[X_1..X_m]/(X_i^2): squares vanish, so this is the multilinear
// expansion k! sum_(|J|=k) a_J X_J. No stability involved.
ChowElement power_in_b_ambient(int m, const LinearForm& a, int k);

// Symbolic check of the same identity for a generic linear form.
bool verify_ambient_power_expansion(int m, int k);

// Reduced k-th power of a linear form in B^theta.
ChowElement power_in_b(const Stability& theta, const LinearForm& a, int k);

// Is a^k identically zero on the hyperplane lambda . a = 0? Decided by
// eliminating one coordinate and expanding with symbolic coefficients.
// Guarded to m <= 8; larger arities must use the sampling helpers.
bool hyperplane_power_test(const Stability& theta, const LinearForm& lambda, int k);

struct HyperplaneScan {
    bool found = false;
    LinearForm witness;
    long tested = 0;
};
// Runs hyperplane_power_test over all sign patterns {0,1,-1}^m \ {0}.
HyperplaneScan scan_sign_patterns(const Stability& theta, int k);

struct SampleOutcome {
    int total = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};
// Seeded random forms with first coordinate zero; counts nonzero reduced
// (n-1)-powers in B^theta- as failures.
SampleOutcome sample_minus_membership(int n, int count, std::uint64_t seed);
// Seeded random forms with pairwise distinct nonzero coordinates; counts
// vanishing reduced (n-1)-powers in B^theta+ as failures.
SampleOutcome sample_plus_genericity(int n, int count, std::uint64_t seed);

struct CertificateCase {
    std::vector<int> support;
    std::string status;  // "closed" or "open"
    std::string reason;
};

struct Certificate {
    std::vector<CertificateCase> cases;
    bool all_closed = false;
    std::string conclusion;
};

// Finite case analysis over supports inside {2,...,6} showing that the
// degree-2 component of the n = 3 plus-side quotient admits no nonzero
// square of a degree-1 element equal to zero: derives the two coefficient
// conditions by exact reduction and closes every support symbolically.
Certificate no_square_zero_certificate_plus_n3();

struct DistinguishReport {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;

    bool poincare_computed = false;
    std::vector<long> poincare_plus, poincare_minus;
    bool poincare_equal = false;

    bool nilpotent_section = false;  // n = 3 only
    LinearForm witness;
    bool witness_zero_in_minus = false;
    bool witness_nonzero_in_plus = false;
    Certificate certificate;

    bool hyperplane_section = false;
    int power = 0;
    bool minus_e1_vanishes = false;
    bool plus_e1_vanishes = false;
    HyperplaneScan minus_scan, plus_scan;

    SampleOutcome minus_sampling, plus_sampling;

    std::vector<std::string> notes;
    std::string verdict;  // "rings distinguished" or "inconclusive at this n"
    bool distinguished = false;
};

DistinguishReport distinguish(int n, std::uint64_t seed);

}  // namespace chowcfg
