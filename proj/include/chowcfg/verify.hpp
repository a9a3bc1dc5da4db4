#pragma once

#include <string>
#include <vector>

#include "chowcfg/autgroup.hpp"
#include "chowcfg/invariants.hpp"

namespace chowcfg {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    long micros = -1;  // per-check wall time; text output only, never serialized
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
    double seconds = 0.0;
};

// Each suite is one of the standalone verification runs exposed through the
// CLI; together they cover every acceptance criterion.
SuiteResult verify_lemma_rs(int m_lo = 3, int m_hi = 7);
SuiteResult verify_recursions(int m_lo = 3, int m_hi = 7);
SuiteResult verify_stability();
SuiteResult verify_hilbert();
SuiteResult verify_quotient();
SuiteResult verify_minimality();
SuiteResult verify_nonisom();
SuiteResult verify_bring();
SuiteResult verify_aut();
SuiteResult verify_determinism();

std::vector<SuiteResult> verify_all();

// Independent route for the automorphism conditions: map each X_j to the
// column linear form and test the differences of squares directly in A.
bool preserves_square_ideal(const CandidateMatrix& A);

}  // namespace chowcfg
