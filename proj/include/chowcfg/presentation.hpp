#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chowcfg/chow.hpp"
#include "chowcfg/linalg.hpp"
#include "chowcfg/stability.hpp"

namespace chowcfg {

// The relation pair attached to a subset I of cardinality k:
//   R_I = sum_v e_(k-1-2v)(X_i | i in I) Y^v   (degree k-1, R_empty = 0)
//   S_I = sum_v e_(k-2v)(X_i | i in I) Y^v     (degree k,   S_empty = 1)
ChowElement relation_r(int m, const SubsetIndex& I);
ChowElement relation_s(int m, const SubsetIndex& I);

// Torus-side counterparts, used only for cross-checking:
// (dd(f^I), 1/2 dd(f^I (y_2 - y_1))) with f^I = prod_{i in I} (y_2 - x_i).
// Substituting X_i, Y into (relation_r, relation_s) must reproduce them.
std::pair<Polynomial, Polynomial> relation_oracle(int m, const SubsetIndex& I);

struct RelationPair {
    SubsetIndex I;
    ChowElement R;
    ChowElement S;
};

enum class GeneratorFamily { minimal, full };

struct CacheDepthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quotient of A by the ideal generated by the relation pairs over the
// forbidden subsets of a stability condition, cached degree by degree. Each
// degree stores the reduced basis of the ideal component in the graded_basis
// coordinates; caches are immutable once built.
class QuotientRing {
public:
    static QuotientRing build(const Stability& theta, int max_degree,
                              GeneratorFamily family = GeneratorFamily::minimal);

    const Stability& stability() const { return theta_; }
    int arity() const { return m_; }
    int max_degree() const { return max_degree_; }
    const std::vector<RelationPair>& generators() const { return generators_; }

    const ReducedBasis& ideal_component(int d) const;
    long quotient_dim(int d) const;
    std::vector<long> poincare() const;
    // Labels of the monomials representing the degree-d quotient component.
    std::vector<ChowLabel> coset_labels(int d) const;

    ChowElement normal_form(const ChowElement& a) const;
    bool is_zero_in_quotient(const ChowElement& a) const;

private:
    QuotientRing(Stability theta, int max_degree);
    void check_degree(int d) const;

    Stability theta_;
    int m_;
    int max_degree_;
    std::vector<RelationPair> generators_;
    std::vector<ReducedBasis> components_;  // index = degree
};

// Coefficient vector of a homogeneous element over graded_basis(m, d).
std::vector<Rational> coordinates(const ChowElement& a, int d);
ChowElement from_coordinates(int m, int d, const std::vector<Rational>& v);

}  // namespace chowcfg
