#include "chowcfg/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace chowcfg {

namespace {

ChowElement relation_sum(int m, const SubsetIndex& I, int top) {
    // sum over v of e_(top - 2v)(X_i | i in I) Y^v, assembled term by term:
    // e_j of distinct degree-1 generators is the sum of its j-subsets.
    ChowElement out(m);
    std::vector<int> members = I.members();
    for (int v = 0; top - 2 * v >= 0; ++v) {
        int s = top - 2 * v;
        if (s > I.size()) continue;
        for_each_subset_of_size(members, s, [&](Mask T) { out.add_term(ChowLabel{T, v}, 1); });
    }
    return out;
}

int worker_count(int tasks) {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("CHOWCFG_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = static_cast<int>(v);
    }
    return std::max(1, std::min(n, tasks));
}

}  // namespace

ChowElement relation_r(int m, const SubsetIndex& I) {
    return relation_sum(m, I, I.size() - 1);
}

ChowElement relation_s(int m, const SubsetIndex& I) {
    return relation_sum(m, I, I.size());
}

std::pair<Polynomial, Polynomial> relation_oracle(int m, const SubsetIndex& I) {
    Polynomial f = subset_product(m, I);
    Polynomial first = divided_difference(f);
    Polynomial second = divided_difference(f * (torus_y2(m) - torus_y1(m))) * rat(1, 2);
    return {first, second};
}

std::vector<Rational> coordinates(const ChowElement& a, int d) {
    std::vector<ChowLabel> basis = graded_basis(a.arity(), d);
    std::map<ChowLabel, int, ChowLabelLess> index;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) index.emplace(basis[j], j);
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [l, c] : a.terms()) {
        auto it = index.find(l);
        if (it == index.end()) throw std::invalid_argument("element not homogeneous of the given degree");
        v[it->second] = c;
    }
    return v;
}

ChowElement from_coordinates(int m, int d, const std::vector<Rational>& v) {
    std::vector<ChowLabel> basis = graded_basis(m, d);
    if (v.size() != basis.size()) throw std::invalid_argument("coordinate length mismatch");
    ChowElement a(m);
    for (size_t j = 0; j < basis.size(); ++j)
        if (!is_zero(v[j])) a.add_term(basis[j], v[j]);
    return a;
}

QuotientRing::QuotientRing(Stability theta, int max_degree)
    : theta_(std::move(theta)), m_(theta_.arity()), max_degree_(max_degree) {}

QuotientRing QuotientRing::build(const Stability& theta, int max_degree, GeneratorFamily family) {
    if (!is_nontrivial(theta))
        throw std::invalid_argument("quotient requires a stability with non-empty stable locus");
    if (max_degree < 0) throw std::invalid_argument("negative max degree");

    QuotientRing q(theta, max_degree);
    ForbiddenFamily fam = forbidden(theta);
    const std::vector<Mask>& sets = family == GeneratorFamily::minimal ? fam.minimal : fam.all;
    for (Mask I : sets) {
        SubsetIndex idx(q.m_, I);
        q.generators_.push_back(RelationPair{idx, relation_r(q.m_, idx), relation_s(q.m_, idx)});
    }

    q.components_.assign(max_degree + 1, ReducedBasis());
    std::atomic<int> next_degree{0};
    auto run = [&]() {
        for (;;) {
            int d = next_degree.fetch_add(1);
            if (d > max_degree) return;
            std::vector<ChowLabel> basis = graded_basis(q.m_, d);
            std::map<ChowLabel, int, ChowLabelLess> index;
            for (int j = 0; j < static_cast<int>(basis.size()); ++j) index.emplace(basis[j], j);

            RowEchelon ech(static_cast<int>(basis.size()));
            for (const RelationPair& pair : q.generators_) {
                for (const ChowElement* gen : {&pair.R, &pair.S}) {
                    if (ech.full_rank()) break;
                    int gd = gen->degree();
                    if (gd < 0 || gd > d) continue;
                    for (const ChowLabel& mono : graded_basis(q.m_, d - gd)) {
                        ChowElement row = ChowElement::monomial(q.m_, mono, 1) * *gen;
                        std::vector<Rational> v(basis.size(), Rational(0));
                        for (const auto& [l, c] : row.terms()) v[index.at(l)] = c;
                        ech.insert(v);
                        if (ech.full_rank()) break;
                    }
                }
                if (ech.full_rank()) break;
            }
            q.components_[d] = ech.finalize();
        }
    };

    int workers = worker_count(max_degree + 1);
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&run, &errors, t]() {
                try {
                    run();
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return q;
}

void QuotientRing::check_degree(int d) const {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d > max_degree_)
        throw CacheDepthError("degree " + std::to_string(d) + " exceeds the cached maximum " +
                              std::to_string(max_degree_) + "; extend the cache");
}

const ReducedBasis& QuotientRing::ideal_component(int d) const {
    check_degree(d);
    return components_[d];
}

long QuotientRing::quotient_dim(int d) const {
    check_degree(d);
    return components_[d].cols() - components_[d].rank();
}

std::vector<long> QuotientRing::poincare() const {
    std::vector<long> out;
    for (int d = 0; d <= max_degree_; ++d) out.push_back(quotient_dim(d));
    return out;
}

std::vector<ChowLabel> QuotientRing::coset_labels(int d) const {
    check_degree(d);
    std::vector<ChowLabel> basis = graded_basis(m_, d);
    std::vector<ChowLabel> out;
    for (int j : components_[d].free_columns()) out.push_back(basis[j]);
    return out;
}

ChowElement QuotientRing::normal_form(const ChowElement& a) const {
    if (a.arity() != m_) throw std::invalid_argument("chow arity mismatch");
    ChowElement out(m_);
    for (int d = 0; d <= a.degree(); ++d) {
        ChowElement part = a.homogeneous_component(d);
        if (part.is_zero()) continue;
        check_degree(d);
        std::vector<Rational> v = coordinates(part, d);
        components_[d].reduce(v);
        out += from_coordinates(m_, d, v);
    }
    return out;
}

bool QuotientRing::is_zero_in_quotient(const ChowElement& a) const {
    return normal_form(a).is_zero();
}

}  // namespace chowcfg
