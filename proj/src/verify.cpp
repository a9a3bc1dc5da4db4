#include "chowcfg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "chowcfg/json_io.hpp"

namespace chowcfg {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void finish(SuiteResult& r, Clock::time_point t0) {
    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    r.seconds = since(t0);
}

std::string subset_str(Mask I) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int i : mask_members(I)) {
        if (!first) out << ",";
        first = false;
        out << i;
    }
    out << "}";
    return out.str();
}

std::string dims_str(const std::vector<long>& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
    return out.str();
}

// Closed-form forbidden families for m = 2n.
std::vector<Mask> family_theta0(int n) {
    int m = 2 * n;
    std::vector<Mask> out;
    for (Mask I = 1; I < (Mask{1} << m); ++I)
        if (subset_size(I) > n) out.push_back(I);
    return out;
}

std::vector<Mask> family_pm(int n, Sign sign) {
    int m = 2 * n;
    std::vector<Mask> out = family_theta0(n);
    for (Mask I = 1; I < (Mask{1} << m); ++I) {
        if (subset_size(I) != n) continue;
        bool has_one = (I & 1u) != 0;
        if ((sign == Sign::plus) == has_one) out.push_back(I);
    }
    return out;
}

std::vector<Mask> sorted_by_size_lex(std::vector<Mask> v) {
    std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
        if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
        return subset_lex_less(a, b);
    });
    return v;
}

bool palindromic_projective(const std::vector<long>& dims, int top) {
    // dims[0..top] palindromic, dims beyond top all zero, dims[0] = 1
    if (static_cast<int>(dims.size()) <= top) return false;
    if (dims[0] != 1) return false;
    for (int d = 0; d <= top; ++d)
        if (dims[d] != dims[top - d]) return false;
    for (int d = top + 1; d < static_cast<int>(dims.size()); ++d)
        if (dims[d] != 0) return false;
    return true;
}

CandidateMatrix random_invertible(int m, Rng& rng) {
    for (;;) {
        std::vector<std::vector<Rational>> entries(m, std::vector<Rational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) entries[i][j] = rng.next_rational(9, 5);
        CandidateMatrix A(std::move(entries));
        if (A.is_invertible()) return A;
    }
}

}  // namespace

bool preserves_square_ideal(const CandidateMatrix& A) {
    int m = A.arity();
    std::vector<ChowElement> images;
    for (int j = 0; j < m; ++j) images.push_back(ChowElement::linear_form(m, A.column(j)));
    for (int j1 = 0; j1 < m; ++j1) {
        ChowElement sq1 = images[j1] * images[j1];
        for (int j2 = j1 + 1; j2 < m; ++j2) {
            if (!(sq1 - images[j2] * images[j2]).is_zero()) return false;
        }
    }
    return true;
}

SuiteResult verify_lemma_rs(int m_lo, int m_hi) {
    auto t0 = Clock::now();
    SuiteResult r{"lemma-rs", {}, false, 0.0};
    for (int m = m_lo; m <= m_hi; ++m) {
        for (Mask I = 0; I < (Mask{1} << m); ++I) {
            auto ti = Clock::now();
            SubsetIndex idx(m, I);
            auto [rho_r, rho_s] = relation_oracle(m, idx);
            bool ok = substitute_chow(relation_r(m, idx)) == rho_r &&
                      substitute_chow(relation_s(m, idx)) == rho_s;
            std::ostringstream name;
            name << "m=" << m << " I=" << subset_str(I);
            r.checks.push_back(Check{name.str(), ok,
                                     ok ? "both symmetrizations match" : "MISMATCH",
                                     static_cast<long>(since(ti) * 1e6)});
        }
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_recursions(int m_lo, int m_hi) {
    auto t0 = Clock::now();
    SuiteResult r{"recursions", {}, false, 0.0};
    for (int m = m_lo; m <= m_hi; ++m) {
        bool ok = true;
        std::string bad;
        for (Mask I = 1; I < (Mask{1} << m) && ok; ++I) {
            SubsetIndex idx(m, I);
            ChowElement R = relation_r(m, idx), S = relation_s(m, idx);
            for (int i : idx.members()) {
                SubsetIndex sub(m, I & ~(Mask{1} << (i - 1)));
                ChowElement Rs = relation_r(m, sub), Ss = relation_s(m, sub);
                ChowElement Xi = ChowElement::X(m, i);
                if (R != Xi * Rs + Ss || S != Xi * Ss + ChowElement::Y(m) * Rs) {
                    ok = false;
                    bad = "I=" + subset_str(I) + " i=" + std::to_string(i);
                    break;
                }
            }
        }
        r.checks.push_back(Check{"recursions m=" + std::to_string(m), ok,
                                 ok ? "R and S peel off every index" : "failed at " + bad});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_stability() {
    auto t0 = Clock::now();
    SuiteResult r{"stability", {}, false, 0.0};

    for (int n = 2; n <= 5; ++n) {
        ForbiddenFamily f0 = forbidden(canonical(2 * n));
        bool ok0 = f0.all == sorted_by_size_lex(family_theta0(n));
        r.checks.push_back(Check{"forbidden(theta0) closed form n=" + std::to_string(n), ok0,
                                 std::to_string(f0.all.size()) + " subsets"});
        for (Sign sign : {Sign::plus, Sign::minus}) {
            Stability pm = theta_pm(n, sign);
            const char* tag = sign == Sign::plus ? "+" : "-";
            ForbiddenFamily fpm = forbidden(pm);
            bool okf = fpm.all == sorted_by_size_lex(family_pm(n, sign));
            r.checks.push_back(Check{std::string("forbidden(theta") + tag + ") closed form n=" +
                                         std::to_string(n),
                                     okf, std::to_string(fpm.all.size()) + " subsets"});
            bool okd = is_deformation(canonical(2 * n), pm);
            r.checks.push_back(Check{std::string("theta") + tag + " deforms theta0, n=" +
                                         std::to_string(n),
                                     okd, ""});
            bool okc = is_coprime(pm);
            r.checks.push_back(Check{std::string("theta") + tag + " coprime, n=" +
                                         std::to_string(n),
                                     okc, ""});
        }
    }
    for (int m = 3; m <= 10; ++m) {
        bool expect = m % 2 == 1;
        bool got = is_coprime(canonical(m));
        r.checks.push_back(Check{"coprime(theta0) m=" + std::to_string(m), got == expect,
                                 got ? "coprime" : "walls present"});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_hilbert() {
    auto t0 = Clock::now();
    SuiteResult r{"hilbert", {}, false, 0.0};
    for (int m = 3; m <= 8; ++m) {
        std::vector<long> enumerated = ambient_hilbert(m, 12);
        std::vector<long> series = ambient_hilbert_series(m, 12);
        r.checks.push_back(Check{"ambient hilbert m=" + std::to_string(m), enumerated == series,
                                 dims_str(enumerated)});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_quotient() {
    auto t0 = Clock::now();
    SuiteResult r{"quotient", {}, false, 0.0};

    std::vector<long> p5 = QuotientRing::build(canonical(5), 4).poincare();
    r.checks.push_back(Check{"poincare m=5 theta0", p5 == std::vector<long>{1, 5, 1, 0, 0},
                             dims_str(p5)});
    r.checks.push_back(
        Check{"m=5 palindromic and vanishing", palindromic_projective(p5, 2), ""});

    std::vector<long> p6p = QuotientRing::build(theta_plus(3), 6).poincare();
    std::vector<long> p6m = QuotientRing::build(theta_minus(3), 6).poincare();
    r.checks.push_back(Check{"poincare m=6 theta+",
                             p6p == std::vector<long>{1, 6, 6, 1, 0, 0, 0}, dims_str(p6p)});
    r.checks.push_back(
        Check{"m=6 palindromic and vanishing", palindromic_projective(p6p, 3), ""});
    r.checks.push_back(Check{"theta+ and theta- agree, n=3", p6p == p6m, dims_str(p6m)});

    std::vector<long> p4p = QuotientRing::build(theta_plus(2), 3).poincare();
    std::vector<long> p4m = QuotientRing::build(theta_minus(2), 3).poincare();
    r.checks.push_back(
        Check{"poincare m=4 theta+", p4p == std::vector<long>{1, 1, 0, 0}, dims_str(p4p)});
    r.checks.push_back(
        Check{"m=4 palindromic and vanishing", palindromic_projective(p4p, 1), ""});
    r.checks.push_back(Check{"theta+ and theta- agree, n=2", p4p == p4m, dims_str(p4m)});

    finish(r, t0);
    return r;
}

SuiteResult verify_minimality() {
    auto t0 = Clock::now();
    SuiteResult r{"minimality", {}, false, 0.0};
    std::vector<std::pair<std::string, Stability>> cases;
    for (int m = 3; m <= 6; ++m)
        cases.emplace_back("theta0 m=" + std::to_string(m), canonical(m));
    for (int n : {2, 3}) {
        cases.emplace_back("theta+ n=" + std::to_string(n), theta_plus(n));
        cases.emplace_back("theta- n=" + std::to_string(n), theta_minus(n));
    }
    for (const auto& [name, theta] : cases) {
        int m = theta.arity();
        QuotientRing qmin = QuotientRing::build(theta, m, GeneratorFamily::minimal);
        QuotientRing qfull = QuotientRing::build(theta, m, GeneratorFamily::full);
        bool ok = true;
        int bad = -1;
        for (int d = 0; d <= m; ++d) {
            if (!(qmin.ideal_component(d) == qfull.ideal_component(d))) {
                ok = false;
                bad = d;
                break;
            }
        }
        r.checks.push_back(Check{"minimal family suffices, " + name, ok,
                                 ok ? "all graded components agree"
                                    : "mismatch at degree " + std::to_string(bad)});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_nonisom() {
    auto t0 = Clock::now();
    SuiteResult r{"nonisom", {}, false, 0.0};

    QuotientRing qm = QuotientRing::build(theta_minus(3), 2);
    LinearForm witness{{rat(0), rat(1), rat(1), rat(1), rat(1), rat(0)}};
    bool wzero = square_in_quotient(qm, witness).is_zero();
    r.checks.push_back(Check{"witness squares to zero in the minus quotient", wzero, ""});

    Certificate cert = no_square_zero_certificate_plus_n3();
    bool branches = cert.cases.size() == 33 && cert.all_closed;
    r.checks.push_back(Check{"plus-side certificate closes all 33 branches", branches,
                             cert.conclusion});

    DistinguishReport rep = distinguish(3, 7);
    r.checks.push_back(Check{"distinguish(3) verdict", rep.verdict == "rings distinguished",
                             rep.verdict});

    finish(r, t0);
    return r;
}

SuiteResult verify_bring() {
    auto t0 = Clock::now();
    SuiteResult r{"bring", {}, false, 0.0};
    for (int n : {3, 4}) {
        bool minus_vanishes = hyperplane_power_test(theta_minus(n), LinearForm::unit(2 * n, 1), n - 1);
        bool plus_vanishes = hyperplane_power_test(theta_plus(n), LinearForm::unit(2 * n, 1), n - 1);
        r.checks.push_back(Check{"e1-hyperplane power vanishes in B-, n=" + std::to_string(n),
                                 minus_vanishes, ""});
        r.checks.push_back(Check{"e1-hyperplane power survives in B+, n=" + std::to_string(n),
                                 !plus_vanishes, ""});
        SampleOutcome members = sample_minus_membership(n, 100, 40 + static_cast<std::uint64_t>(n));
        SampleOutcome generic = sample_plus_genericity(n, 100, 80 + static_cast<std::uint64_t>(n));
        r.checks.push_back(Check{"100 membership samples in B-, n=" + std::to_string(n),
                                 members.ok(),
                                 std::to_string(members.failures) + " failures"});
        r.checks.push_back(Check{"100 genericity samples in B+, n=" + std::to_string(n),
                                 generic.ok(),
                                 std::to_string(generic.failures) + " failures"});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_aut() {
    auto t0 = Clock::now();
    SuiteResult r{"aut", {}, false, 0.0};
    std::vector<Rational> dilations{rat(1), rat(2), rat(5, 3), rat(7)};

    for (int m : {3, 4}) {
        long accepted = 0;
        bool ok = true;
        std::vector<int> sigma(m);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            for (Mask bits = 0; bits < (Mask{1} << m); ++bits) {
                std::vector<int> signs(m);
                for (int i = 0; i < m; ++i) signs[i] = (bits >> i) & 1u ? -1 : 1;
                for (const Rational& d : dilations) {
                    SignedScaledPermutation g{d, sigma, signs};
                    CandidateMatrix A = matrix_of(g);
                    bool cond = check_conditions(A);
                    bool direct = preserves_square_ideal(A);
                    auto dec = decompose(A);
                    bool roundtrip = dec.has_value() &&
                                     matrix_of(*dec).entries() == A.entries() &&
                                     matrix_of(*decompose(matrix_of(*dec))).entries() == A.entries();
                    if (!cond || !direct || !roundtrip) ok = false;
                    ++accepted;
                }
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        r.checks.push_back(Check{"signed scaled permutations accepted, m=" + std::to_string(m), ok,
                                 std::to_string(accepted) + " matrices"});
    }

    for (int m : {3, 4}) {
        Rng rng(1000 + static_cast<std::uint64_t>(m));
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            CandidateMatrix A = random_invertible(m, rng);
            bool cond = check_conditions(A);
            bool direct = preserves_square_ideal(A);
            bool rejected = !decompose(A).has_value();
            if (cond || direct || !rejected || cond != direct) ok = false;
        }
        r.checks.push_back(Check{"100 seeded dense matrices rejected, m=" + std::to_string(m), ok,
                                 "conditions and the ideal route agree"});
    }
    finish(r, t0);
    return r;
}

SuiteResult verify_determinism() {
    auto t0 = Clock::now();
    SuiteResult r{"determinism", {}, false, 0.0};
    std::string a = render_json(to_json(distinguish(3, 7)));
    std::string b = render_json(to_json(distinguish(3, 7)));
    r.checks.push_back(Check{"distinguish(3, seed 7) renders identically twice", a == b,
                             std::to_string(a.size()) + " bytes"});
    finish(r, t0);
    return r;
}

std::vector<SuiteResult> verify_all() {
    return {verify_lemma_rs(), verify_recursions(), verify_stability(), verify_hilbert(),
            verify_quotient(), verify_minimality(), verify_nonisom(),  verify_bring(),
            verify_aut(),      verify_determinism()};
}

}  // namespace chowcfg
