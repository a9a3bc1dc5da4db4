#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcfg/invariants.hpp"
#include "chowcfg/json_io.hpp"

using namespace chowcfg;

namespace {

ChowElement pair_monomial(int m, int i, int j) {
    return ChowElement::X(m, i) * ChowElement::X(m, j);
}

}  // namespace

TEST_CASE("squares of linear forms in the two quotients") {
    QuotientRing qm = QuotientRing::build(theta_minus(3), 2);
    QuotientRing qp = QuotientRing::build(theta_plus(3), 2);
    LinearForm witness{{rat(0), rat(1), rat(1), rat(1), rat(1), rat(0)}};

    CHECK(square_in_quotient(qm, witness).is_zero());
    CHECK_FALSE(square_in_quotient(qp, witness).is_zero());
    CHECK(square_in_quotient(qm, LinearForm{std::vector<Rational>(6, Rational(0))}).is_zero());

    SUBCASE("every four-element support inside {2..6} squares to zero on the minus side") {
        for (Mask K = 1; K < (Mask{1} << 5); ++K) {
            if (subset_size(K) != 4) continue;
            LinearForm a{std::vector<Rational>(6, Rational(0))};
            for (int b = 0; b < 5; ++b)
                if ((K >> b) & 1u) a.coeffs[b + 1] = 1;
            CHECK(square_in_quotient(qm, a).is_zero());
        }
    }
}

TEST_CASE("the plus-side certificate closes every branch") {
    Certificate cert = no_square_zero_certificate_plus_n3();
    CHECK(cert.all_closed);
    CHECK(cert.cases.size() == 33);
    for (const CertificateCase& c : cert.cases) CHECK(c.status == "closed");
    CHECK(cert.cases.front().support.empty());

    // spot-check the shape of the JSON report
    Json j = to_json(cert);
    CHECK(j.at("cases").size() == 33);
    CHECK(j.at("cases")[0].at("status") == "closed");
}

TEST_CASE("reduction in the Y-killed quotients") {
    Stability minus = theta_minus(3), plus = theta_plus(3);
    int m = 6;

    SUBCASE("closed-form rules at degree n-1") {
        BReduction r1 = b_reduce(minus, pair_monomial(m, 2, 3));
        CHECK(r1.closed_form);
        CHECK(r1.value.is_zero());

        BReduction r2 = b_reduce(plus, pair_monomial(m, 2, 3));
        CHECK(r2.closed_form);
        CHECK(r2.value == -pair_monomial(m, 1, 2) - pair_monomial(m, 1, 3));

        BReduction r3 = b_reduce(plus, pair_monomial(m, 1, 2));
        CHECK(r3.value == pair_monomial(m, 1, 2));
        CHECK(b_reduce(minus, pair_monomial(m, 1, 2)).value == pair_monomial(m, 1, 2));
    }
    SUBCASE("low degrees pass through") {
        CHECK(b_reduce(minus, ChowElement::X(m, 4)).value == ChowElement::X(m, 4));
        CHECK(b_reduce(plus, ChowElement::one(m)).value == ChowElement::one(m));
    }
    SUBCASE("Y-power terms are rejected") {
        CHECK_THROWS_AS(b_reduce(minus, ChowElement::Y(m)), std::invalid_argument);
    }
    SUBCASE("closed form agrees with the linear-algebra route on every monomial") {
        for (int n : {3, 4}) {
            int mm = 2 * n;
            for (Sign s : {Sign::plus, Sign::minus}) {
                Stability theta = theta_pm(n, s);
                QuotientRing q = QuotientRing::build(theta, n - 1);
                std::vector<int> pool(mm);
                std::iota(pool.begin(), pool.end(), 1);
                for_each_subset_of_size(pool, n - 1, [&](Mask J) {
                    ChowElement mono = ChowElement::monomial(mm, ChowLabel{J, 0}, 1);
                    BReduction closed = b_reduce(theta, mono);
                    CHECK(closed.closed_form);
                    CHECK(closed.value == b_reduce_linalg(q, mono));
                });
            }
        }
    }
}

TEST_CASE("powers of linear forms in B") {
    SUBCASE("ambient expansion is multilinear") {
        LinearForm a{{rat(1), rat(2), rat(0), rat(-1)}};
        ChowElement sq = power_in_b_ambient(4, a, 2);
        ChowElement expect(4);
        expect.add_term(ChowLabel{0b0011, 0}, rat(4));    // 2 * 1 * 2
        expect.add_term(ChowLabel{0b1001, 0}, rat(-2));   // 2 * 1 * -1
        expect.add_term(ChowLabel{0b1010, 0}, rat(-4));   // 2 * 2 * -1
        CHECK(sq == expect);
        CHECK(power_in_b_ambient(4, a, 0) == ChowElement::one(4));
    }
    SUBCASE("symbolic expansion identity") {
        CHECK(verify_ambient_power_expansion(4, 1));
        CHECK(verify_ambient_power_expansion(6, 2));
        CHECK(verify_ambient_power_expansion(6, 3));
        CHECK(verify_ambient_power_expansion(8, 3));
    }
    SUBCASE("minus side kills forms missing the first coordinate") {
        LinearForm a{{rat(0), rat(2), rat(-3), rat(1, 2), rat(5), rat(-1)}};
        CHECK(power_in_b(theta_minus(3), a, 2).is_zero());
    }
    SUBCASE("plus side keeps them") {
        LinearForm a{{rat(0), rat(1), rat(1), rat(0), rat(0), rat(0)}};
        ChowElement got = power_in_b(theta_plus(3), a, 2);
        ChowElement expect = (pair_monomial(6, 1, 2) + pair_monomial(6, 1, 3)) * rat(-2);
        CHECK(got == expect);
        CHECK_FALSE(got.is_zero());
    }
    SUBCASE("zeroth power is one") {
        LinearForm a{std::vector<Rational>(6, rat(1, 3))};
        CHECK(power_in_b(theta_minus(3), a, 0) == ChowElement::one(6));
    }
    SUBCASE("reduced (n-1)-powers match their closed expansions") {
        // minus: (n-1)! sum_K a_1 a_K X_1 X_K over K in {2..2n}, |K| = n-2;
        // plus:  (n-1)! sum_K a_K (a_1 - sum_(j not in K, j >= 2) a_j) X_1 X_K
        Rng rng(55);
        for (int n : {3, 4}) {
            int m = 2 * n;
            Rational factorial(1);
            for (int i = 2; i <= n - 1; ++i) factorial *= i;
            std::vector<int> tail(m - 1);
            std::iota(tail.begin(), tail.end(), 2);
            for (int t = 0; t < 10; ++t) {
                LinearForm a{std::vector<Rational>(m, Rational(0))};
                for (int i = 0; i < m; ++i) a.coeffs[i] = rng.next_rational(7, 5);

                ChowElement expect_minus(m), expect_plus(m);
                for_each_subset_of_size(tail, n - 2, [&](Mask K) {
                    Rational aK(1);
                    Rational missing(0);
                    for (int j = 2; j <= m; ++j) {
                        if ((K >> (j - 1)) & 1u) aK *= a.coeffs[j - 1];
                        else missing += a.coeffs[j - 1];
                    }
                    ChowLabel label{K | Mask{1}, 0};
                    expect_minus.add_term(label, factorial * a.coeffs[0] * aK);
                    expect_plus.add_term(label, factorial * aK * (a.coeffs[0] - missing));
                });
                CHECK(power_in_b(theta_minus(n), a, n - 1) == expect_minus);
                CHECK(power_in_b(theta_plus(n), a, n - 1) == expect_plus);
            }
        }
    }
}

TEST_CASE("hyperplane power tests") {
    SUBCASE("the e1 table at n=3") {
        CHECK(hyperplane_power_test(theta_minus(3), LinearForm::unit(6, 1), 2));
        CHECK_FALSE(hyperplane_power_test(theta_plus(3), LinearForm::unit(6, 1), 2));
    }
    SUBCASE("no sign pattern vanishes on the plus side at n=3") {
        HyperplaneScan scan = scan_sign_patterns(theta_plus(3), 2);
        CHECK(scan.tested == 728);
        CHECK_FALSE(scan.found);
    }
    SUBCASE("the minus side scan finds e1") {
        HyperplaneScan scan = scan_sign_patterns(theta_minus(3), 2);
        CHECK(scan.found);
        CHECK(scan.witness.coeffs == LinearForm::unit(6, 1).coeffs);
    }
    SUBCASE("at n=2 both sides have vanishing hyperplanes") {
        CHECK(scan_sign_patterns(theta_minus(2), 1).found);
        HyperplaneScan plus = scan_sign_patterns(theta_plus(2), 1);
        CHECK(plus.found);
        // a1 = a2 + a3 + a4 is the plus-side hyperplane
        CHECK(hyperplane_power_test(theta_plus(2),
                                    LinearForm{{rat(1), rat(-1), rat(-1), rat(-1)}}, 1));
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(hyperplane_power_test(theta_plus(5), LinearForm::unit(10, 1), 4),
                        std::domain_error);
        CHECK_THROWS_AS(
            hyperplane_power_test(theta_plus(3), LinearForm{std::vector<Rational>(6, Rational(0))}, 2),
            std::invalid_argument);
    }
}

TEST_CASE("seeded sampling suites") {
    CHECK(sample_minus_membership(3, 25, 7).ok());
    CHECK(sample_plus_genericity(3, 25, 7).ok());
    CHECK(sample_minus_membership(4, 10, 7).ok());
    CHECK(sample_plus_genericity(4, 10, 7).ok());
}

TEST_CASE("distinguish across the small cases") {
    SUBCASE("n=2 stays inconclusive") {
        DistinguishReport rep = distinguish(2, 7);
        CHECK(rep.verdict == "inconclusive at this n");
        CHECK(rep.poincare_equal);
        CHECK(rep.minus_scan.found);
        CHECK(rep.plus_scan.found);
    }
    SUBCASE("n=3 is distinguished with the full evidence") {
        DistinguishReport rep = distinguish(3, 7);
        CHECK(rep.verdict == "rings distinguished");
        CHECK(rep.poincare_equal);
        CHECK(rep.witness_zero_in_minus);
        CHECK(rep.witness_nonzero_in_plus);
        CHECK(rep.certificate.all_closed);
        CHECK(rep.minus_e1_vanishes);
        CHECK_FALSE(rep.plus_e1_vanishes);
        CHECK(rep.witness.coeffs ==
              std::vector<Rational>{rat(0), rat(1), rat(1), rat(1), rat(1), rat(0)});
    }
    SUBCASE("n=4 is distinguished at the B level") {
        DistinguishReport rep = distinguish(4, 7);
        CHECK(rep.verdict == "rings distinguished");
        CHECK(rep.poincare_equal);
        CHECK(rep.minus_scan.found);
        CHECK_FALSE(rep.plus_scan.found);
    }
    SUBCASE("rendering is deterministic") {
        std::string a = render_json(to_json(distinguish(3, 7)));
        std::string b = render_json(to_json(distinguish(3, 7)));
        CHECK(a == b);
    }
}
