#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcfg/chow.hpp"
#include "chowcfg/torus.hpp"

using namespace chowcfg;

namespace {

ChowElement random_chow(int m, Rng& rng, int max_terms = 5) {
    ChowElement a(m);
    int terms = static_cast<int>(rng.next_long(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Mask J = static_cast<Mask>(rng.next_u64() & ((Mask{1} << m) - 1));
        int k = static_cast<int>(rng.next_long(0, 2));
        a.add_term(ChowLabel{J, k}, rng.next_rational(9, 9));
    }
    return a;
}

}  // namespace

TEST_CASE("products rewrite squares to Y") {
    int m = 6;
    ChowElement x1 = ChowElement::X(m, 1), x2 = ChowElement::X(m, 2);

    CHECK(x1 * x1 == ChowElement::Y(m));
    CHECK(((x1 + x2) * (x1 - x2)).is_zero());
    CHECK(x1.pow(3) == ChowElement::X(m, 1) * ChowElement::Y(m));
    CHECK(x1.pow(0) == ChowElement::one(m));

    SUBCASE("sum of four generators squared") {
        ChowElement s(m);
        for (int i = 2; i <= 5; ++i) s += ChowElement::X(m, i);
        std::vector<ChowElement> xs;
        for (int i = 2; i <= 5; ++i) xs.push_back(ChowElement::X(m, i));
        ChowElement expect = ChowElement::Y(m) * rat(4) +
                             elementary_symmetric(2, xs, ChowElement::one(m)) * rat(2);
        CHECK(s * s == expect);
    }
    SUBCASE("square of a generic linear form") {
        Rng rng(5);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> a;
            for (int i = 0; i < m; ++i) a.push_back(rng.next_rational(9, 5));
            ChowElement lf = ChowElement::linear_form(m, a);
            ChowElement expect(m);
            Rational sq(0);
            for (int i = 0; i < m; ++i) sq += a[i] * a[i];
            expect.add_term(ChowLabel{0, 1}, sq);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    expect.add_term(ChowLabel{(Mask{1} << i) | (Mask{1} << j), 0},
                                    a[i] * a[j] * 2);
            CHECK(lf * lf == expect);
        }
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(6);
    int m = 5;
    for (int t = 0; t < 15; ++t) {
        ChowElement a = random_chow(m, rng), b = random_chow(m, rng), c = random_chow(m, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("degrees multiply additively") {
    int m = 4;
    ChowElement a = ChowElement::X(m, 1) * ChowElement::X(m, 2);  // degree 2
    ChowElement b = ChowElement::Y(m) * ChowElement::X(m, 3);     // degree 3
    CHECK(a.degree() == 2);
    CHECK(b.degree() == 3);
    CHECK((a * b).degree() == 5);
    CHECK(a.is_homogeneous());
    CHECK_FALSE((a + ChowElement::one(m)).is_homogeneous());
}

TEST_CASE("graded basis enumeration") {
    SUBCASE("m=2 d=2") {
        std::vector<ChowLabel> basis = graded_basis(2, 2);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == ChowLabel{0b11, 0});
        CHECK(basis[1] == ChowLabel{0, 1});
    }
    SUBCASE("m=5 d=1") {
        std::vector<ChowLabel> basis = graded_basis(5, 1);
        REQUIRE(basis.size() == 5);
        for (int i = 0; i < 5; ++i) CHECK(basis[i] == ChowLabel{Mask{1} << i, 0});
    }
    SUBCASE("m=6 d=2 has 16 labels") { CHECK(graded_basis(6, 2).size() == 16); }
}

TEST_CASE("ambient hilbert function") {
    SUBCASE("m=1 is constant") {
        // basis 1, X1, Y, X1 Y, Y^2, ...
        CHECK(ambient_hilbert(1, 6) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    }
    SUBCASE("spot values") {
        CHECK(ambient_hilbert(5, 2)[2] == 11);
        CHECK(ambient_hilbert(6, 3) == std::vector<long>{1, 6, 16, 26});
    }
    SUBCASE("matches the closed series for m <= 8, D <= 12") {
        for (int m = 1; m <= 8; ++m) CHECK(ambient_hilbert(m, 12) == ambient_hilbert_series(m, 12));
    }
}

TEST_CASE("normal form is a retraction of the free ring") {
    Rng rng(7);
    int m = 4;
    SUBCASE("embedding and normalizing is the identity") {
        for (int t = 0; t < 20; ++t) {
            ChowElement a = random_chow(m, rng);
            CHECK(FreePolyXY::embed(a).normalize() == a);
        }
    }
    SUBCASE("coset representatives normalize identically") {
        for (int t = 0; t < 20; ++t) {
            ChowElement a = random_chow(m, rng);
            ChowElement u = random_chow(m, rng);
            int i = static_cast<int>(rng.next_long(1, m));
            FreePolyXY xi = FreePolyXY::X(m, i);
            FreePolyXY rep =
                FreePolyXY::embed(a) + FreePolyXY::embed(u) * (xi * xi - FreePolyXY::Y(m));
            CHECK(rep.normalize() == a);
        }
    }
    SUBCASE("X_i^e folds into Y powers") {
        FreePolyXY x = FreePolyXY::X(m, 2);
        FreePolyXY p = x * x * x * x * x;  // X_2^5
        ChowElement expect = ChowElement::X(m, 2) * ChowElement::Y(m) * ChowElement::Y(m);
        CHECK(p.normalize() == expect);
    }
}

TEST_CASE("degree-1 square-zero elements of the ambient ring are zero") {
    int m = 6;
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> a;
        bool nonzero = false;
        for (int i = 0; i < m; ++i) {
            a.push_back(rng.next_rational(6, 4));
            nonzero = nonzero || !is_zero(a.back());
        }
        if (!nonzero) a[0] = 1;
        ChowElement lf = ChowElement::linear_form(m, a);
        CHECK_FALSE((lf * lf).is_zero());
    }
}

TEST_CASE("serialization labels stay within range") {
    ChowElement a(3);
    CHECK_THROWS_AS(a.add_term(ChowLabel{Mask{1} << 3, 0}, rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(ChowElement::X(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(ChowElement::X(3, 1) * ChowElement::X(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(ChowElement::X(3, 1) + ChowElement::X(4, 1), std::invalid_argument);
}
