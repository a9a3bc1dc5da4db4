#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcfg/chow.hpp"
#include "chowcfg/torus.hpp"

using namespace chowcfg;

namespace {

Polynomial random_torus_poly(int m, Rng& rng, int max_terms = 6, int max_exp = 2) {
    Polynomial f(m + 2);
    int terms = static_cast<int>(rng.next_long(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Polynomial::Exponents e(m + 2, 0);
        for (int v = 0; v < m + 2; ++v) e[v] = static_cast<int>(rng.next_long(0, max_exp));
        f.add_term(e, rng.next_rational(9, 9));
    }
    return f;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(parse_rational("5") == rat(5));
    CHECK(rational_str(rat(-3, 4)) == "-3/4");
    CHECK(rational_str(rat(8, 4)) == "2");
    CHECK(rational_str(rat(0, 7)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    int m = 2;
    Polynomial x1 = torus_x(m, 1), y1 = torus_y1(m), y2 = torus_y2(m);

    SUBCASE("product expands") {
        Polynomial lhs = (y2 - x1) * (y1 - x1);
        Polynomial rhs = y1 * y2 - x1 * y1 - x1 * y2 + x1 * x1;
        CHECK(lhs == rhs);
    }
    SUBCASE("additive identity") {
        Polynomial a = (y1 + y2) * (y1 - x1);
        CHECK(a + torus_zero(m) == a);
    }
    SUBCASE("binomial identity") {
        Polynomial lhs = (y1 + y2) * (y1 + y2) - y1 * y2 * rat(4);
        Polynomial rhs = (y1 - y2) * (y1 - y2);
        CHECK(lhs == rhs);
    }
    SUBCASE("arity mismatch rejected") {
        CHECK_THROWS_AS(torus_x(2, 1) + torus_x(3, 1), std::invalid_argument);
        CHECK_THROWS_AS(torus_x(2, 1) * torus_x(3, 1), std::invalid_argument);
    }
}

TEST_CASE("swap_y") {
    int m = 2;
    Polynomial x1 = torus_x(m, 1), x2 = torus_x(m, 2), y1 = torus_y1(m), y2 = torus_y2(m);
    CHECK(swap_y(y1 * y1 * y2) == y1 * y2 * y2);
    CHECK(swap_y(x1 * y1 - x2 * y2) == x1 * y2 - x2 * y1);

    Polynomial sym = y1 * y2 + (y1 + y2) * x1;
    CHECK(swap_y(sym) == sym);

    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
        Polynomial f = random_torus_poly(3, rng);
        CHECK(swap_y(swap_y(f)) == f);
    }
}

TEST_CASE("divided difference") {
    int m = 2;
    Polynomial x1 = torus_x(m, 1), y1 = torus_y1(m), y2 = torus_y2(m);

    CHECK(divided_difference(y2 - x1) == torus_const(m, 1));
    CHECK(divided_difference((y2 - x1) * (y2 - y1)) == y1 + y2 - x1 * rat(2));

    Polynomial sym = y1 * y2 * y2 + y1 * y1 * y2 + x1;
    CHECK(divided_difference(sym).is_zero());

    SUBCASE("reconstruction and symmetry of the quotient") {
        Rng rng(12);
        for (int t = 0; t < 30; ++t) {
            Polynomial f = random_torus_poly(3, rng);
            Polynomial q = divided_difference(f);
            int mm = 3;
            CHECK(q * (torus_y2(mm) - torus_y1(mm)) == f - swap_y(f));
            CHECK(swap_y(q) == q);
            CHECK(divided_difference(q).is_zero());
        }
    }
}

TEST_CASE("elementary symmetric") {
    int m = 3;
    std::vector<Polynomial> vars{torus_x(m, 1), torus_x(m, 2), torus_x(m, 3)};
    Polynomial one = torus_const(m, 1);

    Polynomial e2 = elementary_symmetric(2, vars, one);
    Polynomial expect = vars[0] * vars[1] + vars[0] * vars[2] + vars[1] * vars[2];
    CHECK(e2 == expect);
    CHECK(elementary_symmetric(0, vars, one) == one);
    CHECK(elementary_symmetric(4, vars, one).is_zero());
    CHECK(elementary_symmetric(3, vars, one) == vars[0] * vars[1] * vars[2]);
}

TEST_CASE("substitute_chow on generators") {
    int m = 3;
    Rational half = rat(1, 2);
    Polynomial y1 = torus_y1(m), y2 = torus_y2(m);

    CHECK(substitute_chow(ChowElement::X(m, 1)) == (y1 + y2) * half - torus_x(m, 1));
    CHECK(substitute_chow(ChowElement::Y(m)) == (y1 + y2) * (y1 + y2) * rat(1, 4) - y1 * y2);

    for (int i = 1; i <= m; ++i) {
        FreePolyXY xi = FreePolyXY::X(m, i);
        FreePolyXY rel = xi * xi - FreePolyXY::Y(m);
        Polynomial expect = (y1 - torus_x(m, i)) * (y2 - torus_x(m, i));
        CHECK(substitute_chow(rel) == expect);
    }
}

TEST_CASE("substitute_chow is a ring homomorphism on free polynomials") {
    int m = 3;
    Rng rng(13);
    auto random_free = [&](int max_terms) {
        FreePolyXY g(m);
        int terms = static_cast<int>(rng.next_long(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(m, 0);
            for (int i = 0; i < m; ++i) e[i] = static_cast<int>(rng.next_long(0, 2));
            g.add_term({e, static_cast<int>(rng.next_long(0, 1))}, rng.next_rational(9, 9));
        }
        return g;
    };
    for (int t = 0; t < 20; ++t) {
        FreePolyXY g = random_free(4), h = random_free(4);
        CHECK(substitute_chow(g * h) == substitute_chow(g) * substitute_chow(h));
        CHECK(substitute_chow(g + h) == substitute_chow(g) + substitute_chow(h));
    }
}
