#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcfg/json_io.hpp"

using namespace chowcfg;

TEST_CASE("chow element wire format") {
    ChowElement a(3);
    a.add_term(ChowLabel{0b011, 0}, rat(-3, 4));
    a.add_term(ChowLabel{0, 2}, rat(5));

    Json j = to_json(a);
    CHECK(j.at("m") == 3);
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("J") == Json::array({1, 2}));
    CHECK(j.at("terms")[0].at("k") == 0);
    CHECK(j.at("terms")[0].at("c") == "-3/4");
    CHECK(chow_from_json(j) == a);

    SUBCASE("round trip on random elements") {
        Rng rng(41);
        for (int t = 0; t < 20; ++t) {
            ChowElement b(5);
            for (int u = 0; u < 4; ++u)
                b.add_term(ChowLabel{static_cast<Mask>(rng.next_u64() & 0x1f),
                                     static_cast<int>(rng.next_long(0, 2))},
                           rng.next_rational(99, 99));
            CHECK(chow_from_json(to_json(b)) == b);
        }
    }
}

TEST_CASE("stability wire format") {
    Stability theta = theta_plus(3, rat(1, 6));
    Json j = to_json(theta);
    CHECK(j.at("m") == 6);
    CHECK(j.at("weights")[0] == "1/2");
    CHECK(j.at("weights")[1] == "3/10");
    CHECK(stability_from_json(j) == theta);

    Json bad = j;
    bad["m"] = 5;
    CHECK_THROWS_AS(stability_from_json(bad), std::invalid_argument);
}

TEST_CASE("matrix wire format") {
    Json j = Json::array({Json::array({"1", "0"}), Json::array({"0", "-2/3"})});
    CandidateMatrix A = matrix_from_json(j);
    CHECK(A.arity() == 2);
    CHECK(A.at(1, 1) == rat(-2, 3));
}

TEST_CASE("renders are stable") {
    Json j{{"b", 1}, {"a", Json::array({"x"})}};
    CHECK(render_json(j) == render_json(j));
    CHECK(render_json(j).back() == '\n');
}
