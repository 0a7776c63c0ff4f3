#include <doctest.h>

#include <random>

#include "hopfdiag/json_io.hpp"
#include "oracles.hpp"

using namespace hopfdiag;

TEST_CASE("rational json") {
    CHECK(json(Rational(-3, 4)).dump() == "\"-3/4\"");
    CHECK(json(Rational(5)).dump() == "\"5\"");
    CHECK(json::parse("\"6/8\"").get<Rational>() == Rational(3, 4));
    CHECK(json::parse("7").get<Rational>() == Rational(7));
    CHECK_THROWS(json::parse("1.5").get<Rational>());
    CHECK_THROWS(json::parse("\"1/0\"").get<Rational>());
}

TEST_CASE("series json") {
    const EGFSeries s({Rational(1), Rational(1, 2), Rational(0)});
    const auto j = json(s);
    CHECK(j.dump() == R"({"order":2,"coeffs":["1","1/2","0"]})");
    CHECK(series_from_json(j) == s);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"order":3,"coeffs":["1"]})")), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(json::parse("[1]")), std::invalid_argument);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const EGFSeries r(oracle::random_rationals(rng, 1 + rng() % 8));
        CHECK(series_from_json(json::parse(json(r).dump())) == r);
    }
}

TEST_CASE("polynomial json") {
    const auto p = ZPolynomial::in_y({0, 1, 3, 1}) + ZPolynomial::monomial(2, 0, Rational(-1, 2));
    const auto j = json(p);
    CHECK(j.at("text") == p.to_string());
    CHECK(zpolynomial_from_json(j) == p);
    CHECK(zpolynomial_from_json(json::parse("\"2/3\"")) == ZPolynomial(Rational(2, 3)));

    const auto nf = json(NormalForm::term(2, 2) + NormalForm::term(1, 1));
    CHECK(nf.at("text") == "A a + A^2 a^2");
    CHECK(nf.at("terms").size() == 2);
}

TEST_CASE("diagram and hopf json") {
    const auto d = canonicalize({{0, 1}, {2, 0}});
    const auto j = json(d);
    CHECK(j.dump() == json{{"mult", d.matrix()}}.dump());
    CHECK(diagram_from_json(json::parse(R"({"mult":[[2,0],[0,1]]})")) == d);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"mult":[[0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"matrix":[[1]]})")), std::invalid_argument);

    const auto h = HopfElement::of(Monomial({Generator(BellGenerator{2}), Generator(BellGenerator{1})}), Rational(1, 3)) +
                   HopfElement::of(Generator(canonicalize({{1, 1}})), Rational(-2));
    CHECK(hopf_element_from_json(json::parse(json(h).dump())) == h);
    CHECK(json(HopfElement::of(Generator(BellGenerator{3}))).dump() ==
          R"({"terms":[{"monomial":[{"bell":3}],"coeff":"1"}]})");
    CHECK_THROWS_AS(generator_from_json(json::parse(R"({"diag":{"mult":[[1,0],[0,1]]}})")), std::invalid_argument);
    CHECK_THROWS_AS(generator_from_json(json::parse(R"({"bell":0})")), std::invalid_argument);
}

TEST_CASE("generator map json") {
    const auto zero = generator_map_from_json(json::parse(R"({"default":{"terms":[]}})"));
    CHECK(zero(canonicalize({{3}})).is_zero());

    const auto table = generator_map_from_json(json::parse(
        R"({"entries":[{"diag":{"mult":[[1]]},"image":{"terms":[{"monomial":[{"bell":1}],"coeff":"1"}]}}]})"));
    CHECK(table(canonicalize({{1}})) == HopfElement::of(Generator(BellGenerator{1})));
    CHECK_THROWS_AS(table(canonicalize({{2}})), std::invalid_argument);

    CHECK_THROWS_AS(generator_map_from_json(json::parse(
                        R"({"default":{"terms":[{"monomial":[{"diag":{"mult":[[1]]}}],"coeff":"1"}]}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(generator_map_from_json(json::parse("[]")), std::invalid_argument);

    json report = check_hopf_morphism(zero, 2, "zero");
    CHECK(report.at("surjective") == false);
    CHECK(report.at("all_passed") == true);
}
