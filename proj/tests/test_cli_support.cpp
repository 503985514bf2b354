#include <doctest.h>

#include "aclt/cli_support.hpp"
#include "aclt/verify.hpp"

using namespace aclt;
using namespace aclt::cli;

TEST_CASE("integer list parsing") {
    CHECK(parse_int_list("2,4,6") == std::vector<int>{2, 4, 6});
    CHECK(parse_int_list("8") == std::vector<int>{8});
    CHECK_THROWS_AS(parse_int_list("2,x"), input_error);
    CHECK_THROWS_AS(parse_int_list(""), input_error);
    CHECK_THROWS_AS(parse_int_list("2,,4"), input_error);
}

TEST_CASE("rational and scalar parsing") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK(parse_scalar(ordered_json("1/2")) == GaussianRational{Rational(1, 2)});
    CHECK(parse_scalar(ordered_json::array({"1/2", "-1/3"})) ==
          GaussianRational{Rational(1, 2), Rational(-1, 3)});
    CHECK_THROWS_AS(parse_scalar(ordered_json(7)), input_error);
}

TEST_CASE("builtin distribution and label resolution") {
    auto spec = builtin_bernoulli(6);
    CHECK(spec.alphabet.size() == 1);
    CHECK(spec.dist.at({0, 0}) == GaussianRational{Rational(1)});
    auto labels = resolve_labels(spec, {}, 4);
    CHECK(labels == std::vector<LabelId>(4, 0));
    auto named = resolve_labels(spec, {"b", "b"}, 0);
    CHECK(named == std::vector<LabelId>(2, 0));
    CHECK_THROWS_AS(resolve_labels(spec, {"zz"}, 0), input_error);
}

TEST_CASE("distribution file loading") {
    ordered_json j = ordered_json::parse(R"({
        "labels": ["b"],
        "adjoint_pairs": [["c", "c*"]],
        "moments": ["0", "1"],
        "words": {"c c*": "1/2", "b c": ["0", "1/3"]}
    })");
    auto spec = load_distribution(j, "test");
    CHECK(spec.alphabet.size() == 3);
    CHECK(spec.dist.at({0}) == GaussianRational{Rational(0)});
    CHECK(spec.dist.at({0, 0}) == GaussianRational{Rational(1)});
    LabelId c = *spec.alphabet.find("c"), cs = *spec.alphabet.find("c*");
    CHECK(spec.dist.at({c, cs}) == GaussianRational{Rational(1, 2)});
    CHECK(spec.dist.at({0, c}) == GaussianRational{Rational(0), Rational(1, 3)});

    CHECK_THROWS_AS(load_distribution(ordered_json::parse("{}"), "x"), input_error);
    CHECK_THROWS_AS(load_distribution(ordered_json::parse(R"({"words": {"nope": "1"}})"), "x"),
                    input_error);
    CHECK_THROWS_AS(load_distribution(ordered_json::parse("[1,2]"), "x"), input_error);
}

TEST_CASE("observable blocks loading") {
    ordered_json j = ordered_json::parse(R"({
        "d": 1, "m": 1,
        "observables": [
            {"label": "x", "beta": [[["1"]]], "gamma": [[["1"]]]},
            {"label": "y", "beta": [[["1/2"]]], "gamma": [[["2"]]],
             "delta": [[[["1/3"]]]]}
        ]
    })");
    auto obs = load_observables(j);
    REQUIRE(obs.size() == 2);
    CHECK(obs[0].centered());
    CHECK(obs[0].beta[0](0, 0) == GaussianRational{Rational(1)});
    CHECK(obs[1].delta[0][0](0, 0) == GaussianRational{Rational(1, 3)});
    CHECK(obs[1].beta[0](0, 0) == GaussianRational{Rational(1, 2)});

    CHECK_THROWS_AS(load_observables(ordered_json::parse("{}")), input_error);
    CHECK_THROWS_AS(load_observables(ordered_json::parse(R"({"d":1,"m":1,"observables":[]})")),
                    input_error);
    CHECK_THROWS_AS(load_observables(ordered_json::parse(
                        R"({"d":9,"m":1,"observables":[{"beta":[],"gamma":[]}]})")),
                    input_error);
}

TEST_CASE("matrix rendering") {
    BScalar s(2, 2);
    s(0, 0) = GaussianRational{Rational(1, 2)};
    s(0, 1) = GaussianRational{Rational(0), Rational(1)};
    auto exact = matrix_exact_json(s);
    CHECK(exact[0][0] == "1/2");
    CHECK(exact[0][1] == "1i");
    CHECK(exact[1][1] == "0");
    auto approx = matrix_approx_json(s);
    CHECK(approx[0][0] == 0.5);
    CHECK(approx[0][1].is_array());
}

TEST_CASE("csv projection") {
    ordered_json rows = ordered_json::array();
    rows.push_back({{"n", 2}, {"N", "limit"}, {"exact", "1"}, {"approx", 1.0}});
    rows.push_back({{"n", 4}, {"N", 2}, {"exact", "5/2"}, {"approx", 2.5}, {"error_exact", "-1/2"}});
    std::string csv = rows_to_csv(rows);
    CHECK(csv == "n,N,exact,approx,error_exact\n2,limit,1,1.0,\n4,2,5/2,2.5,-1/2\n");
}

TEST_CASE("verification failures carry the offending check's name") {
    verify_detail::Checker c;
    c.require(true, "fine");
    CHECK(c.ok);
    c.require(2 + 2 == 5, "catalan formula off by one");
    CHECK(!c.ok);
    CHECK(c.log.str().find("catalan formula off by one") != std::string::npos);
    // later failures do not overwrite the first diagnosis
    c.require(false, "secondary");
    CHECK(c.log.str().find("secondary") == std::string::npos);
}

TEST_CASE("verification filter selects by name substring") {
    auto only = run_verification("partitions");
    REQUIRE(only.size() == 1);
    CHECK(only[0].name == "partitions");
    CHECK(only[0].pass);
    CHECK(run_verification("no-such-check").empty());
}

TEST_CASE("scaled value rendering") {
    ScaledValue even{GaussianRational{Rational(5, 2)}, false};
    CHECK(exact_string(even) == "5/2");
    CHECK(approx_json(even, 4) == 2.5);
    ScaledValue odd{GaussianRational{Rational(1)}, true};
    CHECK(exact_string(odd) == "(1)*N^(-1/2)");
    CHECK(approx_json(odd, 4) == 0.5);
    ScaledValue zero{GaussianRational{}, true};
    CHECK(exact_string(zero) == "0");
}
