#include "bct/parse.hpp"
#include "bct/report.hpp"
#include "bct/reproduce.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bct;

TEST(Parse, Elements) {
    const QuadField Qs(-3), Qi(-1);
    EXPECT_EQ(parse_element("6*s-30", Qs), Qs.element(-30, 6));
    EXPECT_EQ(parse_element("-15", Qi), Qi.from_int(-15));
    EXPECT_EQ(parse_element("(3*i-1)/2", Qi), Qi.element(make_rational(-1, 2), make_rational(3, 2)));
    EXPECT_EQ(parse_element(" 2 ^ 3 - s^2 ", Qs), Qs.from_int(11));
    EXPECT_EQ(parse_element("2^-2", Qs), Qs.from_rational(make_rational(1, 4)));
    EXPECT_EQ(parse_element("--1", Qs), Qs.one());
    EXPECT_EQ(parse_element("1/(1+i)", Qi), Qi.element(make_rational(1, 2), make_rational(-1, 2)));
}

TEST(Parse, ElementErrors) {
    const QuadField Qs(-3), Qi(-1);
    auto pos = [](const std::string& t, const QuadField& K) {
        try {
            parse_element(t, K);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position);
        }
        return -1L;
    };
    EXPECT_EQ(pos("1+i", Qs), 2);
    EXPECT_EQ(pos("2*", Qi), 2);
    EXPECT_EQ(pos("(1+2", Qi), 4);
    EXPECT_EQ(pos("1/0", Qi), 2);
    EXPECT_EQ(pos("3 x", Qi), 2);
    EXPECT_EQ(pos("", Qi), 0);
}

TEST(Parse, RoundTrip) {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> u(-1000, 1000), v(1, 97);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        for (int t = 0; t < 500; ++t) {
            QuadElem x = K.element(make_rational(u(rng), v(rng)), make_rational(u(rng), v(rng)));
            if (t % 5 == 0) x = K.element(make_rational(u(rng), v(rng)), 0);
            if (t % 7 == 0) x = K.element(0, make_rational(u(rng), v(rng)));
            EXPECT_EQ(parse_element(render(x), K), x) << render(x);
        }
    }
}

TEST(Parse, Fields) {
    EXPECT_EQ(parse_field("Qi").D(), -1);
    EXPECT_EQ(parse_field("Qsqrt-3").D(), -3);
    EXPECT_EQ(parse_field("Qsqrt<-3>").D(), -3);
    EXPECT_EQ(parse_field("Q(sqrt(-3))").D(), -3);
    EXPECT_EQ(parse_field("Qsqrt5").D(), 5);
    EXPECT_THROW(parse_field("Qj"), ParseError);
    EXPECT_THROW(parse_field("Qsqrtx"), ParseError);
}

TEST(Parse, Curves) {
    const QuadField Qi(-1);
    const auto C = parse_curve("[1,0,1,-454,-544]", Qi);
    EXPECT_EQ(C.a1(), Qi.one());
    EXPECT_EQ(C.a6(), Qi.from_int(-544));
    const auto S = parse_curve("[ -1 , i ]", Qi);
    EXPECT_TRUE(S.is_short());
    EXPECT_EQ(S.B(), Qi.generator());
    EXPECT_EQ(parse_curve(render_curve(C), Qi).a(), C.a());
    EXPECT_THROW(parse_curve("[0,0,0,0,0]", Qi), SingularCurve);
    EXPECT_THROW(parse_curve("[1,2,3]", Qi), ParseError);
    EXPECT_THROW(parse_curve("1,2", Qi), ParseError);
    try {
        parse_curve("[1, 2x]", Qi);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
}

TEST(Report, JsonLayout) {
    const QuadField Qi(-1);
    const auto C = parse_curve("[1,1,1,-80,242]", Qi);
    const auto rep = growth_extensions(C);
    const auto j = growth_report_json(C, rep);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"field", "curve", "torsion", "growths"}));
    EXPECT_EQ(j["field"], "Qi");
    EXPECT_EQ(j["torsion"]["order"], 4);
    EXPECT_EQ(j["torsion"]["invariants"], ordered_json::array({1, 4}));
    bool found = false;
    for (const auto& g : j["growths"]) {
        std::vector<std::string> gk;
        for (auto it = g.begin(); it != g.end(); ++it) gk.push_back(it.key());
        EXPECT_EQ(gk, (std::vector<std::string>{"d", "d_class", "group", "order", "generators", "provenance"}));
        const QuadElem d = parse_element(g["d_class"].get<std::string>(), Qi);
        EXPECT_TRUE(same_square_class(d, parse_element(g["d"].get<std::string>(), Qi)));
        if (same_square_class(d, Qi.from_int(5)) && g["group"] == "C8") found = true;
    }
    EXPECT_TRUE(found);
    // deterministic
    EXPECT_EQ(growth_report_json(C, growth_extensions(C)).dump(), j.dump());
}

TEST(Report, TextAndCsv) {
    const QuadField Qs(-3);
    const auto C = parse_curve("[1,0,1,4,-6]", Qs);
    const auto rep = growth_extensions(C);
    const std::string text = growth_report_text(C, rep);
    EXPECT_NE(text.find("C3xC6 | -7 | C6xC6 | [1,0,1,4,-6]"), std::string::npos) << text;
    const std::string csv = growth_report_csv(C, rep);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "field,curve,base_group,d,d_class,group,provenance");
}

TEST(Reproduce, RowChecksAndJobsIndependence) {
    const auto rows = parse_table(nlohmann::json::parse(R"([
        {"field": "Qi", "base_group": "C1", "d": "-3", "extended_group": "C3", "model": "[0,1,1,-769,-8470]"},
        {"field": "Qi", "base_group": "C2", "d": "-7", "extended_group": "C2xC2", "model": "[1,0,1,-171,-874]"},
        {"field": "Qi", "base_group": "C2", "d": "-3", "extended_group": "C6", "model": "[1,0,1,-171,-874]"},
        {"field": "Qi", "base_group": "C2", "d": "8", "extended_group": "C4", "model": "[1,0,1,-454,-544]"},
        {"field": "Qi", "base_group": "C2", "d": "-3", "extended_group": "C4", "model": "[1,0,1,-454,-544]"},
        {"field": "Qsqrt-3", "base_group": "C4", "d": "-1", "extended_group": "C4xC4", "model": "[0,0,0,13,-34]"},
        {"field": "Qsqrt-3", "base_group": "C2", "d": "-1", "extended_group": "C4", "model": "[0,0,0,13,-34]"}
    ])"));
    std::vector<std::string> reference;
    for (unsigned jobs : {1u, 3u, 8u}) {
        GrowthCache cache;
        const auto res = check_rows(rows, jobs, cache);
        ASSERT_EQ(res.size(), rows.size());
        std::vector<std::string> lines;
        for (const auto& r : res) lines.push_back(describe(r));
        if (reference.empty()) reference = lines;
        EXPECT_EQ(lines, reference);
        EXPECT_TRUE(res[0].pass);
        EXPECT_TRUE(res[1].pass);
        EXPECT_TRUE(res[2].pass);
        EXPECT_TRUE(res[3].pass);
        EXPECT_FALSE(res[4].pass);
        EXPECT_TRUE(res[4].d_found);
        EXPECT_FALSE(res[4].group_ok);
        EXPECT_TRUE(res[5].pass);
        EXPECT_FALSE(res[6].pass);
        EXPECT_FALSE(res[6].base_ok);
    }
}

TEST(Reproduce, BadRowsAreReported) {
    const auto rows = parse_table(nlohmann::json::parse(R"([
        {"field": "Qi", "base_group": "C1", "d": "-3", "extended_group": "C3", "model": "[0,0,0,0,0]"},
        {"field": "Qi", "base_group": "C1", "d": "-3+", "extended_group": "C3", "model": "[0,1,1,-769,-8470]"}
    ])"));
    GrowthCache cache;
    const auto res = check_rows(rows, 2, cache);
    EXPECT_FALSE(res[0].pass);
    EXPECT_FALSE(res[0].error.empty());
    EXPECT_FALSE(res[1].pass);
    EXPECT_NE(res[1].error.find("position"), std::string::npos);
    EXPECT_THROW(parse_table(nlohmann::json::parse(R"({"rows": []})")), std::invalid_argument);
}
