#include <doctest.h>

#include "perfectoid/config.hpp"
#include "perfectoid/json_io.hpp"
#include "perfectoid/report.hpp"
#include "perfectoid/sampling.hpp"

using namespace perfectoid;

namespace {
const PExponent N16 = PExponent::integer(2, 16);
} // namespace

TEST_CASE("wire formats round-trip") {
    Sampler s(71);
    for (int i = 0; i < 50; ++i) {
        CharPSeries f = s.charp(2, N16, 4, 3, 2);
        CHECK(charp_from_json(charp_to_json(f)) == f);

        UntiltElement x = s.untilt(2, 3, N16, 2, 2);
        CHECK(untilt_from_json(untilt_to_json(x)).equal_at_precision(x));

        GaussElement g = s.gauss(i % 2 ? CoefSide::charp : CoefSide::untilt, 2, 2, 3, N16, 3, 2, 1);
        CHECK(gauss_from_json(gauss_to_json(g)).equal_at_precision(g));
    }

    UntiltFraction fr(UntiltElement::one(2, 3, N16), 1);
    CHECK(fraction_from_json(fraction_to_json(fr)).equal_at_precision(fr));

    for (const auto& I : {MonomialIdeal::zero_ideal(2, 2), MonomialIdeal::augmentation(2, 2, 1),
                          MonomialIdeal::principal(2, 2, 0, PExponent(2, 3, 1))})
        CHECK(ideal_from_json(ideal_to_json(I), 2) == I);
}

TEST_CASE("norm values parse from the documented schema") {
    CHECK(norm_value_from_json(R"({"zero": true})", 2).is_zero());
    NormValue v = norm_value_from_json(R"({"exp": {"num": 3, "kpow": 1}})", 2);
    CHECK(v == NormValue::pow(PExponent(2, 3, 1)));
    CHECK_THROWS_AS(norm_value_from_json("{}", 2), ParseError);
    CHECK_THROWS_AS(charp_from_json("not json"), ParseError);
}

TEST_CASE("configuration validation and parsing") {
    GlobalConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.p = 7;
    CHECK_THROWS_AS(cfg.validate(), UnsupportedConfig);

    GlobalConfig parsed = config_from_json(
        R"({"p": 3, "wittLen": 2, "tPrec": {"num": 9, "kpow": 0}, "outputFormat": "tsv"})");
    CHECK(parsed.p == 3);
    CHECK(parsed.witt_len == 2);
    CHECK(parsed.t_prec() == PExponent::integer(3, 9));
    CHECK(parsed.output_format == "tsv");
    CHECK_NOTHROW(parsed.validate());

    CHECK_THROWS_AS(config_from_json("[1, 2"), ParseError);
    // round trip through the emitter
    GlobalConfig again = config_from_json(config_to_json(parsed));
    CHECK(again.p == parsed.p);
    CHECK(again.witt_len == parsed.witt_len);
}

TEST_CASE("reports render deterministically in both formats") {
    Report rep;
    auto& sec = rep.section("demo");
    sec.fields.emplace_back("norm", NormValue::pow(PExponent(2, 3, 1)).to_string());
    sec.tables.push_back(ReportTable{"rows", {"k", "v"}, {{"0", "1"}, {"1", "2^(-1)"}}});

    std::string j1 = render_report(rep, "json");
    std::string j2 = render_report(rep, "json");
    CHECK(j1 == j2);
    CHECK(j1.find("2^(-3/2)") != std::string::npos);

    std::string t1 = render_report(rep, "tsv");
    CHECK(t1.find("# demo") != std::string::npos);
    CHECK(t1.find("k\tv") != std::string::npos);
    CHECK_THROWS_AS(render_report(rep, "yaml"), UnsupportedConfig);
}
