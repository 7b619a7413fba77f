#include <doctest.h>

#include "perfectoid/spectra.hpp"

using namespace perfectoid;

namespace {
const PExponent N16 = PExponent::integer(2, 16);

FieldElem f_one() { return FieldElem(CharPSeries::one(2, N16)); }
FieldElem f_zero() { return FieldElem(CharPSeries::zero(2, N16)); }
FieldElem f_t() { return FieldElem(CharPSeries::t(2, N16)); }

ToyElem pe(std::vector<FieldElem> coords) { return ToyElem(ProductElem{std::move(coords)}); }
} // namespace

TEST_CASE("candidate families per presentation") {
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    CHECK(berkovich_points(k2, 0, {}).size() == 2);

    ToyRing poly = ToyRing::poly_gauss_c(CoefSide::charp, 2, 1, N16, NormValue::p_power(2, 1));
    // |lambda| > c is excluded from the family
    auto fam = berkovich_points(poly, 1, {CharPSeries::one(2, N16), CharPSeries::t(2, N16)});
    std::size_t eval_count = 0;
    for (const auto& d : fam) eval_count += d.is_eval_point() ? 1 : 0;
    CHECK(eval_count == 1);

    ToyRing g1 = ToyRing::gauss_algebra(CoefSide::charp, 2, 1, N16, 1);
    auto gf = berkovich_points(g1, 2, {});
    CHECK(gf.size() == 3); // radii 1, p^{-1}, p^{-2}
}

TEST_CASE("minimal boundaries by subset enumeration") {
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    auto family = berkovich_points(k2, 0, {});
    std::vector<ToyElem> tests = {pe({f_one(), f_zero()}), pe({f_zero(), f_one()}),
                                  pe({f_one(), f_one()})};
    ShilovResult r = shilov_bruteforce(k2, family, tests);
    CHECK(r.unique);
    REQUIRE(r.minimal_sets.size() == 1);
    CHECK(r.minimal_sets.front().size() == 2);

    // a single Gauss point suffices on monomial tests
    ToyRing g1 = ToyRing::gauss_algebra(CoefSide::charp, 2, 1, N16, 1);
    auto gf = berkovich_points(g1, 1, {});
    GaussElement x = GaussElement::monomial(f_one(), {PExponent::integer(2, 1)});
    GaussElement one = GaussElement::constant(f_one(), 1);
    ShilovResult rg = shilov_bruteforce(g1, gf, {ToyElem(x), ToyElem(one)});
    CHECK(rg.unique);
    CHECK(rg.minimal_sets.front().size() == 1);

    // K^3 with a coordinate never exercised: two minimal subsets, flagged
    ToyRing k3 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 3);
    auto family3 = berkovich_points(k3, 0, {});
    std::vector<ToyElem> partial = {pe({f_one(), f_zero(), f_one()}),
                                    pe({f_zero(), f_one(), f_one()})};
    ShilovResult r3 = shilov_bruteforce(k3, family3, partial);
    CHECK_FALSE(r3.unique);
    CHECK(r3.minimal_sets.size() == 2);

    // family-incomplete signal: norms cannot be attained by an empty family
    CHECK_THROWS(shilov_bruteforce(k2, {family[0]}, tests));
}

TEST_CASE("topological zero divisors: direct witness vs Shilov vanishing") {
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    auto family = berkovich_points(k2, 0, {});
    std::vector<ToyElem> tests = {pe({f_one(), f_zero()}), pe({f_zero(), f_one()}),
                                  pe({f_one(), f_one()})};

    TdzReport r1 = is_topological_zero_divisor(k2, pe({f_one(), f_zero()}), family, tests);
    CHECK(r1.direct_verdict);
    CHECK(r1.escassut_verdict);
    CHECK(r1.agree);
    CHECK(!r1.direct_witness.empty());

    TdzReport r2 = is_topological_zero_divisor(k2, pe({f_one(), f_one()}), family, tests);
    CHECK_FALSE(r2.direct_verdict);
    CHECK(r2.agree);

    // X in a Gauss algebra is not a TDZ (multiplication is isometric)
    ToyRing g1 = ToyRing::gauss_algebra(CoefSide::charp, 2, 1, N16, 1);
    auto gf = berkovich_points(g1, 1, {});
    GaussElement x = GaussElement::monomial(f_one(), {PExponent::integer(2, 1)});
    GaussElement one = GaussElement::constant(f_one(), 1);
    TdzReport r3 = is_topological_zero_divisor(g1, ToyElem(x), gf, {ToyElem(x), ToyElem(one)});
    CHECK_FALSE(r3.direct_verdict);
}

TEST_CASE("TopSpec membership tables") {
    // product: both coordinate kernels are in; the zero ideal is not prime
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    auto rows = topspec_enumerate(k2, {CandidatePrime::coordinate_kernel(0),
                                       CandidatePrime::coordinate_kernel(1), CandidatePrime::zero_ideal()});
    CHECK(rows[0].verdict == TopSpecVerdict::in);
    CHECK(rows[1].verdict == TopSpecVerdict::in);
    CHECK(rows[2].verdict == TopSpecVerdict::out);

    // quotient by the augmentation ideal: the zero ideal of the quotient is in
    ToyRing quot = ToyRing::quotient_by_monomial(CoefSide::charp, 2, 1, N16,
                                                 MonomialIdeal::augmentation(2, 1, 0));
    auto qrows = topspec_enumerate(quot, {CandidatePrime::zero_ideal()});
    CHECK(qrows[0].verdict == TopSpecVerdict::in);

    // gauss: monomial candidates decide through radicality and primality
    ToyRing g1 = ToyRing::gauss_algebra(CoefSide::charp, 2, 1, N16, 1);
    auto grows = topspec_enumerate(
        g1, {CandidatePrime::monomial(MonomialIdeal::augmentation(2, 1, 0)),
             CandidatePrime::monomial(MonomialIdeal::principal(2, 1, 0, PExponent::integer(2, 1)))});
    CHECK(grows[0].verdict == TopSpecVerdict::in);
    CHECK(grows[1].verdict == TopSpecVerdict::out);
}

TEST_CASE("Zariskisation comparison on the polynomial presentation") {
    ToyRing poly = ToyRing::poly_gauss_c(CoefSide::untilt, 2, 3, N16, NormValue::p_power(2, 1));
    std::vector<CandidatePrime> cands = {CandidatePrime::linear(CharPSeries::zero(2, N16)),
                                         CandidatePrime::linear(CharPSeries::t(2, N16)),
                                         CandidatePrime::linear(CharPSeries::one(2, N16)),
                                         CandidatePrime::zero_ideal()};
    auto rows = topspec_zar_compare(poly, cands);
    REQUIRE(rows.size() == 3); // the out-member (T - 1) is skipped
    for (const auto& row : rows) {
        CHECK(row.contraction_ok);
        CHECK(row.extension_prime);
    }
}

TEST_CASE("finite quasi-compactness with explicit unit witnesses") {
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    std::vector<CandidatePrime> pts = {CandidatePrime::coordinate_kernel(0),
                                       CandidatePrime::coordinate_kernel(1)};
    // a redundant third cover element (not a unit): the minimal subfamily has size 2
    std::vector<ToyElem> cover = {pe({f_one(), f_zero()}), pe({f_zero(), f_one()}),
                                  pe({f_t(), f_zero()})};
    QuasiCompactResult r = quasicompact_check(k2, cover, pts);
    CHECK(r.covers);
    CHECK(r.witness_verified);
    CHECK(r.subfamily.size() == 2);

    // a non-cover is reported as such
    QuasiCompactResult bad = quasicompact_check(k2, {pe({f_one(), f_zero()})}, pts);
    CHECK_FALSE(bad.covers);
}

TEST_CASE("sobriety of the enumerated posets") {
    ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, 2, 1, N16, 2);
    SobrietyResult r = sobriety_check(k2, {CandidatePrime::coordinate_kernel(0),
                                           CandidatePrime::coordinate_kernel(1)});
    CHECK(r.pass);
    bool saw_reducible = false;
    for (const auto& row : r.rows)
        if (!row.irreducible) saw_reducible = true;
    CHECK(saw_reducible); // the union of both closed points is reducible

    ToyRing poly = ToyRing::poly_gauss_c(CoefSide::untilt, 2, 3, N16, NormValue::p_power(2, 1));
    SobrietyResult r2 = sobriety_check(poly, {CandidatePrime::zero_ideal(),
                                              CandidatePrime::linear(CharPSeries::zero(2, N16)),
                                              CandidatePrime::linear(CharPSeries::t(2, N16))});
    CHECK(r2.pass);
    // the whole space is irreducible with generic point (0)
    bool found_whole = false;
    for (const auto& row : r2.rows)
        if (row.irreducible && row.generic_point == "(0)") found_whole = true;
    CHECK(found_whole);
}
