#include <doctest.h>

#include "perfectoid/sampling.hpp"
#include "perfectoid/tilt.hpp"

using namespace perfectoid;

namespace {
const PExponent N27 = PExponent::integer(3, 27);
const PExponent N16 = PExponent::integer(2, 16);
} // namespace

TEST_CASE("tilt sequences are compatible under p-th powers") {
    const WittPolyCache& c = witt_cache(2, 3);
    Sampler s(51);
    for (int i = 0; i < 10; ++i) {
        CharPSeries f = s.charp_nonzero(2, N16, 2, 1, 1);
        TiltSequence seq(c, f, N16);
        CHECK(seq.compatible(0));
        CHECK(seq.compatible(1));
    }
}

TEST_CASE("the limit addition formula") {
    // p = 2, f = g = t: the sums collapse to 0
    const WittPolyCache& c2 = witt_cache(2, 3);
    CharPSeries t2 = CharPSeries::t(2, N16);
    TiltAddReport r = tilt_add_limit(c2, t2, t2, 0, 3, N16);
    REQUIRE(r.stabilized_at.has_value());
    CHECK(*r.stabilized_at <= 3);
    CHECK(r.partial.back().is_zero_at_precision());
    CHECK(r.matches_expected);

    // g = 0: the sequence is constant at f^{(n)}
    CharPSeries zero2 = CharPSeries::zero(2, N16);
    TiltAddReport rz = tilt_add_limit(c2, t2, zero2, 1, 2, N16);
    REQUIRE(rz.stabilized_at.has_value());
    CHECK(*rz.stabilized_at == 0);
    CHECK(rz.matches_expected);

    // p = 3, f = t, g = t^2: stabilizes to sharp(t + t^2)
    const WittPolyCache& c3 = witt_cache(3, 3);
    CharPSeries t3 = CharPSeries::t(3, N27);
    CharPSeries t3sq = CharPSeries::monomial(3, PExponent::integer(3, 2), 1, N27);
    TiltAddReport r3 = tilt_add_limit(c3, t3, t3sq, 0, 3, N27);
    REQUIRE(r3.stabilized_at.has_value());
    CHECK(r3.matches_expected);
    CHECK(r3.expected.equal_at_precision(sharp(c3, t3 + t3sq, N27)));
}

TEST_CASE("descriptor tilting preserves the family data") {
    SeminormDescriptor phi = SeminormDescriptor::gauss_radius(CoefSide::untilt, {NormValue::p_power(2, 1)});
    SeminormDescriptor flat = seminorm_tilt(phi);
    CHECK(flat.side() == CoefSide::charp);
    CHECK(flat.gauss_radius_data().r[0] == NormValue::p_power(2, 1));
    CHECK(seminorm_sharp(flat).side() == CoefSide::untilt);
    CHECK_THROWS_AS(seminorm_tilt(flat), AmbientMismatch);

    // contract on monomials: phi_flat(g) = phi(g^sharp)
    Sampler s(52);
    const std::uint32_t n = 3;
    for (int i = 0; i < 25; ++i) {
        CharPSeries coeff = s.charp_nonzero(2, N16, 1, 1, 1);
        PExponent e = s.exponent(2, 3, 2);
        GaussElement g = GaussElement::monomial(FieldElem(coeff), {e});
        GaussElement gs = gauss_sharp(g, n);
        NormEstimate lhs = gauss_eval(flat, g);
        NormEstimate rhs = gauss_eval(phi, gs);
        if (lhs.below || rhs.below) continue;
        CHECK(lhs.value == rhs.value);
    }
}

TEST_CASE("monomial ideal membership, primality, inclusion") {
    MonomialIdeal X = MonomialIdeal::principal(2, 1, 0, PExponent::integer(2, 1));
    MonomialIdeal m = MonomialIdeal::augmentation(2, 1, 0);
    MonomialIdeal zero = MonomialIdeal::zero_ideal(2, 1);

    CHECK(X.contains_exponent({PExponent::integer(2, 1)}));
    CHECK_FALSE(X.contains_exponent({PExponent(2, 1, 1)}));
    CHECK(m.contains_exponent({PExponent(2, 1, 2)}));
    CHECK_FALSE(m.contains_exponent({PExponent::zero(2)}));

    CHECK(zero.is_prime());
    CHECK(m.is_prime());
    CHECK_FALSE(X.is_prime());
    CHECK(m.is_spectrally_reduced());
    CHECK_FALSE(X.is_spectrally_reduced());

    CHECK(m.includes(X));
    CHECK(m.includes(zero));
    CHECK_FALSE(X.includes(m));
    CHECK_FALSE(zero.includes(m));

    // bounded primality witness search
    CHECK(primality_witness(X, 2, 1).has_value()); // X^{1/2} * X^{1/2} = X
    CHECK_FALSE(primality_witness(m, 2, 1).has_value());
    MonomialIdeal joint = MonomialIdeal::with_bounds(
        2, 2,
        {{0u, {MonomialIdeal::BoundType::augmentation, PExponent::zero(2)}},
         {1u, {MonomialIdeal::BoundType::augmentation, PExponent::zero(2)}}});
    CHECK(primality_witness(joint, 2, 1).has_value()); // X1 * X2 witnesses
    CHECK(joint.is_spectrally_reduced());
    CHECK_FALSE(joint.is_prime());
}

TEST_CASE("ideal-level tilting and spectral radicals") {
    MonomialIdeal X = MonomialIdeal::principal(2, 1, 0, PExponent::integer(2, 1));
    MonomialIdeal m = MonomialIdeal::augmentation(2, 1, 0);
    MonomialIdeal zero = MonomialIdeal::zero_ideal(2, 1);

    CHECK(ideal_tilt(X) == zero);
    CHECK(ideal_tilt(m) == m);
    CHECK(ideal_tilt(zero) == zero);

    CHECK(ideal_sharp(m) == m);
    CHECK(ideal_sharp(zero) == zero);
    CHECK_THROWS(ideal_sharp(X));

    CHECK(spectral_radical(X) == m);
    CHECK(spectral_radical(MonomialIdeal::principal(2, 1, 0, PExponent::integer(2, 2))) == m);
    CHECK(spectral_radical(MonomialIdeal::principal(2, 1, 0, PExponent(2, 1, 1))) == m);
    CHECK(spectral_radical(m) == m);

    // round trips on the spectrally reduced members and radical images
    for (const auto& I : {zero, m, spectral_radical(X)}) {
        CHECK(ideal_sharp(ideal_tilt(I)) == I);
        CHECK(ideal_tilt(ideal_sharp(I)) == I);
    }
    // inclusion preservation on the comparable pair (0) in m
    CHECK(ideal_tilt(m).includes(ideal_tilt(zero)));
    CHECK(ideal_sharp(m).includes(ideal_sharp(zero)));
}

TEST_CASE("approximation constructor matches norms termwise") {
    const std::uint32_t p = 2, n = 3;
    const WittPolyCache& c = witt_cache(p, n);

    // f = p + p^2 X approximates to t + t^2 X below eps = p^{-3}
    UntiltFraction coeff_p(sharp(c, CharPSeries::t(p, N16), N16));
    UntiltFraction coeff_p2 = frac_mul(c, coeff_p, coeff_p);
    GaussElement f(CoefSide::untilt, p, 1, n, N16);
    f.add_term({PExponent::zero(p)}, FieldElem(coeff_p));
    f.add_term({PExponent::integer(p, 1)}, FieldElem(coeff_p2));
    GaussElement g = approx_construct(f, NormValue::p_power(p, 3));
    REQUIRE(g.terms().size() == 2);
    CHECK(g.coeff_at({PExponent::zero(p)}).as_charp().equal_at_common_precision(CharPSeries::t(p, N16)));
    CHECK(g.coeff_at({PExponent::integer(p, 1)})
              .as_charp()
              .equal_at_common_precision(CharPSeries::monomial(p, PExponent::integer(p, 2), 1, N16)));

    // all coefficients below eps: everything is dropped
    GaussElement small(CoefSide::untilt, p, 1, n, N16);
    small.add_term({PExponent::zero(p)}, FieldElem(coeff_p2));
    CHECK(approx_construct(small, NormValue::p_power(p, 1)).empty());

    // an element already in the image of sharp reproduces its data exactly
    GaussElement already(CoefSide::untilt, p, 1, n, N16);
    already.add_term({PExponent::integer(p, 1)}, FieldElem(coeff_p));
    GaussElement g2 = approx_construct(already, NormValue::p_power(p, 3));
    GaussElement back = gauss_sharp(g2, n);
    SeminormDescriptor phi1 = SeminormDescriptor::gauss_norm(CoefSide::untilt, p, 1);
    CHECK(gauss_eval(phi1, back).value == gauss_eval(phi1, already).value);
}

TEST_CASE("approximation verifier on the model fixtures") {
    const std::uint32_t p = 2, n = 3;
    const WittPolyCache& c = witt_cache(p, n);
    CharPSeries t = CharPSeries::t(p, N16);
    UntiltFraction sharp_t(sharp(c, t, N16));

    // f = sharp(t), g = t: the difference is 0
    auto rows = approx_verify(c, sharp_t, t, NormValue::p_power(p, 2));
    REQUIRE(!rows.empty());
    CHECK(rows.front().pass);

    // f = sharp(t) + p, g = t, eps = 1
    UntiltFraction f2 = frac_add(c, sharp_t, UntiltFraction(untilt_mul_p_power(UntiltElement::one(p, n, N16), 1)));
    CHECK(approx_verify(c, f2, t, NormValue::one(p)).front().pass);

    // Laurent tilt data goes through the fraction form of sharp
    CharPSeries laurent = CharPSeries::monomial(p, PExponent::integer(p, -1), 1, N16);
    UntiltFraction sl = sharp_fraction(c, laurent, N16);
    CHECK(sl.denom_pow() == 1);
    CHECK(sl.norm().value == NormValue::pow(PExponent::integer(p, -1)));
}
