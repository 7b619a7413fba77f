#include <doctest.h>

#include "perfectoid/sampling.hpp"
#include "perfectoid/untilt.hpp"

using namespace perfectoid;

namespace {
const PExponent N2 = PExponent::integer(2, 16);
} // namespace

TEST_CASE("canonicalization of Teichmuller lifts") {
    const WittPolyCache& c = witt_cache(2, 3);

    // [t] reduces to p = digits (0, 1, 0)
    UntiltElement pt = canonicalize(c, WittVector::teichmuller(CharPSeries::t(2, N2), 3));
    CHECK(pt.digit(0).empty());
    CHECK(pt.digit(1).constant_term() == 1);
    CHECK(pt.digit(2).empty());

    // support below t^1: no rewrite applies
    CharPSeries a = CharPSeries::monomial(2, PExponent(2, 1, 1), 1, N2);
    UntiltElement ua = canonicalize(c, WittVector::teichmuller(a, 3));
    CHECK(ua.digit(0).equal_at_common_precision(a));
    CHECK(ua.digit(1).empty());

    UntiltElement uz = canonicalize(c, WittVector::zero(2, 3, N2));
    CHECK(uz.is_zero_at_precision());

    // idempotence: the canonical digits lift back to the same digits
    Sampler s(31);
    for (int i = 0; i < 40; ++i) {
        UntiltElement x = s.untilt(2, 3, N2, 2, 2);
        UntiltElement y = untilt_add(c, x, UntiltElement::zero(2, 3, N2));
        CHECK(x.equal_at_precision(y));
    }
}

TEST_CASE("arithmetic in the untilt model") {
    const WittPolyCache& c = witt_cache(2, 3);
    UntiltElement p_el = sharp(c, CharPSeries::t(2, N2), N2);

    // p + p = 2p has digits (0, 0, 1) and lambda-norm p^{-2}
    UntiltElement two_p = untilt_add(c, p_el, p_el);
    CHECK(two_p.digit(0).empty());
    CHECK(two_p.digit(1).empty());
    CHECK(two_p.digit(2).constant_term() == 1);
    CHECK(untilt_norm(two_p).value == NormValue::p_power(2, 2));

    Sampler s(32);
    UntiltElement x = s.untilt_nonzero(2, 3, N2, 2, 1);
    CHECK(untilt_add(c, x, UntiltElement::zero(2, 3, N2)).equal_at_precision(x));

    // sharp(t^{1/p})^p = sharp(t) = p
    UntiltElement r = sharp(c, CharPSeries::monomial(2, PExponent(2, 1, 1), 1, N2), N2);
    CHECK(untilt_pow(c, r, 2).equal_at_precision(p_el));
}

TEST_CASE("the lambda-norm reads off the first nonzero digit") {
    std::vector<CharPSeries> d1 = {CharPSeries::zero(2, N2), CharPSeries::one(2, N2),
                                   CharPSeries::zero(2, N2)};
    CHECK(untilt_norm(UntiltElement(2, 3, N2, d1)).value == NormValue::p_power(2, 1));

    std::vector<CharPSeries> d2 = {CharPSeries::monomial(2, PExponent(2, 1, 1), 1, N2),
                                   CharPSeries::one(2, N2), CharPSeries::zero(2, N2)};
    CHECK(untilt_norm(UntiltElement(2, 3, N2, d2)).value == NormValue::pow(PExponent(2, 1, 1)));

    NormEstimate below = untilt_norm(UntiltElement::zero(2, 3, N2));
    CHECK(below.below);
}

TEST_CASE("sharp is multiplicative and norm preserving") {
    const WittPolyCache& c = witt_cache(2, 3);
    CHECK(sharp(c, CharPSeries::one(2, N2), N2).equal_at_precision(UntiltElement::one(2, 3, N2)));
    Sampler s(33);
    for (int i = 0; i < 40; ++i) {
        CharPSeries f = s.charp_nonzero(2, N2, 3, 2, 2);
        CharPSeries g = s.charp_nonzero(2, N2, 3, 2, 2);
        UntiltElement sf = sharp(c, f, N2), sg = sharp(c, g, N2);
        CHECK(untilt_mul(c, sf, sg).equal_at_precision(sharp(c, f.mul(g), N2)));
        NormEstimate lhs = untilt_norm(sf);
        if (!lhs.below) CHECK(lhs.value == f.norm().value);
    }
}

TEST_CASE("digit0 is reduction mod p") {
    const WittPolyCache& c = witt_cache(2, 3);
    CharPSeries f = CharPSeries::monomial(2, PExponent(2, 1, 2), 1, N2) + CharPSeries::one(2, N2);
    CHECK(digit0(sharp(c, f, N2)).equal_at_common_precision(f));
    CHECK(digit0(sharp(c, CharPSeries::t(2, N2), N2)).empty()); // p reduces to 0

    // x + p y has the same digit 0 as x when no carry occurs
    Sampler s(34);
    for (int i = 0; i < 25; ++i) {
        UntiltElement x = s.untilt(2, 3, N2, 2, 1);
        UntiltElement y = s.untilt(2, 3, N2, 2, 1);
        UntiltElement sum = untilt_add(c, x, untilt_mul_p_power(y, 1));
        CHECK(digit0(sum).equal_at_common_precision(digit0(x)));
    }
}

TEST_CASE("ring laws hold within tracked precision") {
    const WittPolyCache& c = witt_cache(2, 3);
    Sampler s(35);
    for (int i = 0; i < 25; ++i) {
        UntiltElement a = s.untilt(2, 3, N2, 2, 1);
        UntiltElement b = s.untilt(2, 3, N2, 2, 1);
        UntiltElement d = s.untilt(2, 3, N2, 2, 1);
        CHECK(untilt_add(c, a, b).equal_at_precision(untilt_add(c, b, a)));
        CHECK(untilt_mul(c, a, b).equal_at_precision(untilt_mul(c, b, a)));
        CHECK(untilt_add(c, untilt_add(c, a, b), d).equal_at_precision(untilt_add(c, a, untilt_add(c, b, d))));
        CHECK(untilt_mul(c, a, untilt_add(c, b, d))
                  .equal_at_precision(untilt_add(c, untilt_mul(c, a, b), untilt_mul(c, a, d))));
        CHECK(untilt_add(c, a, untilt_neg(c, a)).is_zero_at_precision());
    }
}

TEST_CASE("fractions invert and track the p-adic depth") {
    const WittPolyCache& c = witt_cache(2, 3);
    Sampler s(36);
    for (int i = 0; i < 20; ++i) {
        UntiltElement x = s.untilt_nonzero(2, 3, N2, 2, 1);
        UntiltFraction fr(x, static_cast<std::uint32_t>(s.next(2)));
        UntiltFraction prod = frac_mul(c, fr, frac_inverse(c, fr));
        CHECK(prod.equal_at_precision(UntiltFraction::one(2, 3, N2)));
    }
    // |x / p^k| = p^k |x|
    UntiltFraction fr(UntiltElement::one(2, 3, N2), 1);
    CHECK(fr.norm().value == NormValue::pow(PExponent::integer(2, -1)));
    CHECK_THROWS_AS(frac_inverse(c, UntiltFraction::zero(2, 3, N2)), BelowPrecision);
}
