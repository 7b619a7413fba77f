#include <doctest.h>

#include "perfectoid/sampling.hpp"

using namespace perfectoid;

namespace {
const PExponent N16 = PExponent::integer(2, 16);

GaussElement monomial_x(std::uint32_t p, const PExponent& e, const PExponent& prec) {
    return GaussElement::monomial(FieldElem(CharPSeries::one(p, prec)), {e});
}
} // namespace

TEST_CASE("gauss evaluation under radius and point descriptors") {
    // phi_1(X^{1/p} + w) = 1 for |w| = p^{-1}
    GaussElement f(CoefSide::charp, 2, 1, 1, N16);
    f.add_term({PExponent(2, 1, 1)}, FieldElem(CharPSeries::one(2, N16)));
    f.add_term({PExponent::zero(2)}, FieldElem(CharPSeries::t(2, N16)));
    SeminormDescriptor phi1 = SeminormDescriptor::gauss_norm(CoefSide::charp, 2, 1);
    CHECK(gauss_eval(phi1, f).value.is_one());

    // phi_r on a monomial: r^{1 + 1/p}
    NormValue r = NormValue::p_power(2, 1);
    SeminormDescriptor phir = SeminormDescriptor::gauss_radius(CoefSide::charp, {r});
    GaussElement mono = monomial_x(2, PExponent::integer(2, 1) + PExponent(2, 1, 1), N16);
    CHECK(gauss_eval(phir, mono).value == r.pow_exponent(PExponent(2, 3, 1)));

    // phi_1(0) = 0 exactly
    CHECK(gauss_eval(phi1, GaussElement::zero(CoefSide::charp, 2, 1, 1, N16)).value.is_zero());

    // descriptor / element side mismatch
    SeminormDescriptor wrong = SeminormDescriptor::gauss_norm(CoefSide::untilt, 2, 1);
    CHECK_THROWS_AS(gauss_eval(wrong, f), AmbientMismatch);
}

TEST_CASE("radius descriptors reject unbounded data") {
    CHECK_THROWS_AS(SeminormDescriptor::gauss_radius(CoefSide::charp,
                                                     {NormValue::pow(PExponent::integer(2, -1))}),
                    BoundednessViolation);
    CHECK_THROWS_AS(SeminormDescriptor::eval_point(
                        CoefSide::charp,
                        {CharPSeries::monomial(2, PExponent::integer(2, -1), 1, N16)},
                        NormValue::one(2)),
                    BoundednessViolation);
}

TEST_CASE("the Gauss norm is multiplicative") {
    Sampler s(41);
    SeminormDescriptor phi1 = SeminormDescriptor::gauss_norm(CoefSide::charp, 2, 1);
    NormValue half = NormValue::p_power(2, 1);
    SeminormDescriptor phih = SeminormDescriptor::gauss_radius(CoefSide::charp, {half});
    int done = 0;
    while (done < 60) {
        GaussElement a = s.gauss(CoefSide::charp, 2, 1, 1, N16, 3, 2, 1);
        GaussElement b = s.gauss(CoefSide::charp, 2, 1, 1, N16, 3, 2, 1);
        if (a.empty() || b.empty()) continue;
        GaussElement ab = a.mul(b);
        for (const auto& phi : {phi1, phih}) {
            NormEstimate na = gauss_eval(phi, a), nb = gauss_eval(phi, b), nab = gauss_eval(phi, ab);
            if (na.below || nb.below || nab.below) continue;
            CHECK(nab.value == na.value * nb.value);
        }
        ++done;
    }
}

TEST_CASE("evaluation points substitute through p-power roots") {
    // f = X at the point t: value t, norm p^{-1}
    GaussElement x = monomial_x(2, PExponent::integer(2, 1), N16);
    SeminormDescriptor ev = SeminormDescriptor::eval_point(CoefSide::charp, {CharPSeries::t(2, N16)},
                                                           NormValue::one(2));
    CHECK(gauss_eval(ev, x).value == NormValue::p_power(2, 1));
    // X^{1/2} at t evaluates to t^{1/2}
    GaussElement root = monomial_x(2, PExponent(2, 1, 1), N16);
    CHECK(gauss_eval(ev, root).value == NormValue::pow(PExponent(2, 1, 1)));
    // the same descriptor data transfers to the untilt side
    SeminormDescriptor ev_sharp = ev.with_side(CoefSide::untilt);
    GaussElement xu = GaussElement::monomial(
        FieldElem(UntiltFraction::one(2, 3, N16)), {PExponent::integer(2, 1)});
    CHECK(gauss_eval(ev_sharp, xu).value == NormValue::p_power(2, 1));
}

TEST_CASE("spectral engine certificates") {
    // multiplicative norm: the bound is the norm at n = 1
    Sampler s(42);
    int done = 0;
    while (done < 40) {
        GaussElement f = s.gauss(CoefSide::charp, 2, 1, 1, N16, 3, 2, 1);
        if (f.empty()) continue;
        SpectralCertificate cert = spectral_seminorm_gauss(f, 4);
        NormEstimate gn = gauss_eval(SeminormDescriptor::gauss_norm(CoefSide::charp, 2, 1), f);
        if (gn.below) continue;
        CHECK(cert.bound == NormValueQ::from(gn.value));
        CHECK(cert.roots.front() == cert.bound);
        // |f|_spc <= ||f||, and the reported bound is monotone
        for (std::size_t i = 1; i < cert.running_min.size(); ++i)
            CHECK_FALSE(cert.running_min[i] > cert.running_min[i - 1]);
        ++done;
    }

    // dual numbers: eps^2 = 0 at n = 2
    DualNumber eps{FieldElem(CharPSeries::zero(2, N16)), FieldElem(CharPSeries::one(2, N16))};
    SpectralCertificate cd = spectral_seminorm_dual(eps, 8);
    REQUIRE(cd.zero_at.has_value());
    CHECK(*cd.zero_at == 2);
    CHECK(cd.bound.is_zero());
    CHECK(cd.roots.front() == NormValueQ::from(NormValue::pow(PExponent::integer(2, -1))));

    // 1 + X under phi_1: constant sequence of ones (brute-force powers)
    GaussElement one_plus_x = monomial_x(2, PExponent::zero(2), N16).add(
        monomial_x(2, PExponent::integer(2, 1), N16));
    SpectralCertificate c1 = spectral_seminorm_gauss(one_plus_x, 6);
    for (const auto& root : c1.roots) CHECK(root == NormValueQ::from(NormValue::one(2)));
}

TEST_CASE("power-boundedness is the unit ball of the Gauss norm") {
    CHECK(is_power_bounded(monomial_x(2, PExponent(2, 1, 1), N16)));
    // a Laurent coefficient of norm p is not power-bounded
    GaussElement bad = GaussElement::constant(
        FieldElem(CharPSeries::monomial(2, PExponent::integer(2, -1), 1, N16)), 1);
    CHECK_FALSE(is_power_bounded(bad));
    // 1 + w X stays in the unit ball
    GaussElement f = monomial_x(2, PExponent::zero(2), N16);
    f.add_term({PExponent::integer(2, 1)}, FieldElem(CharPSeries::t(2, N16)));
    CHECK(is_power_bounded(f));
}

TEST_CASE("cauchy gaps decrease geometrically") {
    auto rows = cauchy_gap_demo(CoefSide::charp, 2, 3, N16, NormValue::p_power(2, 1), 8);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].gap == NormValue::p_power(2, 1));
    CHECK(rows[3].gap == NormValue::p_power(2, 4));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].gap < rows[i - 1].gap);
}
