#include <doctest.h>

#include "perfectoid/sampling.hpp"
#include "perfectoid/values.hpp"

using namespace perfectoid;

namespace {
// independent rational oracle for exponent arithmetic
struct Rat {
    long long n, d;
    Rat normalized() const {
        long long g = std::gcd(n < 0 ? -n : n, d);
        return Rat{n / g, d / g};
    }
    friend Rat operator+(Rat a, Rat b) { return Rat{a.n * b.d + b.n * a.d, a.d * b.d}.normalized(); }
    friend bool operator==(Rat a, Rat b) { return a.n * b.d == b.n * a.d; }
    friend bool operator<(Rat a, Rat b) { return a.n * b.d < b.n * a.d; }
};
Rat to_rat(const PExponent& e) {
    long long d = 1;
    for (std::uint32_t i = 0; i < e.kpow(); ++i) d *= e.prime();
    return Rat{e.num(), d};
}
} // namespace

TEST_CASE("exponent addition matches the rational oracle") {
    CHECK(PExponent(2, 1, 1) + PExponent(2, 1, 1) == PExponent::integer(2, 1)); // 1/2 + 1/2
    PExponent a(2, 7, 2);
    CHECK(PExponent::zero(2) + a == a);
    // 3/4 + 1/2 = 5/4
    CHECK(PExponent(2, 3, 2) + PExponent(2, 1, 1) == PExponent(2, 5, 2));

    Sampler s(1);
    for (int i = 0; i < 200; ++i) {
        PExponent x = s.exponent(2, 20, 3);
        PExponent y = s.exponent(2, 20, 3);
        CHECK(to_rat(x + y) == to_rat(x) + to_rat(y));
    }
}

TEST_CASE("exponents form an ordered abelian group") {
    Sampler s(2);
    for (int i = 0; i < 200; ++i) {
        PExponent a = s.exponent(3, 30, 3);
        PExponent b = s.exponent(3, 30, 3);
        PExponent c = s.exponent(3, 30, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + (-a) == PExponent::zero(3));
        // order compatibility
        if (a < b) CHECK(a + c < b + c);
        // total order agrees with rational order
        CHECK((a < b) == (to_rat(a) < to_rat(b)));
    }
}

TEST_CASE("normalization keeps p out of the numerator") {
    PExponent e(2, 4, 2); // 4/4 = 1
    CHECK(e.num() == 1);
    CHECK(e.kpow() == 0);
}

TEST_CASE("norm value multiplication and max") {
    NormValue one = NormValue::one(2);
    NormValue p1 = NormValue::p_power(2, 1);
    NormValue half = NormValue::pow(PExponent(2, 1, 1));
    CHECK(p1 * half == NormValue::pow(PExponent::integer(2, 1) + PExponent(2, 1, 1)));
    CHECK((NormValue::zero(2) * p1).is_zero());
    CHECK(NormValue::pow(PExponent::integer(2, -1)) * p1 == one);

    CHECK(NormValue::max(p1, NormValue::p_power(2, 2)) == p1); // p^{-1} > p^{-2}
    NormValue x = NormValue::pow(PExponent(2, 3, 1));
    CHECK(NormValue::max(NormValue::zero(2), x) == x);
    // mixing ambient primes is rejected
    CHECK_THROWS_AS(NormValue::max(NormValue::pow(PExponent(2, 1, 1)), NormValue::pow(PExponent(3, 1, 1))),
                    AmbientMismatch);
}

TEST_CASE("norm value monoid laws") {
    Sampler s(3);
    auto rand_nv = [&](Sampler& sm) {
        if (sm.next(8) == 0) return NormValue::zero(2);
        PExponent e = sm.exponent(2, 12, 2);
        if (sm.next(2)) e = -e;
        return NormValue::pow(e);
    };
    NormValue one = NormValue::one(2);
    for (int i = 0; i < 200; ++i) {
        NormValue a = rand_nv(s), b = rand_nv(s), c = rand_nv(s);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * one == a);
        CHECK(NormValue::max(a, a) == a);
        CHECK(NormValue::max(NormValue::zero(2), a) == a);
    }
}

TEST_CASE("n-th roots stay exact and flag the value group") {
    NormValueQ r = norm_nth_root(NormValue::p_power(2, 2), 2);
    CHECK(r.in_value_group());
    CHECK(r.to_norm_value() == NormValue::p_power(2, 1));

    CHECK(norm_nth_root(NormValue::zero(2), 5).is_zero());

    NormValueQ third = norm_nth_root(NormValue::p_power(2, 1), 3);
    CHECK_FALSE(third.in_value_group());
    CHECK(third.exponent() == RationalExponent(1, 3));
    // comparisons stay exact rational
    CHECK(third < NormValueQ::from(NormValue::one(2)));
    CHECK(NormValueQ::from(NormValue::p_power(2, 1)) < third);
}

TEST_CASE("numerator overflow is signalled, not wrapped") {
    PExponent big(2, INT64_MAX - 1, 0);
    CHECK_THROWS_AS(big + big, ArithmeticOverflow);
    CHECK_THROWS_AS(big * big, ArithmeticOverflow);
}

TEST_CASE("norm rendering is exact") {
    CHECK(NormValue::pow(PExponent(2, 3, 1)).to_string() == "2^(-3/2)");
    CHECK(NormValue::zero(2).to_string() == "0");
    CHECK(NormValue::one(3).to_string() == "1");
    NormEstimate below{NormValue::p_power(2, 8), true};
    CHECK(below.to_string() == "<= 2^(-8) (below precision)");
}
