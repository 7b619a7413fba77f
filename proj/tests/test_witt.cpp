#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "perfectoid/sampling.hpp"
#include "perfectoid/witt.hpp"

using namespace perfectoid;

namespace {
PExponent n8(std::uint32_t p) { return PExponent::integer(p, 8); }
} // namespace

TEST_CASE("universal polynomials solve the ghost equations") {
    WittPolyCache c = build_witt_polys(2, 3);
    auto names = WittPolyCache::xy_names(3);

    IntPoly s0(6);
    s0.add_term({1, 0, 0, 0, 0, 0}, 1);
    s0.add_term({0, 0, 0, 1, 0, 0}, 1);
    CHECK(c.sum[0] == s0);

    IntPoly s1(6);
    s1.add_term({0, 1, 0, 0, 0, 0}, 1);
    s1.add_term({0, 0, 0, 0, 1, 0}, 1);
    s1.add_term({1, 0, 0, 1, 0, 0}, -1);
    CHECK(c.sum[1] == s1);

    IntPoly p1(6);
    p1.add_term({2, 0, 0, 0, 1, 0}, 1);
    p1.add_term({0, 1, 0, 2, 0, 0}, 1);
    p1.add_term({0, 1, 0, 0, 1, 0}, 2);
    CHECK(c.prod[1] == p1);

    CHECK_NOTHROW(verify_witt_polys(c));
    CHECK_NOTHROW(verify_witt_polys(build_witt_polys(3, 3)));
    CHECK_NOTHROW(verify_witt_polys(build_witt_polys(5, 2)));
}

TEST_CASE("frobenius polynomials reduce to the p-th power map mod p") {
    for (std::uint32_t p : {2u, 3u}) {
        WittPolyCache c = build_witt_polys(p, 3);
        for (std::uint32_t k = 0; k < 3; ++k) {
            IntPoly xkp(4);
            IntPoly::Expo e(4, 0);
            e[k] = p;
            xkp.add_term(e, 1);
            CHECK_NOTHROW((c.frob[k] - xkp).divided_exact(p));
        }
    }
}

TEST_CASE("ghost oracle validates the ring operations symbolically") {
    // torsion-free carrier: generic components as polynomial variables
    const std::uint32_t p = 2, n = 2;
    WittPolyCache c = build_witt_polys(p, n);
    std::vector<IntPoly> X = {IntPoly::variable(4, 0), IntPoly::variable(4, 1)};
    std::vector<IntPoly> Y = {IntPoly::variable(4, 2), IntPoly::variable(4, 3)};
    auto wx = ghost_components(p, X);
    auto wy = ghost_components(p, Y);
    auto ws = ghost_components(p, c.sum);
    auto wp = ghost_components(p, c.prod);
    for (std::uint32_t k = 0; k < n; ++k) {
        CHECK(ws[k] == wx[k] + wy[k]);
        CHECK(wp[k] == wx[k].mul(wy[k], kDefaultWittTermCap));
    }
    // w of a Teichmuller-style vector (a, 0) is (a, a^p)
    std::vector<mpz_class> teich = {mpz_class(5), mpz_class(0)};
    auto w = ghost_components(p, teich);
    CHECK(w[0] == 5);
    CHECK(w[1] == 25);
}

TEST_CASE("cache persists to a directory and is verified on load") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "witt-cache-test";
    fs::remove_all(dir);
    const WittPolyCache& built = witt_cache(5, 2, kDefaultWittTermCap, dir.string());
    CHECK(fs::exists(dir / "witt_p5_n2.json"));
    CHECK(built.sum.size() == 2);
    // a fresh load from disk goes through verify_witt_polys
    std::ifstream in(dir / "witt_p5_n2.json");
    std::stringstream buf;
    buf << in.rdbuf();
    WittPolyCache loaded = witt_cache_from_json(buf.str());
    CHECK_NOTHROW(verify_witt_polys(loaded));
    CHECK(loaded.sum[1] == built.sum[1]);
    fs::remove_all(dir);
}

TEST_CASE("cache roundtrips through canonical JSON and detects tampering") {
    WittPolyCache c = build_witt_polys(2, 2);
    std::string text = witt_cache_to_json(c);
    WittPolyCache back = witt_cache_from_json(text);
    CHECK(back.sum[1] == c.sum[1]);
    CHECK_NOTHROW(verify_witt_polys(back));

    std::string corrupted = text;
    auto pos = corrupted.find("\"-1\"");
    REQUIRE(pos != std::string::npos);
    corrupted.replace(pos, 4, "\"-2\"");
    WittPolyCache bad = witt_cache_from_json(corrupted);
    CHECK_THROWS_AS(verify_witt_polys(bad), CacheIntegrityError);
}

TEST_CASE("witt arithmetic over the truncated series ring") {
    const std::uint32_t p = 2, n = 2;
    const WittPolyCache& c = witt_cache(p, n);
    CharPSeries t = CharPSeries::t(p, n8(p));

    WittVector zero = WittVector::zero(p, n, n8(p));
    WittVector teich_t = WittVector::teichmuller(t, n);
    CHECK(witt_add(c, teich_t, zero) == teich_t);

    // 1 + 1 = V(1) = (0, 1) at p = 2
    WittVector one = WittVector::one(p, n, n8(p));
    WittVector two = witt_add(c, one, one);
    CHECK(two.component(0).empty());
    CHECK(two.component(1).constant_term() == 1);
    CHECK(two == WittVector::p_times_one(p, n, n8(p)));

    // non-integral components are rejected
    CHECK_THROWS(WittVector::teichmuller(
        CharPSeries::monomial(p, PExponent::integer(p, -1), 1, n8(p)), n));
    // heterogeneous precisions propagate pessimistically instead of failing
    WittVector coarse = WittVector::teichmuller(t.truncated(PExponent::integer(p, 4)), n);
    WittVector mixed = witt_add(c, teich_t, coarse);
    CHECK(mixed.component(0).prec() == PExponent::integer(p, 4));
    auto [a, b] = align_precision(teich_t, coarse);
    CHECK(witt_add(c, a, b) == mixed);
}

TEST_CASE("teichmuller lift is multiplicative") {
    Sampler s(21);
    const WittPolyCache& c2 = witt_cache(2, 3);
    const WittPolyCache& c3 = witt_cache(3, 3);
    for (int i = 0; i < 60; ++i) {
        std::uint32_t p = i % 2 ? 2 : 3;
        const WittPolyCache& c = p == 2 ? c2 : c3;
        CharPSeries a = s.charp(p, n8(p), 3, 2, 1);
        CharPSeries b = s.charp(p, n8(p), 3, 2, 1);
        WittVector lhs = witt_mul(c, WittVector::teichmuller(a, 3), WittVector::teichmuller(b, 3));
        auto [l, r] = align_precision(lhs, WittVector::teichmuller(a.mul(b), 3));
        CHECK(l == r);
    }
}

TEST_CASE("structure maps: V shifts, F is the p-power map, FV = p") {
    const std::uint32_t p = 2, n = 3;
    const WittPolyCache& c = witt_cache(p, n);
    WittVector one = WittVector::one(p, n, n8(p));
    WittVector v1 = verschiebung(one);
    CHECK(v1.component(0).empty());
    CHECK(v1.component(1).constant_term() == 1);
    CHECK(v1.component(2).empty());

    CharPSeries a = CharPSeries::t(p, n8(p)) + CharPSeries::one(p, n8(p));
    CHECK(witt_frobenius(WittVector::teichmuller(a, n)) == WittVector::teichmuller(a.frobenius(), n));

    Sampler s(22);
    for (int i = 0; i < 30; ++i) {
        std::vector<CharPSeries> comps;
        for (std::uint32_t j = 0; j < n; ++j) comps.push_back(s.charp(p, n8(p), 2, 2, 1));
        WittVector x(p, comps);
        WittVector fv = witt_frobenius(verschiebung(x));
        WittVector px = witt_mul(c, x, WittVector::p_times_one(p, n, n8(p)));
        auto [l, r] = align_precision(fv, px);
        CHECK(l == r);
    }
}

TEST_CASE("witt ring axioms hold on random vectors") {
    Sampler s(23);
    const std::uint32_t p = 3, n = 2;
    const WittPolyCache& c = witt_cache(p, n);
    PExponent prec = PExponent::integer(p, 4);
    for (int i = 0; i < 30; ++i) {
        std::vector<CharPSeries> ca, cb, cc;
        for (std::uint32_t j = 0; j < n; ++j) {
            ca.push_back(s.charp(p, prec, 2, 2, 1));
            cb.push_back(s.charp(p, prec, 2, 2, 1));
            cc.push_back(s.charp(p, prec, 2, 2, 1));
        }
        WittVector a(p, ca), b(p, cb), d(p, cc);
        CHECK(witt_add(c, a, b) == witt_add(c, b, a));
        CHECK(witt_add(c, witt_add(c, a, b), d) == witt_add(c, a, witt_add(c, b, d)));
        CHECK(witt_mul(c, a, WittVector::one(p, n, prec)) == a);
        {
            // the two routes carry different (compatible) precision metadata
            auto [l, r] = align_precision(witt_mul(c, a, witt_add(c, b, d)),
                                          witt_add(c, witt_mul(c, a, b), witt_mul(c, a, d)));
            CHECK(l == r);
        }
        CHECK(witt_add(c, a, witt_neg(c, a)).is_zero());
    }
}

TEST_CASE("the primitive element z = [t] - p") {
    const std::uint32_t p = 2, n = 3;
    const WittPolyCache& c = witt_cache(p, n);
    WittVector z = primitive_z(c, n8(p));
    CHECK(z.component(0).equal_at_common_precision(CharPSeries::t(p, n8(p))));

    // z + p = [t]
    WittVector zp = witt_add(c, z, WittVector::p_times_one(p, n, n8(p)));
    auto [l, r] = align_precision(zp, WittVector::teichmuller(CharPSeries::t(p, n8(p)), n));
    CHECK(l == r);

    // (z - [t]) / p = -1: the digit-0 of -1 is p - 1, a unit
    WittVector diff = witt_sub(c, z, WittVector::teichmuller(CharPSeries::t(p, n8(p)), n));
    CHECK(diff.component(0).empty()); // divisible by p
    CharPSeries digit = diff.component(1).pth_root();
    CHECK(digit.constant_term() == p - 1);
}

TEST_CASE("cap violations surface as errors") {
    CHECK_THROWS_AS(build_witt_polys(5, 4, 2000), CapExceeded);
}
