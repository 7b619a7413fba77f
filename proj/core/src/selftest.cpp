#include "perfectoid/selftest.hpp"

#include <sstream>

#include "perfectoid/sampling.hpp"
#include "perfectoid/spectra.hpp"

namespace perfectoid {

namespace {

struct Ctx {
    const GlobalConfig& cfg;
    const WittPolyCache& cache(std::uint32_t p, std::uint32_t n) const {
        return witt_cache(p, n, cfg.witt_poly_cap, cfg.witt_cache_dir);
    }
};

CriterionResult criterion_witt_layer(const Ctx& ctx) {
    CriterionResult r{1, "Witt layer: ghost identities, S_1 shape, Teichmuller multiplicativity", true, ""};
    std::ostringstream detail;
    try {
        for (std::uint32_t p : {2u, 3u})
            for (std::uint32_t n = 1; n <= 3; ++n)
                verify_witt_polys(build_witt_polys(p, n, ctx.cfg.witt_poly_cap), ctx.cfg.witt_poly_cap);
        // S_1 at p = 2 is X1 + Y1 - X0 Y0 exactly
        WittPolyCache c22 = build_witt_polys(2, 2, ctx.cfg.witt_poly_cap);
        IntPoly expected(4);
        expected.add_term({0, 1, 0, 0}, 1);
        expected.add_term({0, 0, 0, 1}, 1);
        expected.add_term({1, 0, 1, 0}, -1);
        if (c22.sum[1] != expected) {
            r.passed = false;
            detail << "S_1(p=2) has unexpected shape; ";
        }
        Sampler sampler(101);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            std::uint32_t p = (i % 2 == 0) ? 2u : 3u;
            const WittPolyCache& cache = ctx.cache(p, 3);
            PExponent prec = PExponent::integer(p, 8);
            CharPSeries a = sampler.charp(p, prec, 3, 2, 1);
            CharPSeries b = sampler.charp(p, prec, 3, 2, 1);
            WittVector lhs = witt_mul(cache, WittVector::teichmuller(a, 3), WittVector::teichmuller(b, 3),
                                      ctx.cfg.term_cap);
            WittVector rhs = WittVector::teichmuller(a.mul(b, ctx.cfg.term_cap), 3);
            auto [l, rr] = align_precision(lhs, rhs);
            if (!(l == rr)) {
                r.passed = false;
                detail << "[a][b] != [ab] at sample " << i << "; ";
                break;
            }
            ++checked;
        }
        detail << "ghost identities ok (p in {2,3}, n <= 3); Teichmuller pairs checked: " << checked;
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_untilt_model(const Ctx& ctx) {
    CriterionResult r{2, "Untilt model: sharp(t) = p, norm identity, lambda formula, multiplicativity", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2, n = ctx.cfg.witt_len;
        const WittPolyCache& cache = ctx.cache(p, n);
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        UntiltElement sp_t = sharp(cache, CharPSeries::t(p, N), N, ctx.cfg.term_cap);
        bool pt_ok = n < 2 || (sp_t.digit(0).empty() && !sp_t.digit(1).empty() &&
                               sp_t.digit(1).constant_term() == 1);
        for (std::uint32_t i = 2; i < n; ++i) pt_ok = pt_ok && sp_t.digit(i).empty();
        if (!pt_ok) {
            r.passed = false;
            detail << "sharp(t) != p; ";
        }
        Sampler sampler(202);
        int norm_checked = 0;
        while (norm_checked < 100) {
            CharPSeries f = sampler.charp_nonzero(p, N, 3, 2, 2);
            NormEstimate lhs = untilt_norm(sharp(cache, f, N, ctx.cfg.term_cap));
            NormEstimate rhs = f.norm();
            if (lhs.below || rhs.below) continue;
            if (lhs.value != rhs.value) {
                r.passed = false;
                detail << "norm(sharp(f)) != |f| for f = " << f.to_string() << "; ";
                break;
            }
            ++norm_checked;
        }
        // lambda formula: the norm is sup_i p^{-i} |a_i| read off the digits
        int lambda_checked = 0;
        while (lambda_checked < 100) {
            UntiltElement x = sampler.untilt_nonzero(p, n, N, 2, 2);
            NormEstimate nm = untilt_norm(x);
            if (nm.below) continue;
            NormValue sup = NormValue::zero(p);
            for (std::uint32_t i = 0; i < n; ++i) {
                NormEstimate di = x.digit(i).norm();
                if (di.below) continue;
                sup = NormValue::max(sup, di.value * NormValue::p_power(p, i));
            }
            if (nm.value != sup) {
                r.passed = false;
                detail << "lambda formula mismatch; ";
                break;
            }
            ++lambda_checked;
        }
        int mult_checked = 0;
        while (mult_checked < 100) {
            UntiltElement x = sampler.untilt_nonzero(p, n, N, 2, 1);
            UntiltElement y = sampler.untilt_nonzero(p, n, N, 2, 1);
            if (x.digit(0).empty() || y.digit(0).empty()) continue; // keep products above precision
            NormEstimate nx = untilt_norm(x), ny = untilt_norm(y);
            NormEstimate nxy = untilt_norm(untilt_mul(cache, x, y, ctx.cfg.term_cap));
            if (nx.below || ny.below || nxy.below) continue;
            if (nxy.value != nx.value * ny.value) {
                r.passed = false;
                detail << "|xy| != |x||y|; ";
                break;
            }
            ++mult_checked;
        }
        detail << "norm identity on " << norm_checked << " samples; lambda formula on " << lambda_checked
               << "; multiplicativity on " << mult_checked << " pairs";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_tilt_addition(const Ctx& ctx) {
    CriterionResult r{3, "Tilting addition: limit formula stabilizes to sharp of the char-p sum", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t wl = ctx.cfg.witt_len;
        {
            const std::uint32_t p = 2;
            const WittPolyCache& cache = ctx.cache(p, wl);
            PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
            CharPSeries t = CharPSeries::t(p, N);
            TiltAddReport rep = tilt_add_limit(cache, t, t, 0, wl, N, ctx.cfg.term_cap);
            bool ok = rep.stabilized_at && *rep.stabilized_at <= wl && rep.matches_expected &&
                      rep.partial.back().is_zero_at_precision();
            if (!ok) {
                r.passed = false;
                detail << "fixture f=g=t (p=2) did not stabilize to 0; ";
            } else {
                detail << "fixture f=g=t stabilizes at m=" << *rep.stabilized_at << "; ";
            }
        }
        Sampler sampler(303);
        int checked = 0;
        for (int i = 0; i < 50; ++i) {
            std::uint32_t p = (i % 2 == 0) ? 2u : 3u;
            const WittPolyCache& cache = ctx.cache(p, wl);
            PExponent N = PExponent::integer(p, 27);
            CharPSeries f = sampler.charp_nonzero(p, N, 2, 2, 1);
            CharPSeries g = sampler.charp_nonzero(p, N, 2, 2, 1);
            TiltAddReport rep = tilt_add_limit(cache, f, g, 0, wl, N, ctx.cfg.term_cap);
            if (!rep.stabilized_at || !rep.matches_expected) {
                r.passed = false;
                detail << "random pair " << i << " (p=" << p << ") failed; ";
                break;
            }
            ++checked;
        }
        detail << "random pairs checked: " << checked;
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_ideal_bijection(const Ctx& ctx) {
    CriterionResult r{4, "Ideal bijection: (X) tilts to (0), augmentation ideals round-trip, inclusions preserved", true, ""};
    std::ostringstream detail;
    (void)ctx;
    try {
        const std::uint32_t p = 2;
        MonomialIdeal X1 = MonomialIdeal::principal(p, 1, 0, PExponent::integer(p, 1));
        if (!(ideal_tilt(X1) == MonomialIdeal::zero_ideal(p, 1))) {
            r.passed = false;
            detail << "(X) did not tilt to (0); ";
        }
        MonomialIdeal m1 = MonomialIdeal::augmentation(p, 1, 0);
        if (!(ideal_tilt(m1) == m1)) {
            r.passed = false;
            detail << "m_X did not tilt to itself; ";
        }
        // supported lattice: (0) and per-variable augmentations, d <= 2
        for (std::uint32_t d = 1; d <= 2; ++d) {
            std::vector<MonomialIdeal> lattice;
            lattice.push_back(MonomialIdeal::zero_ideal(p, d));
            for (std::uint32_t v = 0; v < d; ++v) lattice.push_back(MonomialIdeal::augmentation(p, d, v));
            for (const auto& I : lattice) {
                if (!(ideal_sharp(ideal_tilt(I)) == I) || !(ideal_tilt(ideal_sharp(I)) == I)) {
                    r.passed = false;
                    detail << "round trip failed for " << I.to_string() << "; ";
                }
            }
            for (const auto& I : lattice)
                for (const auto& J : lattice) {
                    if (!J.includes(I)) continue;
                    if (!ideal_tilt(J).includes(ideal_tilt(I)) ||
                        !ideal_sharp(J).includes(ideal_sharp(I))) {
                        r.passed = false;
                        detail << "inclusion not preserved for " << I.to_string() << " in " << J.to_string()
                               << "; ";
                    }
                }
        }
        if (r.passed) detail << "lattices d = 1, 2 round-trip and preserve inclusions";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_spectral_radical(const Ctx& ctx) {
    CriterionResult r{5, "Spectral radical: principal powers collapse to the augmentation ideal", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2;
        MonomialIdeal aug = MonomialIdeal::augmentation(p, 1, 0);
        for (const PExponent& a :
             {PExponent::integer(p, 1), PExponent::integer(p, 2), PExponent(p, 1, 1)}) {
            MonomialIdeal I = MonomialIdeal::principal(p, 1, 0, a);
            if (!(spectral_radical(I) == aug)) {
                r.passed = false;
                detail << "radical of (X^" << a.to_string() << ") != m_X; ";
            }
        }
        // membership vs the EvalPoint(0) kernel characterization
        Sampler sampler(505);
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        SeminormDescriptor ev0 = SeminormDescriptor::eval_point(
            CoefSide::charp, {CharPSeries::zero(p, N)}, NormValue::one(p));
        int checked = 0;
        while (checked < 100) {
            GaussElement f = sampler.gauss(CoefSide::charp, p, 1, 1, N, 3, 2, 1);
            NormEstimate ev = gauss_eval(ev0, f);
            if (ev.below) continue;
            bool in_kernel = ev.value.is_zero();
            if (aug.contains(f) != in_kernel) {
                r.passed = false;
                detail << "membership mismatch for " << f.to_string() << "; ";
                break;
            }
            ++checked;
        }
        detail << "radicals collapse for a in {1, 2, 1/p}; kernel cross-check on " << checked << " samples";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_spectral_engine(const Ctx& ctx) {
    CriterionResult r{6, "Spectral engine: dual numbers reach 0 at n=2, Gauss norms at n=1, monotone certificates", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2;
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        DualNumber eps{FieldElem(CharPSeries::zero(p, N)), FieldElem(CharPSeries::one(p, N))};
        SpectralCertificate cert = spectral_seminorm_dual(eps, std::max(2u, ctx.cfg.max_spectral_n));
        if (!cert.zero_at || *cert.zero_at != 2 || !cert.bound.is_zero()) {
            r.passed = false;
            detail << "|eps|_spc bound did not reach 0 at n = 2; ";
        }
        Sampler sampler(606);
        int checked = 0;
        while (checked < 100) {
            GaussElement f = sampler.gauss(CoefSide::charp, p, 1, 1, N, 3, 2, 1);
            if (f.empty()) continue;
            SpectralCertificate c = spectral_seminorm_gauss(f, 4, ctx.cfg.term_cap);
            NormEstimate gn = gauss_eval(SeminormDescriptor::gauss_norm(CoefSide::charp, p, 1), f);
            if (gn.below) continue;
            if (!(c.roots.front() == NormValueQ::from(gn.value)) || !(c.bound == c.roots.front())) {
                r.passed = false;
                detail << "bound != Gauss norm at n = 1; ";
                break;
            }
            for (std::size_t i = 1; i < c.running_min.size(); ++i)
                if (c.running_min[i] > c.running_min[i - 1]) {
                    r.passed = false;
                    detail << "certificate not monotone; ";
                    break;
                }
            // Fekete-style spot check a_{2n} <= a_n
            if (c.roots.size() >= 2 && c.roots[1] > c.roots[0]) {
                r.passed = false;
                detail << "a_2 > a_1; ";
                break;
            }
            if (c.roots.size() >= 4 && c.roots[3] > c.roots[1]) {
                r.passed = false;
                detail << "a_4 > a_2; ";
                break;
            }
            ++checked;
        }
        detail << "dual-number bound hits 0 at n=2; Gauss-normed samples checked: " << checked;
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_approximation(const Ctx& ctx) {
    CriterionResult r{7, "Approximation: per-radius disjunction for constructed tilt approximants", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2, n = ctx.cfg.witt_len;
        const WittPolyCache& cache = ctx.cache(p, n);
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        Sampler sampler(707);
        std::vector<NormValue> eps_list = {NormValue::one(p), NormValue::p_power(p, 1),
                                           NormValue::p_power(p, 3)};
        std::vector<NormValue> radii = {NormValue::one(p), NormValue::p_power(p, 1),
                                        NormValue::p_power(p, 2)};
        int checked = 0;
        while (checked < 50) {
            GaussElement f = sampler.gauss(CoefSide::untilt, p, 1, n, N, 3, 2, 1);
            if (f.empty()) continue;
            bool sample_ok = true;
            for (const auto& eps : eps_list) {
                GaussElement g = approx_construct(f, eps, ctx.cfg.term_cap);
                GaussElement gs = gauss_sharp(g, n, ctx.cfg.term_cap);
                for (const auto& rad : radii) {
                    SeminormDescriptor phi = SeminormDescriptor::gauss_radius(CoefSide::untilt, {rad});
                    NormEstimate lf = gauss_eval(phi, f);
                    NormEstimate lg = gauss_eval(phi, gs);
                    if (lf.below || lg.below) {
                        sample_ok = false;
                        break;
                    }
                    bool equal = lf.value == lg.value;
                    bool both_small = lf.value < eps && lg.value < eps;
                    if (!equal && !both_small) {
                        r.passed = false;
                        detail << "disjunction fails at eps=" << eps.to_string()
                               << " r=" << rad.to_string() << "; ";
                        sample_ok = false;
                        break;
                    }
                }
                if (!r.passed) break;
            }
            if (!r.passed) break;
            if (sample_ok) ++checked;
        }
        // fixture verifications of the digitwise inequality
        CharPSeries t = CharPSeries::t(p, N);
        UntiltFraction f1(sharp(cache, t, N, ctx.cfg.term_cap));
        UntiltFraction f2 = frac_add(cache, f1, UntiltFraction(untilt_mul_p_power(UntiltElement::one(p, n, N), 1)),
                                     ctx.cfg.term_cap);
        UntiltFraction f3 = f1;
        bool v1 = approx_verify(cache, f1, t, NormValue::p_power(p, 1), 1, ctx.cfg.term_cap).front().pass;
        bool v2 = approx_verify(cache, f2, t, NormValue::one(p), 1, ctx.cfg.term_cap).front().pass;
        bool v3 = approx_verify(cache, f3, t, NormValue::p_power(p, 2), 1, ctx.cfg.term_cap).front().pass;
        if (!v1 || !v2 || !v3) {
            r.passed = false;
            detail << "fixture verification failed (" << v1 << v2 << v3 << "); ";
        }
        detail << "random elements checked: " << checked << "; fixtures pass";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_zariskian(const Ctx& ctx) {
    CriterionResult r{8, "Zariskian layer: complete-field convergence, polynomial divergence witness, Zar norm", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2, wl = ctx.cfg.witt_len;
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        NormValue target = NormValue::p_power(p, wl);
        std::vector<CharPSeries> samples = {
            CharPSeries::t(p, N), CharPSeries::monomial(p, PExponent::integer(p, 2), 1, N),
            CharPSeries::t(p, N) + CharPSeries::monomial(p, PExponent::integer(p, 3), 1, N)};
        for (const auto& s : samples) {
            InvertReport rep = invert_one_plus(ZElem(FieldElem(s)), wl, target, ctx.cfg.term_cap);
            bool ok = rep.status == InvertStatus::converged && rep.terms_used <= wl && rep.residual &&
                      rep.residual->value <= target;
            if (!ok) {
                r.passed = false;
                detail << "field sample " << s.to_string() << " did not converge within " << wl
                       << " terms; ";
            }
        }
        NormValue c = NormValue::p_power(p, 1);
        CNormedPoly T = CNormedPoly::variable(CoefSide::charp, p, 1, N, c);
        InvertReport tp = invert_one_plus(ZElem(T), 2 * wl, target, ctx.cfg.term_cap);
        if (tp.status != InvertStatus::diverged_support) {
            r.passed = false;
            detail << "T in c-normed K[T] did not produce a divergence witness; ";
        }
        ZarFraction fr{ZElem(T), ZElem(T)};
        NormEstimate zn = zar_norm(fr);
        if (zn.below || zn.value != c) {
            r.passed = false;
            detail << "||T/(1+T)||_Zar != c; ";
        }
        if (r.passed)
            detail << "field samples converge within " << wl << " terms; T diverges in K[T]; Zar norm = c";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_spectra(const Ctx& ctx) {
    CriterionResult r{9, "Spectra toys: boundary, Escassut agreement, TopSpec membership, Zariskisation, compactness, sobriety", true, ""};
    std::ostringstream detail;
    try {
        const std::uint32_t p = 2;
        PExponent N = PExponent(p, ctx.cfg.t_prec_num, ctx.cfg.t_prec_kpow);
        // K^2 boundary
        ToyRing k2 = ToyRing::product_of_fields(CoefSide::charp, p, 1, N, 2);
        auto family = berkovich_points(k2, 0, {});
        auto one = FieldElem(CharPSeries::one(p, N));
        auto zero = FieldElem(CharPSeries::zero(p, N));
        auto tt = FieldElem(CharPSeries::t(p, N));
        std::vector<ToyElem> tests = {ToyElem(ProductElem{{one, zero}}), ToyElem(ProductElem{{zero, one}}),
                                      ToyElem(ProductElem{{one, one}})};
        ShilovResult sh = shilov_bruteforce(k2, family, tests);
        if (!sh.unique || sh.minimal_sets.front().size() != 2) {
            r.passed = false;
            detail << "K^2 minimal boundary is not uniquely both coordinates; ";
        }
        // TDZ agreement on a 20-element set
        std::vector<ToyElem> tdz_set;
        std::vector<FieldElem> vals = {zero, one, tt, FieldElem(CharPSeries::one(p, N) + CharPSeries::t(p, N))};
        for (const auto& a : vals)
            for (const auto& b : vals) tdz_set.push_back(ToyElem(ProductElem{{a, b}}));
        tdz_set.push_back(ToyElem(ProductElem{{one, zero}}));
        tdz_set.push_back(ToyElem(ProductElem{{zero, zero}}));
        tdz_set.push_back(ToyElem(ProductElem{{tt, one}}));
        tdz_set.push_back(ToyElem(ProductElem{{one, tt}}));
        int agree = 0;
        for (const auto& f : tdz_set) {
            TdzReport rep = is_topological_zero_divisor(k2, f, family, tests);
            if (!rep.agree) {
                r.passed = false;
                detail << "TDZ verdicts disagree on " << f.to_string() << "; ";
                break;
            }
            ++agree;
        }
        // TopSpec membership for the polynomial presentation over the untilt side
        ToyRing poly = ToyRing::poly_gauss_c(CoefSide::untilt, p, ctx.cfg.witt_len, N, NormValue::p_power(p, 1));
        std::vector<CandidatePrime> cands = {CandidatePrime::linear(CharPSeries::zero(p, N)),
                                             CandidatePrime::linear(CharPSeries::t(p, N)),
                                             CandidatePrime::linear(CharPSeries::one(p, N))};
        auto rows = topspec_enumerate(poly, cands);
        bool memb_ok = rows.size() == 3 && rows[0].verdict == TopSpecVerdict::in &&
                       rows[1].verdict == TopSpecVerdict::in && rows[2].verdict == TopSpecVerdict::out;
        if (!memb_ok) {
            r.passed = false;
            detail << "TopSpec membership {in,in,out} failed; ";
        }
        // Zariskisation contraction round-trips
        auto zrows = topspec_zar_compare(poly, cands);
        for (const auto& row : zrows)
            if (!row.contraction_ok || !row.extension_prime) {
                r.passed = false;
                detail << "Zariskisation comparison failed for " << row.candidate << "; ";
            }
        // quasi-compactness witnesses
        std::vector<CandidatePrime> k2pts = {CandidatePrime::coordinate_kernel(0),
                                             CandidatePrime::coordinate_kernel(1)};
        std::vector<ToyElem> k2cover = {ToyElem(ProductElem{{one, zero}}), ToyElem(ProductElem{{zero, one}})};
        QuasiCompactResult qc1 = quasicompact_check(k2, k2cover, k2pts);
        FieldElem sharp_t = realize_coordinate(CharPSeries::t(p, N), CoefSide::untilt, ctx.cfg.witt_len, N);
        CNormedPoly Tpoly = CNormedPoly::variable(CoefSide::untilt, p, ctx.cfg.witt_len, N, NormValue::p_power(p, 1));
        CNormedPoly Tminus_p = Tpoly.sub(CNormedPoly::from_coeffs({sharp_t}, NormValue::p_power(p, 1)));
        std::vector<CandidatePrime> poly_pts = {CandidatePrime::zero_ideal(),
                                                CandidatePrime::linear(CharPSeries::zero(p, N)),
                                                CandidatePrime::linear(CharPSeries::t(p, N))};
        QuasiCompactResult qc2 =
            quasicompact_check(poly, {ToyElem(Tpoly), ToyElem(Tminus_p)}, poly_pts);
        if (!qc1.covers || !qc1.witness_verified || !qc2.covers || !qc2.witness_verified) {
            r.passed = false;
            detail << "quasi-compactness witness construction failed; ";
        }
        // sobriety on the enumerated posets
        SobrietyResult so1 = sobriety_check(k2, k2pts);
        SobrietyResult so2 = sobriety_check(poly, poly_pts);
        if (!so1.pass || !so2.pass) {
            r.passed = false;
            detail << "sobriety check failed; ";
        }
        if (r.passed)
            detail << "boundary unique; TDZ agreement on " << agree
                   << " elements; membership {in,in,out}; contractions, compactness and sobriety pass";
    } catch (const std::exception& e) {
        r.passed = false;
        detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

std::string render_lines(const std::vector<CriterionResult>& criteria) {
    std::ostringstream os;
    for (const auto& c : criteria)
        os << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " -- " << c.detail << "\n";
    return os.str();
}

std::vector<CriterionResult> run_core_criteria(const GlobalConfig& cfg) {
    Ctx ctx{cfg};
    std::vector<CriterionResult> out;
    out.push_back(criterion_witt_layer(ctx));
    out.push_back(criterion_untilt_model(ctx));
    out.push_back(criterion_tilt_addition(ctx));
    out.push_back(criterion_ideal_bijection(ctx));
    out.push_back(criterion_spectral_radical(ctx));
    out.push_back(criterion_spectral_engine(ctx));
    out.push_back(criterion_approximation(ctx));
    out.push_back(criterion_zariskian(ctx));
    out.push_back(criterion_spectra(ctx));
    return out;
}

} // namespace

SelftestOutcome run_selftest(const GlobalConfig& cfg) {
    cfg.validate();
    SelftestOutcome out;
    out.criteria = run_core_criteria(cfg);
    std::string first = render_lines(out.criteria);
    std::string second = render_lines(run_core_criteria(cfg));
    CriterionResult determinism{10, "Determinism: two full runs produce byte-identical reports",
                                first == second,
                                first == second ? "reports are byte-identical"
                                                : "reports differ between runs"};
    out.criteria.push_back(determinism);
    out.all_passed = true;
    for (const auto& c : out.criteria) out.all_passed = out.all_passed && c.passed;
    out.report_text = render_lines(out.criteria);
    return out;
}

} // namespace perfectoid
