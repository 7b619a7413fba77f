#include "perfectoid/sampling.hpp"

namespace perfectoid {

std::uint64_t Sampler::next(std::uint64_t bound) {
    if (bound == 0) return 0;
    return rng_() % bound;
}

PExponent Sampler::exponent(std::uint32_t p, std::uint32_t max_num, std::uint32_t max_kpow) {
    std::uint32_t k = static_cast<std::uint32_t>(next(max_kpow + 1));
    std::int64_t j = static_cast<std::int64_t>(next(max_num + 1));
    return PExponent(p, j, k);
}

CharPSeries Sampler::charp(std::uint32_t p, const PExponent& prec, std::size_t max_terms,
                           std::uint32_t exp_range, std::uint32_t max_kpow) {
    CharPSeries f(p, prec);
    std::size_t terms = next(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        std::uint32_t k = static_cast<std::uint32_t>(next(max_kpow + 1));
        // exponent j / p^k below exp_range
        std::uint64_t limit = 1;
        for (std::uint32_t q = 0; q < k; ++q) limit *= p;
        std::uint64_t j = next(static_cast<std::uint64_t>(exp_range) * limit);
        std::uint32_t coeff = 1 + static_cast<std::uint32_t>(next(p - 1));
        f = f + CharPSeries::monomial(p, PExponent(p, static_cast<std::int64_t>(j), k), coeff, prec);
    }
    return f;
}

CharPSeries Sampler::charp_nonzero(std::uint32_t p, const PExponent& prec, std::size_t max_terms,
                                   std::uint32_t exp_range, std::uint32_t max_kpow) {
    for (int tries = 0; tries < 64; ++tries) {
        CharPSeries f = charp(p, prec, max_terms, exp_range, max_kpow);
        if (!f.empty()) return f;
    }
    return CharPSeries::one(p, prec);
}

UntiltElement Sampler::untilt(std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                              std::size_t max_terms_per_digit, std::uint32_t max_kpow) {
    std::vector<CharPSeries> digits;
    for (std::uint32_t i = 0; i < n; ++i)
        digits.push_back(charp(p, t_prec, max_terms_per_digit, 1, max_kpow));
    return UntiltElement(p, n, t_prec, std::move(digits));
}

UntiltElement Sampler::untilt_nonzero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                                      std::size_t max_terms_per_digit, std::uint32_t max_kpow) {
    for (int tries = 0; tries < 64; ++tries) {
        UntiltElement x = untilt(p, n, t_prec, max_terms_per_digit, max_kpow);
        if (!x.is_zero_at_precision()) return x;
    }
    return UntiltElement::one(p, n, t_prec);
}

GaussElement Sampler::gauss(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n,
                            const PExponent& t_prec, std::size_t max_terms, std::uint32_t exp_range,
                            std::uint32_t max_kpow) {
    GaussElement f(side, p, d, n, t_prec);
    std::size_t terms = next(max_terms + 1);
    for (std::size_t i = 0; i < terms; ++i) {
        MultiExp e;
        for (std::uint32_t v = 0; v < d; ++v) {
            std::uint32_t k = static_cast<std::uint32_t>(next(max_kpow + 1));
            std::uint64_t limit = 1;
            for (std::uint32_t q = 0; q < k; ++q) limit *= p;
            std::uint64_t j = next(static_cast<std::uint64_t>(exp_range) * limit);
            e.push_back(PExponent(p, static_cast<std::int64_t>(j), k));
        }
        FieldElem c = side == CoefSide::charp
                          ? FieldElem(charp_nonzero(p, t_prec, 2, 2, max_kpow))
                          : FieldElem(UntiltFraction(untilt_nonzero(p, n, t_prec, 1, max_kpow),
                                                     static_cast<std::uint32_t>(next(2))));
        f.add_term(e, c);
    }
    return f;
}

} // namespace perfectoid
