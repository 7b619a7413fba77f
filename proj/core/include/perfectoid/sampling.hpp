#pragma once

#include <random>

#include "perfectoid/gauss.hpp"

namespace perfectoid {

/// Deterministic sample generator for property tests and the self test.
/// All draws go through next(), so sequences are reproducible per seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next(std::uint64_t bound); // uniform-ish in [0, bound)

    /// Exponent j / p^k with j in [0, max_num], k in [0, max_kpow].
    PExponent exponent(std::uint32_t p, std::uint32_t max_num, std::uint32_t max_kpow);

    /// Integral series with at most max_terms terms, exponents below exp_range.
    CharPSeries charp(std::uint32_t p, const PExponent& prec, std::size_t max_terms,
                      std::uint32_t exp_range, std::uint32_t max_kpow);
    CharPSeries charp_nonzero(std::uint32_t p, const PExponent& prec, std::size_t max_terms,
                              std::uint32_t exp_range, std::uint32_t max_kpow);

    /// Canonical untilt element from random digits (support below t^1).
    UntiltElement untilt(std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                         std::size_t max_terms_per_digit, std::uint32_t max_kpow);
    UntiltElement untilt_nonzero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                                 std::size_t max_terms_per_digit, std::uint32_t max_kpow);

    /// Gauss element with the stated coefficient side.
    GaussElement gauss(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n,
                       const PExponent& t_prec, std::size_t max_terms, std::uint32_t exp_range,
                       std::uint32_t max_kpow);

private:
    std::mt19937_64 rng_;
};

} // namespace perfectoid
