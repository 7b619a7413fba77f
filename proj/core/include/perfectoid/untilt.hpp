#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perfectoid/witt.hpp"

namespace perfectoid {

/// Element of the char-0 perfectoid field model R° = W_n(O_F/t^N)/(z),
/// z = [t] - p, in canonical Teichmüller-digit form: the element is
/// sum_i [a_i] p^i with every digit supported on exponents in [0, 1).
/// The digit list of an element is unique in that form at the tracked
/// precision.
///
/// `padic_prec` is the exact p-adic precision exponent in [0, n]: the element
/// is known modulo terms of valuation >= padic_prec, so digit i is known
/// modulo t^{padic_prec - i} (further capped by its own t-precision).
/// Carries in fraction arithmetic erode it; ring operations propagate it by
/// the usual rules (min for sums, min(prec_x + v(y), prec_y + v(x)) for
/// products). Digits are stored already truncated to their reliable window.
class UntiltElement {
public:
    UntiltElement(std::uint32_t p, std::uint32_t n, PExponent t_prec,
                  std::vector<CharPSeries> digits, PExponent padic_prec);
    /// Full precision (padic_prec = n).
    UntiltElement(std::uint32_t p, std::uint32_t n, PExponent t_prec, std::vector<CharPSeries> digits);

    static UntiltElement zero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec);
    static UntiltElement one(std::uint32_t p, std::uint32_t n, const PExponent& t_prec);
    static UntiltElement from_uint(std::uint32_t value, std::uint32_t p, std::uint32_t n, const PExponent& t_prec);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    const PExponent& t_prec() const { return t_prec_; }
    const PExponent& padic_prec() const { return prec_; }
    const std::vector<CharPSeries>& digits() const { return digits_; }
    const CharPSeries& digit(std::size_t i) const { return digits_.at(i); }

    /// Index of the first digit that is nonzero at precision, or n when all
    /// visible digits vanish.
    std::uint32_t first_nonzero_digit() const;
    /// Exact valuation i + v(a_i) of the leading digit; the precision bound
    /// when the element vanishes at precision.
    PExponent valuation_or_prec() const;
    bool is_zero_at_precision() const;

    /// Digitwise equality within the common p-adic and t-adic precision.
    bool equal_at_precision(const UntiltElement& o) const;

    std::string to_string() const;

private:
    std::uint32_t p_, n_;
    PExponent t_prec_;
    std::vector<CharPSeries> digits_;
    PExponent prec_;
};

/// Reduce a Witt vector modulo z = [t] - p to canonical digit form: parts of
/// each digit at or above t^1 are rewritten through [t] -> p into the next
/// p-adic digit. Idempotent on canonical forms.
UntiltElement canonicalize(const WittPolyCache& cache, const WittVector& w,
                           std::size_t term_cap = kDefaultTermCap);

UntiltElement untilt_add(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap = kDefaultTermCap);
UntiltElement untilt_mul(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap = kDefaultTermCap);
UntiltElement untilt_neg(const WittPolyCache& cache, const UntiltElement& x,
                         std::size_t term_cap = kDefaultTermCap);
UntiltElement untilt_sub(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap = kDefaultTermCap);
UntiltElement untilt_pow(const WittPolyCache& cache, const UntiltElement& x, std::uint64_t k,
                         std::size_t term_cap = kDefaultTermCap);
/// x * p^k (digits shift up; the top k digits fall off the carrier).
UntiltElement untilt_mul_p_power(const UntiltElement& x, std::uint32_t k);

/// λ-norm sup_i p^{-i} |a_i|. Since canonical digits live below t^1 the
/// digit windows [i, i+1) are disjoint and the supremum sits at the first
/// nonzero digit. Below-precision marker when all visible digits vanish.
NormEstimate untilt_norm(const UntiltElement& x);

/// The sharp map O_F -> R°: Teichmüller lift followed by reduction mod z.
/// Multiplicative; sharp(t) = p is the model's defining identity.
UntiltElement sharp(const WittPolyCache& cache, const CharPSeries& f, const PExponent& t_prec,
                    std::size_t term_cap = kDefaultTermCap);

/// Digit 0, i.e. the image of x under R° -> R°/p ≅ O_F/t.
CharPSeries digit0(const UntiltElement& x);

/// Element of the fraction field: num / p^denom_pow with integral numerator;
/// normalization keeps denom_pow minimal.
class UntiltFraction {
public:
    explicit UntiltFraction(UntiltElement num, std::uint32_t denom_pow = 0);

    static UntiltFraction zero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec);
    static UntiltFraction one(std::uint32_t p, std::uint32_t n, const PExponent& t_prec);

    const UntiltElement& numerator() const { return num_; }
    std::uint32_t denom_pow() const { return den_; }
    std::uint32_t p() const { return num_.p(); }

    bool is_zero_at_precision() const { return num_.is_zero_at_precision(); }
    bool is_integral() const { return den_ == 0; }

    NormEstimate norm() const;
    bool equal_at_precision(const UntiltFraction& o) const;
    std::string to_string() const;

private:
    UntiltElement num_;
    std::uint32_t den_;
};

UntiltFraction frac_add(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap = kDefaultTermCap);
UntiltFraction frac_mul(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap = kDefaultTermCap);
UntiltFraction frac_neg(const WittPolyCache& cache, const UntiltFraction& x,
                        std::size_t term_cap = kDefaultTermCap);
UntiltFraction frac_sub(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap = kDefaultTermCap);
UntiltFraction frac_pow(const WittPolyCache& cache, const UntiltFraction& x, std::uint64_t k,
                        std::size_t term_cap = kDefaultTermCap);
/// Multiplicative inverse: factor out the dominant digit monomial (unique in
/// canonical form), then invert the remaining 1 + small by geometric series
/// to the element's p-adic depth.
UntiltFraction frac_inverse(const WittPolyCache& cache, const UntiltFraction& x,
                            std::size_t term_cap = kDefaultTermCap);

} // namespace perfectoid
