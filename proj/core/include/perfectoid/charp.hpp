#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "perfectoid/values.hpp"

namespace perfectoid {

inline constexpr std::size_t kDefaultTermCap = 4096;

/// Truncated element of F_p((t^{1/p^infty})): a finite term list
/// exponent -> coefficient in {1,..,p-1}, known modulo t^{prec}. Terms at or
/// above the precision cutoff are dropped on construction, so the invariant
/// "every term exponent < prec" always holds. Immutable value type.
class CharPSeries {
public:
    using TermMap = std::map<PExponent, std::uint32_t>;

    CharPSeries() = default;
    CharPSeries(std::uint32_t p, PExponent prec);

    static CharPSeries zero(std::uint32_t p, PExponent prec) { return CharPSeries(p, prec); }
    static CharPSeries one(std::uint32_t p, PExponent prec);
    static CharPSeries monomial(std::uint32_t p, PExponent exp, std::uint32_t coeff, PExponent prec);
    /// t^1 with the given precision.
    static CharPSeries t(std::uint32_t p, PExponent prec);
    static CharPSeries constant(std::uint32_t p, std::uint32_t value, PExponent prec);

    std::uint32_t p() const { return p_; }
    const PExponent& prec() const { return prec_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Min term exponent; nullopt when the element vanishes at precision.
    std::optional<PExponent> valuation() const;
    /// Element of O_F: valuation >= 0 (an empty element counts as integral
    /// only when its precision cutoff is >= 0).
    bool integral() const;

    std::uint32_t coeff_at(const PExponent& e) const;
    /// Coefficient of t^0.
    std::uint32_t constant_term() const;

    CharPSeries operator+(const CharPSeries& o) const;
    CharPSeries operator-(const CharPSeries& o) const;
    CharPSeries operator-() const;
    CharPSeries mul(const CharPSeries& o, std::size_t term_cap = kDefaultTermCap) const;
    CharPSeries operator*(const CharPSeries& o) const { return mul(o); }
    CharPSeries pow(std::uint64_t k, std::size_t term_cap = kDefaultTermCap) const;
    CharPSeries scaled(std::uint32_t c) const;

    /// f^p: exponents scaled by p, coefficients fixed, precision scaled by p.
    CharPSeries frobenius() const;
    /// Exact p-th root: exponents divided by p, precision divided by p.
    CharPSeries pth_root() const;

    /// Multiply by t^delta (exact support shift; precision shifts along).
    CharPSeries shifted(const PExponent& delta) const;

    /// Truncate to a (smaller) precision.
    CharPSeries truncated(const PExponent& new_prec) const;

    /// |f| = p^{-v(f)}, with the below-precision marker when f vanishes at
    /// the current cutoff (the value field then holds the bound p^{-prec}).
    NormEstimate norm() const;

    /// Multiplicative inverse to the precision the input warrants
    /// (relative precision is preserved). Throws BelowPrecision on elements
    /// indistinguishable from zero.
    CharPSeries inverse(std::size_t term_cap = kDefaultTermCap) const;

    /// Structural equality (same precision, same terms).
    bool operator==(const CharPSeries& o) const;
    bool operator!=(const CharPSeries& o) const { return !(*this == o); }
    /// Equality after truncating both sides to the common precision.
    bool equal_at_common_precision(const CharPSeries& o) const;

    /// Leading (lowest-exponent) monomial; throws BelowPrecision when empty.
    CharPSeries leading_monomial() const;

    std::string to_string() const;

private:
    void insert_term(const PExponent& e, std::uint32_t c);
    std::uint32_t p_ = 2;
    PExponent prec_ = PExponent::integer(2, 1);
    TermMap terms_;
};

} // namespace perfectoid
