#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "perfectoid/errors.hpp"

namespace perfectoid {

bool is_supported_prime(std::uint32_t p);

/// Exponent in Z[1/p]: value = num / p^kpow, normalized so that either
/// kpow == 0 or p does not divide num. Total order is the rational order.
/// All arithmetic is exact; the 64-bit numerator carrier throws
/// ArithmeticOverflow instead of wrapping.
class PExponent {
public:
    PExponent() = default;
    PExponent(std::uint32_t p, std::int64_t num, std::uint32_t kpow = 0);

    static PExponent integer(std::uint32_t p, std::int64_t n) { return PExponent(p, n, 0); }
    static PExponent zero(std::uint32_t p) { return PExponent(p, 0, 0); }

    std::uint32_t prime() const { return p_; }
    std::int64_t num() const { return num_; }
    std::uint32_t kpow() const { return kpow_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return kpow_ == 0; }

    PExponent operator+(const PExponent& o) const;
    PExponent operator-(const PExponent& o) const;
    PExponent operator-() const;

    /// Product in Z[1/p] (used for radius^exponent arithmetic).
    PExponent operator*(const PExponent& o) const;

    /// Multiply by p^shift; shift may be negative (exact, stays in Z[1/p]).
    PExponent scaled_by_p(std::int32_t shift) const;

    /// e / m when the quotient stays in Z[1/p]; nullopt otherwise.
    std::optional<PExponent> divided_exact(std::int64_t m) const;

    int compare(const PExponent& o) const; // -1, 0, +1 in rational order
    bool operator==(const PExponent& o) const { return compare(o) == 0; }
    bool operator!=(const PExponent& o) const { return compare(o) != 0; }
    bool operator<(const PExponent& o) const { return compare(o) < 0; }
    bool operator<=(const PExponent& o) const { return compare(o) <= 0; }
    bool operator>(const PExponent& o) const { return compare(o) > 0; }
    bool operator>=(const PExponent& o) const { return compare(o) >= 0; }

    /// "3/2", "-1", "5/9" (denominator rendered as the integer p^kpow).
    std::string to_string() const;

private:
    void normalize();
    std::uint32_t p_ = 2;
    std::int64_t num_ = 0;
    std::uint32_t kpow_ = 0;
};

/// Reduced fraction num/den with arbitrary positive denominator; the carrier
/// for n-th roots of exponents that leave Z[1/p]. Comparisons stay exact.
class RationalExponent {
public:
    RationalExponent() = default;
    RationalExponent(std::int64_t num, std::int64_t den);
    static RationalExponent from(const PExponent& e);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// True when den is a power of p, i.e. the value lies in Z[1/p].
    bool in_value_group(std::uint32_t p) const;
    /// Conversion back to a PExponent; requires in_value_group(p).
    PExponent to_pexponent(std::uint32_t p) const;

    RationalExponent divided(std::int64_t m) const;

    int compare(const RationalExponent& o) const;
    bool operator==(const RationalExponent& o) const { return compare(o) == 0; }
    bool operator<(const RationalExponent& o) const { return compare(o) < 0; }
    bool operator<=(const RationalExponent& o) const { return compare(o) <= 0; }
    bool operator>(const RationalExponent& o) const { return compare(o) > 0; }
    bool operator>=(const RationalExponent& o) const { return compare(o) >= 0; }

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Multiplicative norm value in {0} ∪ p^{Z[1/p]}, stored in the log domain:
/// Pow(e) means p^{-e}. Zero is absorbing and smallest.
class NormValue {
public:
    NormValue() = default;

    static NormValue zero(std::uint32_t p);
    static NormValue one(std::uint32_t p) { return pow(PExponent::zero(p)); }
    /// p^{-e}
    static NormValue pow(const PExponent& e);
    /// p^{-k}
    static NormValue p_power(std::uint32_t p, std::int64_t k) { return pow(PExponent::integer(p, k)); }

    std::uint32_t prime() const { return exp_.prime(); }
    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && exp_.is_zero(); }
    bool leq_one() const { return zero_ || !exp_.is_negative(); }

    /// Exponent accessor; throws on Zero.
    const PExponent& exponent() const;

    NormValue operator*(const NormValue& o) const;
    static NormValue max(const NormValue& a, const NormValue& b);
    static NormValue min(const NormValue& a, const NormValue& b);

    /// Value^k for integer k (k may be negative only for nonzero values).
    NormValue pow_int(std::int64_t k) const;
    /// Value^e for e in Z[1/p] (nonzero base or e > 0).
    NormValue pow_exponent(const PExponent& e) const;

    int compare(const NormValue& o) const;
    bool operator==(const NormValue& o) const { return compare(o) == 0; }
    bool operator!=(const NormValue& o) const { return compare(o) != 0; }
    bool operator<(const NormValue& o) const { return compare(o) < 0; }
    bool operator<=(const NormValue& o) const { return compare(o) <= 0; }
    bool operator>(const NormValue& o) const { return compare(o) > 0; }
    bool operator>=(const NormValue& o) const { return compare(o) >= 0; }

    /// "2^(-3/2)", "1", "0".
    std::string to_string() const;

private:
    bool zero_ = true;
    PExponent exp_{};
};

/// Norm value with exponent allowed anywhere in Q: the carrier for
/// ‖f^n‖^{1/n}. Flags whether the value landed back in the p-power group.
class NormValueQ {
public:
    NormValueQ() = default;
    static NormValueQ zero(std::uint32_t p);
    static NormValueQ from(const NormValue& v);
    static NormValueQ pow(std::uint32_t p, const RationalExponent& e);

    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool in_value_group() const { return zero_ || exp_.in_value_group(p_); }
    const RationalExponent& exponent() const;

    /// Conversion when the value lies in {0} ∪ p^{Z[1/p]}.
    NormValue to_norm_value() const;

    int compare(const NormValueQ& o) const;
    bool operator==(const NormValueQ& o) const { return compare(o) == 0; }
    bool operator<(const NormValueQ& o) const { return compare(o) < 0; }
    bool operator<=(const NormValueQ& o) const { return compare(o) <= 0; }
    bool operator>(const NormValueQ& o) const { return compare(o) > 0; }
    bool operator>=(const NormValueQ& o) const { return compare(o) >= 0; }

    std::string to_string() const;

private:
    std::uint32_t p_ = 2;
    bool zero_ = true;
    RationalExponent exp_{};
};

/// n-th root of a norm value. Exact over {0} ∪ p^Q; the result carries the
/// in-value-group flag instead of rounding or rejecting.
NormValueQ norm_nth_root(const NormValue& a, std::int64_t n);
NormValueQ norm_nth_root(const NormValueQ& a, std::int64_t n);

/// A norm together with a below-precision marker: when `below` is set the
/// element was indistinguishable from 0 and `value` is the bound p^{-prec}.
struct NormEstimate {
    NormValue value;
    bool below = false;

    /// Strict accessor for contexts that need the exact norm.
    const NormValue& exact() const {
        if (below) throw BelowPrecision("norm requested on an element that vanishes at current precision (<= " + value.to_string() + ")");
        return value;
    }
    std::string to_string() const {
        if (below) return "<= " + value.to_string() + " (below precision)";
        return value.to_string();
    }
};

} // namespace perfectoid
