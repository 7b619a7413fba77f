#pragma once

#include <variant>

#include "perfectoid/untilt.hpp"

namespace perfectoid {

/// Which coefficient field a ring is built over: the tilt-side field
/// F_p((t^{1/p^infty})) or its char-0 untilt model.
enum class CoefSide { charp, untilt };

std::string to_string(CoefSide side);

/// A coefficient-field element: CharPSeries on the tilt side, an
/// UntiltFraction on the untilt side. All operations are exact at tracked
/// precision and throw AmbientMismatch when sides or primes differ.
class FieldElem {
public:
    FieldElem() = default;
    explicit FieldElem(CharPSeries v) : value_(std::move(v)) {}
    explicit FieldElem(UntiltFraction v) : value_(std::move(v)) {}
    explicit FieldElem(UntiltElement v) : value_(UntiltFraction(std::move(v))) {}

    static FieldElem zero(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec);
    static FieldElem one(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec);

    CoefSide side() const {
        return std::holds_alternative<CharPSeries>(value_) ? CoefSide::charp : CoefSide::untilt;
    }
    std::uint32_t p() const;

    const CharPSeries& as_charp() const;
    const UntiltFraction& as_untilt() const;

    bool is_zero_at_precision() const;
    NormEstimate norm() const;

    FieldElem add(const FieldElem& o) const;
    FieldElem sub(const FieldElem& o) const;
    FieldElem mul(const FieldElem& o) const;
    FieldElem neg() const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t k) const;

    bool equal_at_precision(const FieldElem& o) const;
    std::string to_string() const;

private:
    std::variant<CharPSeries, UntiltFraction> value_{CharPSeries()};
};

/// The value of a tilt-side point coordinate on a chosen side: g itself on
/// the tilt side, sharp(g) on the untilt side. Point coordinates are always
/// stored as tilt data so that p-power roots exist on both sides.
FieldElem realize_coordinate(const CharPSeries& g, CoefSide side, std::uint32_t n, const PExponent& t_prec);

/// coordinate^e for e in Z[1/p]_{>=0}, via p-th roots of the tilt data.
FieldElem coordinate_power(const CharPSeries& g, const PExponent& e, CoefSide side, std::uint32_t n,
                           const PExponent& t_prec);

} // namespace perfectoid
