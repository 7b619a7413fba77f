#include "perfectoid/field.hpp"

namespace perfectoid {

std::string to_string(CoefSide side) { return side == CoefSide::charp ? "charp" : "untilt"; }

namespace {
void check_sides(const FieldElem& a, const FieldElem& b) {
    if (a.side() != b.side())
        throw AmbientMismatch("coefficient-field elements on different sides (" + to_string(a.side()) +
                              " vs " + to_string(b.side()) + ")");
    if (a.p() != b.p()) throw AmbientMismatch("coefficient-field elements over different primes");
}
} // namespace

FieldElem FieldElem::zero(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    if (side == CoefSide::charp) return FieldElem(CharPSeries::zero(p, t_prec));
    return FieldElem(UntiltFraction::zero(p, n, t_prec));
}

FieldElem FieldElem::one(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    if (side == CoefSide::charp) return FieldElem(CharPSeries::one(p, t_prec));
    return FieldElem(UntiltFraction::one(p, n, t_prec));
}

std::uint32_t FieldElem::p() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return c->p();
    return std::get<UntiltFraction>(value_).p();
}

const CharPSeries& FieldElem::as_charp() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return *c;
    throw AmbientMismatch("expected a tilt-side (charp) coefficient");
}

const UntiltFraction& FieldElem::as_untilt() const {
    if (auto* c = std::get_if<UntiltFraction>(&value_)) return *c;
    throw AmbientMismatch("expected an untilt-side coefficient");
}

bool FieldElem::is_zero_at_precision() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return c->empty();
    return std::get<UntiltFraction>(value_).is_zero_at_precision();
}

NormEstimate FieldElem::norm() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return c->norm();
    return std::get<UntiltFraction>(value_).norm();
}

FieldElem FieldElem::add(const FieldElem& o) const {
    check_sides(*this, o);
    if (auto* c = std::get_if<CharPSeries>(&value_)) return FieldElem(*c + o.as_charp());
    const auto& cache = witt_cache(p(), as_untilt().numerator().n());
    return FieldElem(frac_add(cache, as_untilt(), o.as_untilt()));
}

FieldElem FieldElem::sub(const FieldElem& o) const { return add(o.neg()); }

FieldElem FieldElem::mul(const FieldElem& o) const {
    check_sides(*this, o);
    if (auto* c = std::get_if<CharPSeries>(&value_)) return FieldElem(c->mul(o.as_charp()));
    const auto& cache = witt_cache(p(), as_untilt().numerator().n());
    return FieldElem(frac_mul(cache, as_untilt(), o.as_untilt()));
}

FieldElem FieldElem::neg() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return FieldElem(-*c);
    const auto& cache = witt_cache(p(), as_untilt().numerator().n());
    return FieldElem(frac_neg(cache, as_untilt()));
}

FieldElem FieldElem::inverse() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return FieldElem(c->inverse());
    const auto& cache = witt_cache(p(), as_untilt().numerator().n());
    return FieldElem(frac_inverse(cache, as_untilt()));
}

FieldElem FieldElem::pow(std::uint64_t k) const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return FieldElem(c->pow(k));
    const auto& cache = witt_cache(p(), as_untilt().numerator().n());
    return FieldElem(frac_pow(cache, as_untilt(), k));
}

bool FieldElem::equal_at_precision(const FieldElem& o) const {
    check_sides(*this, o);
    if (auto* c = std::get_if<CharPSeries>(&value_)) return c->equal_at_common_precision(o.as_charp());
    return as_untilt().equal_at_precision(o.as_untilt());
}

std::string FieldElem::to_string() const {
    if (auto* c = std::get_if<CharPSeries>(&value_)) return c->to_string();
    return std::get<UntiltFraction>(value_).to_string();
}

FieldElem realize_coordinate(const CharPSeries& g, CoefSide side, std::uint32_t n, const PExponent& t_prec) {
    if (side == CoefSide::charp) return FieldElem(g);
    const auto& cache = witt_cache(g.p(), n);
    return FieldElem(UntiltFraction(sharp(cache, g, t_prec)));
}

FieldElem coordinate_power(const CharPSeries& g, const PExponent& e, CoefSide side, std::uint32_t n,
                           const PExponent& t_prec) {
    if (e.is_negative()) throw Error("coordinate powers require nonnegative exponents");
    // e = m / p^k: take k p-th roots of the tilt data, then an integer power.
    CharPSeries root = g;
    for (std::uint32_t i = 0; i < e.kpow(); ++i) root = root.pth_root();
    FieldElem base = realize_coordinate(root, side, n, t_prec);
    return base.pow(static_cast<std::uint64_t>(e.num()));
}

} // namespace perfectoid
