#include "perfectoid/poly_ring.hpp"

#include <sstream>

namespace perfectoid {

CNormedPoly::CNormedPoly(CoefSide side, std::uint32_t p, std::uint32_t n, PExponent t_prec, NormValue c)
    : side_(side), p_(p), n_(n), t_prec_(t_prec), c_(c) {
    if (c.is_zero() || !c.leq_one() || c.is_one())
        throw Error("the c-norm requires 0 < c < 1, got " + c.to_string());
}

CNormedPoly CNormedPoly::zero(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                              const NormValue& c) {
    return CNormedPoly(side, p, n, t_prec, c);
}

CNormedPoly CNormedPoly::one(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                             const NormValue& c) {
    CNormedPoly f(side, p, n, t_prec, c);
    f.coeffs_.push_back(FieldElem::one(side, p, n, t_prec));
    return f;
}

CNormedPoly CNormedPoly::variable(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                                  const NormValue& c) {
    CNormedPoly f(side, p, n, t_prec, c);
    f.coeffs_.push_back(FieldElem::zero(side, p, n, t_prec));
    f.coeffs_.push_back(FieldElem::one(side, p, n, t_prec));
    return f;
}

CNormedPoly CNormedPoly::from_coeffs(std::vector<FieldElem> coeffs, const NormValue& c) {
    if (coeffs.empty()) throw Error("from_coeffs needs at least one coefficient");
    const FieldElem& c0 = coeffs.front();
    std::uint32_t n = c0.side() == CoefSide::untilt ? c0.as_untilt().numerator().n() : 1;
    PExponent prec = c0.side() == CoefSide::untilt ? c0.as_untilt().numerator().t_prec() : c0.as_charp().prec();
    CNormedPoly f(c0.side(), c0.p(), n, prec, c);
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

void CNormedPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero_at_precision()) coeffs_.pop_back();
}

std::optional<std::size_t> CNormedPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::optional<std::size_t> CNormedPoly::min_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero_at_precision()) return i;
    return std::nullopt;
}

FieldElem CNormedPoly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return FieldElem::zero(side_, p_, n_, t_prec_);
}

std::size_t CNormedPoly::support_size() const {
    std::size_t k = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero_at_precision()) ++k;
    return k;
}

CNormedPoly CNormedPoly::add(const CNormedPoly& o) const {
    if (side_ != o.side_ || p_ != o.p_ || c_ != o.c_)
        throw AmbientMismatch("polynomials from different c-normed rings");
    CNormedPoly r(side_, p_, n_, t_prec_, c_);
    std::size_t m = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < m; ++i) r.coeffs_.push_back(coeff(i).add(o.coeff(i)));
    r.trim();
    return r;
}

CNormedPoly CNormedPoly::sub(const CNormedPoly& o) const { return add(o.neg()); }

CNormedPoly CNormedPoly::neg() const {
    CNormedPoly r(side_, p_, n_, t_prec_, c_);
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.neg());
    return r;
}

CNormedPoly CNormedPoly::mul(const CNormedPoly& o, std::size_t degree_cap) const {
    if (side_ != o.side_ || p_ != o.p_ || c_ != o.c_)
        throw AmbientMismatch("polynomials from different c-normed rings");
    CNormedPoly r(side_, p_, n_, t_prec_, c_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    std::size_t m = coeffs_.size() + o.coeffs_.size() - 1;
    if (m > degree_cap) throw TruncationOverflow("polynomial product exceeds the degree cap");
    r.coeffs_.assign(m, FieldElem::zero(side_, p_, n_, t_prec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j].add(coeffs_[i].mul(o.coeffs_[j]));
    r.trim();
    return r;
}

CNormedPoly CNormedPoly::scale(const FieldElem& s) const {
    CNormedPoly r(side_, p_, n_, t_prec_, c_);
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.mul(s));
    r.trim();
    return r;
}

NormEstimate CNormedPoly::norm() const { return norm_at_radius(c_); }

NormEstimate CNormedPoly::norm_at_radius(const NormValue& rho) const {
    NormValue best = NormValue::zero(p_);
    NormValue pending = NormValue::zero(p_);
    bool below = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        NormEstimate cn = coeffs_[i].norm();
        NormValue w = cn.value * rho.pow_int(static_cast<std::int64_t>(i));
        if (cn.below) {
            if (w > pending) {
                pending = w;
                below = true;
            }
        } else {
            best = NormValue::max(best, w);
        }
    }
    if (below && pending > best) return NormEstimate{pending, true};
    return NormEstimate{best, false};
}

FieldElem CNormedPoly::eval(const FieldElem& point) const {
    FieldElem acc = FieldElem::zero(side_, p_, n_, t_prec_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc.mul(point).add(coeffs_[i]);
    return acc;
}

bool CNormedPoly::equal_at_precision(const CNormedPoly& o) const {
    return sub(o).is_zero_at_precision();
}

std::string CNormedPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero_at_precision()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) os << "*T";
        if (i > 1) os << "*T^" << i;
    }
    return os.str();
}

} // namespace perfectoid
