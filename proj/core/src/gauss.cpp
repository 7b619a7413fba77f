#include "perfectoid/gauss.hpp"

#include <sstream>

namespace perfectoid {

namespace {

void check_compatible(const GaussElement& a, const GaussElement& b) {
    if (a.side() != b.side() || a.p() != b.p() || a.d() != b.d())
        throw AmbientMismatch("Gauss elements from different ambients");
}

std::string exps_to_string(const MultiExp& e) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].is_zero()) continue;
        if (any) os << "*";
        os << "X" << (i + 1);
        if (!(e[i].num() == 1 && e[i].kpow() == 0)) os << "^" << e[i].to_string();
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

} // namespace

GaussElement::GaussElement(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n, PExponent t_prec)
    : side_(side), p_(p), d_(d), n_(n), t_prec_(t_prec) {}

GaussElement GaussElement::zero(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n,
                                const PExponent& t_prec) {
    return GaussElement(side, p, d, n, t_prec);
}

GaussElement GaussElement::constant(const FieldElem& c, std::uint32_t d) {
    std::uint32_t n = c.side() == CoefSide::untilt ? c.as_untilt().numerator().n() : 1;
    PExponent prec = c.side() == CoefSide::untilt ? c.as_untilt().numerator().t_prec() : c.as_charp().prec();
    GaussElement g(c.side(), c.p(), d, n, prec);
    g.add_term(MultiExp(d, PExponent::zero(c.p())), c);
    return g;
}

GaussElement GaussElement::monomial(const FieldElem& c, const MultiExp& e) {
    GaussElement g = constant(c, static_cast<std::uint32_t>(e.size()));
    g.terms_.clear();
    g.add_term(e, c);
    return g;
}

void GaussElement::add_term(const MultiExp& e, const FieldElem& c) {
    if (e.size() != d_) throw AmbientMismatch("exponent arity does not match the variable count");
    for (const auto& x : e)
        if (x.is_negative()) throw Error("Gauss exponents must be componentwise >= 0");
    if (c.side() != side_ || c.p() != p_) throw AmbientMismatch("coefficient from the wrong field");
    if (c.is_zero_at_precision()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    FieldElem s = it->second.add(c);
    if (s.is_zero_at_precision())
        terms_.erase(it);
    else
        it->second = s;
}

FieldElem GaussElement::coeff_at(const MultiExp& e) const {
    auto it = terms_.find(e);
    if (it != terms_.end()) return it->second;
    return FieldElem::zero(side_, p_, n_, t_prec_);
}

FieldElem GaussElement::constant_coeff() const { return coeff_at(MultiExp(d_, PExponent::zero(p_))); }

GaussElement GaussElement::add(const GaussElement& o) const {
    check_compatible(*this, o);
    GaussElement r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

GaussElement GaussElement::sub(const GaussElement& o) const { return add(o.neg()); }

GaussElement GaussElement::neg() const {
    GaussElement r(side_, p_, d_, n_, t_prec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.neg());
    return r;
}

GaussElement GaussElement::mul(const GaussElement& o, std::size_t term_cap) const {
    check_compatible(*this, o);
    GaussElement r(side_, p_, d_, n_, t_prec_);
    MultiExp e(d_, PExponent::zero(p_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (std::uint32_t i = 0; i < d_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1.mul(c2));
            if (r.terms_.size() > term_cap)
                throw TruncationOverflow("Gauss product support exceeds the term cap");
        }
    }
    return r;
}

GaussElement GaussElement::pow(std::uint64_t k, std::size_t term_cap) const {
    GaussElement acc = constant(FieldElem::one(side_, p_, n_, t_prec_), d_);
    GaussElement base = *this;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            acc = first ? base : acc.mul(base, term_cap);
            first = false;
        }
        k >>= 1;
        if (k > 0) base = base.mul(base, term_cap);
    }
    return acc;
}

bool GaussElement::equal_at_precision(const GaussElement& o) const {
    check_compatible(*this, o);
    return sub(o).empty();
}

std::string GaussElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << exps_to_string(e);
    }
    return os.str();
}

SeminormDescriptor SeminormDescriptor::gauss_radius(CoefSide side, std::vector<NormValue> r) {
    for (const auto& v : r) {
        if (v.is_zero()) continue;
        if (v.exponent().is_negative())
            throw BoundednessViolation("Gauss radius > 1 is unbounded on the unit-radius algebra");
    }
    SeminormDescriptor d;
    d.side_ = side;
    std::string name = "phi_r(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) name += ",";
        name += r[i].to_string();
    }
    d.name_ = name + ")/" + to_string(side);
    d.data_ = GaussRadius{std::move(r)};
    return d;
}

SeminormDescriptor SeminormDescriptor::gauss_norm(CoefSide side, std::uint32_t p, std::uint32_t d) {
    return gauss_radius(side, std::vector<NormValue>(d, NormValue::one(p)));
}

SeminormDescriptor SeminormDescriptor::eval_point(CoefSide side, std::vector<CharPSeries> coords,
                                                  const NormValue& radius_bound) {
    for (const auto& g : coords) {
        NormEstimate nm = g.norm();
        if (!nm.below && nm.value > radius_bound)
            throw BoundednessViolation("evaluation point coordinate of norm " + nm.value.to_string() +
                                       " exceeds the radius bound " + radius_bound.to_string());
    }
    SeminormDescriptor d;
    d.side_ = side;
    std::string name = "ev(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) name += ",";
        name += coords[i].empty() ? "0" : coords[i].to_string();
    }
    d.name_ = name + ")/" + to_string(side);
    d.data_ = EvalPoint{std::move(coords)};
    return d;
}

SeminormDescriptor SeminormDescriptor::product_coordinate(CoefSide side, std::size_t index) {
    SeminormDescriptor d;
    d.side_ = side;
    d.name_ = "coord_" + std::to_string(index + 1);
    d.data_ = ProductCoordinate{index};
    return d;
}

SeminormDescriptor SeminormDescriptor::custom_table(CoefSide side, std::map<std::string, NormValue> values) {
    SeminormDescriptor d;
    d.side_ = side;
    d.name_ = "table(" + std::to_string(values.size()) + " entries)";
    d.data_ = CustomTable{std::move(values)};
    return d;
}

SeminormDescriptor SeminormDescriptor::with_side(CoefSide side) const {
    SeminormDescriptor d = *this;
    d.side_ = side;
    auto pos = d.name_.rfind('/');
    if (pos != std::string::npos) d.name_ = d.name_.substr(0, pos + 1) + to_string(side);
    return d;
}

NormEstimate gauss_eval(const SeminormDescriptor& phi, const GaussElement& f) {
    if (phi.side() != f.side())
        throw AmbientMismatch("descriptor for side " + to_string(phi.side()) + " applied to a " +
                              to_string(f.side()) + " element");
    const std::uint32_t p = f.p();
    if (phi.is_gauss_radius()) {
        const auto& r = phi.gauss_radius_data().r;
        if (r.size() != f.d()) throw AmbientMismatch("radius arity does not match the variable count");
        NormValue best = NormValue::zero(p);
        NormValue pending_bound = NormValue::zero(p);
        bool pending = false;
        for (const auto& [e, c] : f.terms()) {
            NormEstimate cn = c.norm();
            NormValue w = cn.value;
            for (std::uint32_t i = 0; i < f.d(); ++i)
                if (!e[i].is_zero()) w = w * r[i].pow_exponent(e[i]);
            if (cn.below) {
                if (w > pending_bound) {
                    pending_bound = w;
                    pending = true;
                }
            } else {
                best = NormValue::max(best, w);
            }
        }
        if (pending && pending_bound > best) return NormEstimate{pending_bound, true};
        return NormEstimate{best, false};
    }
    if (phi.is_eval_point()) {
        const auto& coords = phi.eval_point_data().coords;
        if (coords.size() != f.d()) throw AmbientMismatch("point arity does not match the variable count");
        FieldElem acc = FieldElem::zero(f.side(), p, f.witt_len(), f.t_prec());
        bool contributed = false;
        for (const auto& [e, c] : f.terms()) {
            FieldElem term = c;
            bool structural_zero = false;
            for (std::uint32_t i = 0; i < f.d(); ++i) {
                if (e[i].is_zero()) continue;
                if (coords[i].empty()) {
                    structural_zero = true;
                    break;
                }
                term = term.mul(coordinate_power(coords[i], e[i], f.side(), f.witt_len(), f.t_prec()));
            }
            if (structural_zero) continue;
            acc = acc.add(term);
            contributed = true;
        }
        // no term survives substitution: the value is exactly 0, not merely
        // zero at precision
        if (!contributed) return NormEstimate{NormValue::zero(p), false};
        return acc.norm();
    }
    throw AmbientMismatch("descriptor family '" + phi.name() + "' does not apply to Gauss elements");
}

SpectralCertificate spectral_seminorm_gauss(const GaussElement& f, std::uint32_t max_n, std::size_t term_cap) {
    SeminormDescriptor norm = SeminormDescriptor::gauss_norm(f.side(), f.p(), f.d());
    return spectral_seminorm(
        f, max_n, [&](const GaussElement& a, const GaussElement& b) { return a.mul(b, term_cap); },
        [&](const GaussElement& a) {
            if (a.empty()) return NormEstimate{NormValue::zero(a.p()), false};
            return gauss_eval(norm, a);
        });
}

bool is_power_bounded(const GaussElement& f) {
    NormEstimate nm = gauss_eval(SeminormDescriptor::gauss_norm(f.side(), f.p(), f.d()), f);
    return nm.value.leq_one();
}

PowerBoundedVerdict is_power_bounded_spectral(const SpectralCertificate& cert) {
    bool le_one = cert.bound.is_zero() || cert.bound <= NormValueQ::from(NormValue::one(cert.bound.prime()));
    return PowerBoundedVerdict{le_one, true};
}

std::vector<CauchyGapRow> cauchy_gap_demo(CoefSide side, std::uint32_t p, std::uint32_t n,
                                          const PExponent& t_prec, const NormValue& varpi_norm,
                                          std::uint32_t m_max) {
    if (varpi_norm.is_zero() || !varpi_norm.leq_one() || varpi_norm.is_one())
        throw Error("pseudo-uniformizer norm must satisfy 0 < |w| < 1");
    // w = t^e with |t^e| = varpi_norm realizes the stated norm on both sides.
    PExponent e = varpi_norm.exponent();
    std::vector<CauchyGapRow> rows;
    SeminormDescriptor gauss1 = SeminormDescriptor::gauss_norm(side, p, 1);
    for (std::uint32_t m = 0; m < m_max; ++m) {
        // s_{m+1} - s_m = w^{m+1} X^{1/p^{m+1}}
        CharPSeries wc = CharPSeries::monomial(
            p, e * PExponent::integer(p, static_cast<std::int64_t>(m) + 1), 1, t_prec);
        FieldElem coeff = realize_coordinate(wc, side, n, t_prec);
        MultiExp ex{PExponent(p, 1, m + 1)};
        GaussElement diff = GaussElement::monomial(coeff, ex);
        rows.push_back(CauchyGapRow{m, gauss_eval(gauss1, diff).exact()});
    }
    return rows;
}

DualNumber DualNumber::mul(const DualNumber& o) const {
    return DualNumber{a.mul(o.a), a.mul(o.b).add(b.mul(o.a))};
}

NormEstimate DualNumber::norm() const {
    NormEstimate na = a.norm();
    NormEstimate nb = b.norm();
    NormValue scaled = nb.value * NormValue::pow(PExponent::integer(a.p(), -1));
    return NormEstimate{NormValue::max(na.value, scaled), na.below || nb.below};
}

std::string DualNumber::to_string() const { return "(" + a.to_string() + ") + (" + b.to_string() + ")*eps"; }

SpectralCertificate spectral_seminorm_dual(const DualNumber& f, std::uint32_t max_n) {
    return spectral_seminorm(
        f, max_n, [](const DualNumber& x, const DualNumber& y) { return x.mul(y); },
        [](const DualNumber& x) {
            if (x.a.is_zero_at_precision() && x.b.is_zero_at_precision())
                return NormEstimate{NormValue::zero(x.a.p()), false};
            return x.norm();
        });
}

} // namespace perfectoid
