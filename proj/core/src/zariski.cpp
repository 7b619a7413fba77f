#include "perfectoid/zariski.hpp"

namespace perfectoid {

ZElem::Kind ZElem::kind() const {
    if (std::holds_alternative<FieldElem>(value_)) return Kind::field;
    if (std::holds_alternative<CNormedPoly>(value_)) return Kind::cpoly;
    return Kind::gauss;
}

std::uint32_t ZElem::p() const {
    switch (kind()) {
        case Kind::field: return as_field().p();
        case Kind::cpoly: return as_cpoly().p();
        default: return as_gauss().p();
    }
}

ZElem ZElem::add(const ZElem& o) const {
    if (kind() != o.kind()) throw AmbientMismatch("ring elements from different carriers");
    switch (kind()) {
        case Kind::field: return ZElem(as_field().add(o.as_field()));
        case Kind::cpoly: return ZElem(as_cpoly().add(o.as_cpoly()));
        default: return ZElem(as_gauss().add(o.as_gauss()));
    }
}

ZElem ZElem::sub(const ZElem& o) const { return add(o.neg()); }

ZElem ZElem::mul(const ZElem& o, std::size_t term_cap) const {
    if (kind() != o.kind()) throw AmbientMismatch("ring elements from different carriers");
    switch (kind()) {
        case Kind::field: return ZElem(as_field().mul(o.as_field()));
        case Kind::cpoly: return ZElem(as_cpoly().mul(o.as_cpoly(), term_cap));
        default: return ZElem(as_gauss().mul(o.as_gauss(), term_cap));
    }
}

ZElem ZElem::neg() const {
    switch (kind()) {
        case Kind::field: return ZElem(as_field().neg());
        case Kind::cpoly: return ZElem(as_cpoly().neg());
        default: return ZElem(as_gauss().neg());
    }
}

ZElem ZElem::one_like() const {
    switch (kind()) {
        case Kind::field: {
            const FieldElem& f = as_field();
            std::uint32_t n = f.side() == CoefSide::untilt ? f.as_untilt().numerator().n() : 1;
            PExponent prec = f.side() == CoefSide::untilt ? f.as_untilt().numerator().t_prec() : f.as_charp().prec();
            return ZElem(FieldElem::one(f.side(), f.p(), n, prec));
        }
        case Kind::cpoly: {
            const CNormedPoly& f = as_cpoly();
            return ZElem(CNormedPoly::one(f.side(), f.p(), f.witt_len(), f.t_prec(), f.radius()));
        }
        default: {
            const GaussElement& f = as_gauss();
            return ZElem(GaussElement::constant(FieldElem::one(f.side(), f.p(), f.witt_len(), f.t_prec()), f.d()));
        }
    }
}

bool ZElem::is_zero_at_precision() const {
    switch (kind()) {
        case Kind::field: return as_field().is_zero_at_precision();
        case Kind::cpoly: return as_cpoly().is_zero_at_precision();
        default: return as_gauss().empty();
    }
}

NormEstimate ZElem::norm() const {
    switch (kind()) {
        case Kind::field: return as_field().norm();
        case Kind::cpoly: return as_cpoly().norm();
        default: {
            const GaussElement& g = as_gauss();
            if (g.empty()) return NormEstimate{NormValue::zero(g.p()), false};
            return gauss_eval(SeminormDescriptor::gauss_norm(g.side(), g.p(), g.d()), g);
        }
    }
}

std::size_t ZElem::support_size() const {
    switch (kind()) {
        case Kind::field: return is_zero_at_precision() ? 0 : 1;
        case Kind::cpoly: return as_cpoly().support_size();
        default: return as_gauss().terms().size();
    }
}

std::optional<std::size_t> ZElem::min_degree() const {
    if (kind() != Kind::cpoly) return std::nullopt;
    return as_cpoly().min_degree();
}

bool ZElem::equal_at_precision(const ZElem& o) const {
    if (kind() != o.kind()) throw AmbientMismatch("ring elements from different carriers");
    switch (kind()) {
        case Kind::field: return as_field().equal_at_precision(o.as_field());
        case Kind::cpoly: return as_cpoly().equal_at_precision(o.as_cpoly());
        default: return as_gauss().equal_at_precision(o.as_gauss());
    }
}

std::string ZElem::to_string() const {
    switch (kind()) {
        case Kind::field: return as_field().to_string();
        case Kind::cpoly: return as_cpoly().to_string();
        default: return as_gauss().to_string();
    }
}

std::string to_string(InvertStatus s) {
    switch (s) {
        case InvertStatus::converged: return "converged";
        case InvertStatus::diverged_support: return "diverged-support";
        default: return "inconclusive";
    }
}

InvertReport invert_one_plus(const ZElem& x, std::uint32_t term_max, const NormValue& target_prec,
                             std::size_t term_cap) {
    InvertReport report;
    NormEstimate xn = x.norm();
    if (!xn.below && !(xn.value < NormValue::one(x.p()))) {
        report.status = InvertStatus::inconclusive;
        report.note = "sample has norm >= 1; the geometric series test does not apply";
        return report;
    }
    ZElem one = x.one_like();
    ZElem one_plus = one.add(x);
    ZElem s = one;
    ZElem pw = one;
    bool support_grew_every_step = true;
    std::size_t last_support = s.support_size();
    std::uint32_t m = 0;
    for (m = 1; m <= term_max; ++m) {
        pw = pw.mul(x.neg(), term_cap);
        s = s.add(pw);
        std::size_t sup = s.support_size();
        if (sup <= last_support) support_grew_every_step = false;
        last_support = sup;
        ZElem residual = one_plus.mul(s, term_cap).sub(one);
        NormEstimate rn = residual.norm();
        report.residual = rn;
        bool small_enough = residual.is_zero_at_precision() || rn.value <= target_prec;
        if (small_enough && (!x.finite_support_ring() || !support_grew_every_step)) {
            // in a finite-support carrier the residual criterion is only
            // meaningful once the partial sums stay inside a fixed-degree space
            report.status = InvertStatus::converged;
            report.terms_used = m;
            report.approx = s;
            return report;
        }
    }
    report.terms_used = term_max;
    auto mindeg = x.min_degree();
    if (x.finite_support_ring() && support_grew_every_step && mindeg && *mindeg >= 1 &&
        !x.is_zero_at_precision()) {
        // Frozen-prefix witness: each step adds a term of degree m*mindeg
        // whose coefficient never changes afterwards, so any candidate limit
        // of some degree D stays at distance >= |coeff| c^{D+1} forever.
        report.status = InvertStatus::diverged_support;
        report.note = "degree of the partial sums grows without stabilization";
    } else {
        report.status = InvertStatus::inconclusive;
        report.note = "budget exhausted without a convergence or divergence certificate";
    }
    return report;
}

ZariskianReport is_zariskian_sample(const std::vector<ZElem>& samples, std::uint32_t term_max,
                                    const NormValue& target_prec, std::size_t term_cap) {
    ZariskianReport report;
    report.witness_found = false;
    for (const auto& x : samples) {
        InvertReport r = invert_one_plus(x, term_max, target_prec, term_cap);
        report.rows.push_back(ZariskianSampleRow{x.to_string(), r.status, r.terms_used, r.residual_string()});
        if (r.status == InvertStatus::diverged_support) report.witness_found = true;
    }
    report.verdict = report.witness_found
                         ? "not Zariskian (divergence witness found)"
                         : "no counterexample found (sampling cannot prove the Zariskian property)";
    return report;
}

ZarFraction::ZarFraction(ZElem numerator, ZElem denom_small)
    : num_(std::move(numerator)), small_(std::move(denom_small)) {
    NormEstimate nm = small_.norm();
    if (nm.below) return; // vanishes at precision: certainly of norm < 1
    if (!(nm.value < NormValue::one(small_.p())))
        throw Error("denominator must be 1 + x with ||x|| < 1, got ||x|| = " + nm.value.to_string());
}

std::string ZarFraction::to_string() const {
    return "(" + num_.to_string() + ") / (1 + " + small_.to_string() + ")";
}

NormEstimate zar_norm(const ZarFraction& fr) { return fr.numerator().norm(); }

std::string to_string(ZarEq e) {
    switch (e) {
        case ZarEq::equal: return "equal";
        case ZarEq::not_equal: return "not-equal";
        default: return "undecided";
    }
}

ZarEq zar_eq(const ZarFraction& a, const ZarFraction& b, std::size_t term_cap) {
    ZElem lhs = a.numerator().mul(b.denominator(), term_cap);
    ZElem rhs = b.numerator().mul(a.denominator(), term_cap);
    if (lhs.equal_at_precision(rhs)) return ZarEq::equal;
    // all supported carriers are integral domains: t'(ta - sb) = 0 with
    // t' != 0 forces ta = sb, so a visible difference is definitive.
    return ZarEq::not_equal;
}

} // namespace perfectoid
