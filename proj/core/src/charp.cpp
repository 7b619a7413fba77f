#include "perfectoid/charp.hpp"

#include <sstream>

namespace perfectoid {

namespace {
void check_compatible(const CharPSeries& a, const CharPSeries& b) {
    if (a.p() != b.p())
        throw AmbientMismatch("series over F_" + std::to_string(a.p()) + " and F_" + std::to_string(b.p()));
}
} // namespace

CharPSeries::CharPSeries(std::uint32_t p, PExponent prec) : p_(p), prec_(prec) {
    if (p < 2) throw UnsupportedConfig("prime must be >= 2");
    if (prec.prime() != p) throw AmbientMismatch("precision exponent has wrong ambient prime");
}

CharPSeries CharPSeries::one(std::uint32_t p, PExponent prec) {
    return monomial(p, PExponent::zero(p), 1, prec);
}

CharPSeries CharPSeries::monomial(std::uint32_t p, PExponent exp, std::uint32_t coeff, PExponent prec) {
    CharPSeries f(p, prec);
    f.insert_term(exp, coeff % p);
    return f;
}

CharPSeries CharPSeries::t(std::uint32_t p, PExponent prec) {
    return monomial(p, PExponent::integer(p, 1), 1, prec);
}

CharPSeries CharPSeries::constant(std::uint32_t p, std::uint32_t value, PExponent prec) {
    return monomial(p, PExponent::zero(p), value, prec);
}

void CharPSeries::insert_term(const PExponent& e, std::uint32_t c) {
    c %= p_;
    if (c == 0) return;
    if (e >= prec_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        std::uint32_t s = (it->second + c) % p_;
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
}

std::optional<PExponent> CharPSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

bool CharPSeries::integral() const {
    if (terms_.empty()) return !prec_.is_negative();
    return !terms_.begin()->first.is_negative();
}

std::uint32_t CharPSeries::coeff_at(const PExponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0u : it->second;
}

std::uint32_t CharPSeries::constant_term() const { return coeff_at(PExponent::zero(p_)); }

CharPSeries CharPSeries::operator+(const CharPSeries& o) const {
    check_compatible(*this, o);
    CharPSeries r(p_, prec_ <= o.prec_ ? prec_ : o.prec_);
    for (const auto& [e, c] : terms_) r.insert_term(e, c);
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

CharPSeries CharPSeries::operator-() const {
    CharPSeries r(p_, prec_);
    for (const auto& [e, c] : terms_) r.insert_term(e, p_ - c);
    return r;
}

CharPSeries CharPSeries::operator-(const CharPSeries& o) const { return *this + (-o); }

CharPSeries CharPSeries::mul(const CharPSeries& o, std::size_t term_cap) const {
    check_compatible(*this, o);
    // precision of a product: min over the cross terms that fall below the
    // opposite factor's cutoff, i.e. min(v(f)+prec_g, v(g)+prec_f); for an
    // empty factor the product is known to the combined cutoff.
    PExponent pf = valuation() ? (*valuation() + o.prec_) : (prec_ + o.prec_);
    PExponent pg = o.valuation() ? (*o.valuation() + prec_) : (prec_ + o.prec_);
    CharPSeries r(p_, pf <= pg ? pf : pg);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            r.insert_term(e1 + e2, c1 * c2);
            if (r.terms_.size() > term_cap)
                throw TruncationOverflow("product support exceeds the term cap of " + std::to_string(term_cap));
        }
    }
    return r;
}

CharPSeries CharPSeries::pow(std::uint64_t k, std::size_t term_cap) const {
    CharPSeries acc = one(p_, prec_);
    if (k == 0) return acc;
    CharPSeries base = *this;
    // square-and-multiply; char-p Frobenius steps would be cheaper for
    // p-power exponents but this is uniform and exact.
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

CharPSeries CharPSeries::scaled(std::uint32_t c) const {
    CharPSeries r(p_, prec_);
    for (const auto& [e, coef] : terms_) r.insert_term(e, coef * c);
    return r;
}

CharPSeries CharPSeries::frobenius() const {
    CharPSeries r(p_, prec_.scaled_by_p(1));
    for (const auto& [e, c] : terms_) r.insert_term(e.scaled_by_p(1), c); // a^p = a in F_p
    return r;
}

CharPSeries CharPSeries::pth_root() const {
    CharPSeries r(p_, prec_.scaled_by_p(-1));
    for (const auto& [e, c] : terms_) r.insert_term(e.scaled_by_p(-1), c);
    return r;
}

CharPSeries CharPSeries::shifted(const PExponent& delta) const {
    CharPSeries r(p_, prec_ + delta);
    for (const auto& [e, c] : terms_) r.insert_term(e + delta, c);
    return r;
}

CharPSeries CharPSeries::truncated(const PExponent& new_prec) const {
    CharPSeries r(p_, new_prec <= prec_ ? new_prec : prec_);
    for (const auto& [e, c] : terms_) r.insert_term(e, c);
    return r;
}

NormEstimate CharPSeries::norm() const {
    if (terms_.empty()) return NormEstimate{NormValue::pow(prec_), true};
    return NormEstimate{NormValue::pow(terms_.begin()->first), false};
}

CharPSeries CharPSeries::inverse(std::size_t term_cap) const {
    if (terms_.empty())
        throw BelowPrecision("inverse of an element that vanishes at precision t^" + prec_.to_string());
    PExponent v = terms_.begin()->first;
    std::uint32_t lead = terms_.begin()->second;
    // f = c t^v (1 + u), v(u) > 0; relative precision prec - v is preserved,
    // so the inverse is known modulo t^{prec - 2v}.
    std::uint32_t lead_inv = 1;
    while ((lead_inv * lead) % p_ != 1) ++lead_inv;
    CharPSeries unit = shifted(-v).scaled(lead_inv); // 1 + u, known mod t^{prec-v}
    PExponent rel = prec_ - v;
    CharPSeries u = unit - one(p_, rel);
    CharPSeries acc = one(p_, rel);
    CharPSeries pw = one(p_, rel);
    std::size_t guard = 0;
    while (!u.empty()) {
        // keep the partial sums at the target precision so the powers of u
        // eventually fall out of the window
        pw = pw.mul(-u, term_cap).truncated(rel);
        if (pw.empty()) break;
        acc = acc + pw;
        if (++guard > 4096) throw CapExceeded("geometric inversion did not terminate within the iteration cap");
    }
    return acc.shifted(-v).scaled(lead_inv);
}

bool CharPSeries::operator==(const CharPSeries& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && terms_ == o.terms_;
}

bool CharPSeries::equal_at_common_precision(const CharPSeries& o) const {
    check_compatible(*this, o);
    PExponent common = prec_ <= o.prec_ ? prec_ : o.prec_;
    return truncated(common).terms_ == o.truncated(common).terms_;
}

CharPSeries CharPSeries::leading_monomial() const {
    if (terms_.empty()) throw BelowPrecision("leading monomial of a vanishing element");
    return monomial(p_, terms_.begin()->first, terms_.begin()->second, prec_);
}

std::string CharPSeries::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "O(t^" << prec_.to_string() << ")";
        return os.str();
    }
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e.is_zero()) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "t^" << e.to_string();
        }
    }
    os << " + O(t^" << prec_.to_string() << ")";
    return os.str();
}

} // namespace perfectoid
