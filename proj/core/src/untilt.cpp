#include "perfectoid/untilt.hpp"

#include <sstream>

namespace perfectoid {

namespace {

void check_same_ambient(const UntiltElement& x, const UntiltElement& y) {
    if (x.p() != y.p() || x.n() != y.n())
        throw AmbientMismatch("untilt elements with different ambient (p, n)");
}

/// Split a series into the part with exponents < 1 (canonical digit) and the
/// rest divided by t (the carry into the next p-adic digit). The low part is
/// known to the full precision of x; the shifted carry loses one t-power.
/// Precisions are clamped at 0 so deeply eroded elements stay representable
/// ("known mod t^0" = nothing known).
std::pair<CharPSeries, CharPSeries> split_digit(const CharPSeries& x) {
    const std::uint32_t p = x.p();
    PExponent zero_exp = PExponent::zero(p);
    PExponent one_exp = PExponent::integer(p, 1);
    PExponent low_prec = x.prec() >= zero_exp ? x.prec() : zero_exp;
    PExponent carry_prec = x.prec() - one_exp;
    if (carry_prec < zero_exp) carry_prec = zero_exp;
    CharPSeries low(p, low_prec);
    CharPSeries carry_sh(p, carry_prec);
    for (const auto& [e, c] : x.terms()) {
        if (e < one_exp)
            low = low + CharPSeries::monomial(p, e, c, low.prec());
        else
            carry_sh = carry_sh + CharPSeries::monomial(p, e - one_exp, c, carry_sh.prec());
    }
    return {low, carry_sh};
}

PExponent cap_prec(std::uint32_t p, std::uint32_t n, const PExponent& e) {
    PExponent top = PExponent::integer(p, n);
    PExponent bottom = PExponent::zero(p);
    if (e > top) return top;
    if (e < bottom) return bottom;
    return e;
}

} // namespace

UntiltElement::UntiltElement(std::uint32_t p, std::uint32_t n, PExponent t_prec,
                             std::vector<CharPSeries> digits, PExponent padic_prec)
    : p_(p), n_(n), t_prec_(t_prec), digits_(std::move(digits)), prec_(cap_prec(p, n, padic_prec)) {
    if (digits_.size() != n_) throw AmbientMismatch("digit count does not match Witt length");
    PExponent one_exp = PExponent::integer(p_, 1);
    for (std::uint32_t i = 0; i < n_; ++i) {
        CharPSeries& d = digits_[i];
        if (d.p() != p_) throw AmbientMismatch("digit over the wrong prime");
        if (!d.integral()) throw Error("digits must be integral");
        if (!d.empty() && d.terms().rbegin()->first >= one_exp)
            throw Error("digit not in canonical form (support reaches t^1)");
        // digit i is only reliable below t^{padic_prec - i}; a window >= 1
        // covers the whole canonical support [0, 1) and constrains nothing
        PExponent window = prec_ - PExponent::integer(p_, i);
        if (window >= one_exp) continue;
        if (window < PExponent::zero(p_)) window = PExponent::zero(p_);
        if (window < d.prec()) d = d.truncated(window);
    }
}

UntiltElement::UntiltElement(std::uint32_t p, std::uint32_t n, PExponent t_prec,
                             std::vector<CharPSeries> digits)
    : UntiltElement(p, n, t_prec, std::move(digits), PExponent::integer(p, n)) {}

UntiltElement UntiltElement::zero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    return UntiltElement(p, n, t_prec, std::vector<CharPSeries>(n, CharPSeries::zero(p, t_prec)));
}

UntiltElement UntiltElement::one(std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    std::vector<CharPSeries> d(n, CharPSeries::zero(p, t_prec));
    d[0] = CharPSeries::one(p, t_prec);
    return UntiltElement(p, n, t_prec, std::move(d));
}

UntiltElement UntiltElement::from_uint(std::uint32_t value, std::uint32_t p, std::uint32_t n,
                                       const PExponent& t_prec) {
    // Teichmüller digits of an integer are not its base-p digits in general;
    // build by repeated ring addition of 1.
    if (value > 4096) throw CapExceeded("integer constant too large for digitwise construction");
    const WittPolyCache& cache = witt_cache(p, n);
    UntiltElement acc = zero(p, n, t_prec);
    UntiltElement one_el = one(p, n, t_prec);
    for (std::uint32_t i = 0; i < value; ++i) acc = untilt_add(cache, acc, one_el);
    return acc;
}

std::uint32_t UntiltElement::first_nonzero_digit() const {
    for (std::uint32_t i = 0; i < n_; ++i)
        if (!digits_[i].empty()) return i;
    return n_;
}

PExponent UntiltElement::valuation_or_prec() const {
    std::uint32_t i = first_nonzero_digit();
    if (i >= n_) return prec_;
    PExponent v = PExponent::integer(p_, i) + *digits_[i].valuation();
    return v < prec_ ? v : prec_;
}

bool UntiltElement::is_zero_at_precision() const { return first_nonzero_digit() >= n_; }

bool UntiltElement::equal_at_precision(const UntiltElement& o) const {
    check_same_ambient(*this, o);
    PExponent common = prec_ <= o.prec_ ? prec_ : o.prec_;
    PExponent one_exp = PExponent::integer(p_, 1);
    for (std::uint32_t i = 0; i < n_; ++i) {
        PExponent window = common - PExponent::integer(p_, i);
        if (!(window > PExponent::zero(p_))) break;
        CharPSeries a = window >= one_exp ? digits_[i] : digits_[i].truncated(window);
        CharPSeries b = window >= one_exp ? o.digits_[i] : o.digits_[i].truncated(window);
        if (!a.equal_at_common_precision(b)) return false;
    }
    return true;
}

std::string UntiltElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) os << " | ";
        os << digits_[i].to_string();
    }
    os << "]";
    if (prec_ < PExponent::integer(p_, n_)) os << " (mod p^" << prec_.to_string() << ")";
    return os.str();
}

UntiltElement canonicalize(const WittPolyCache& cache, const WittVector& w, std::size_t term_cap) {
    const std::uint32_t p = cache.p, n = cache.n;
    if (w.p() != p || w.length() != n) throw AmbientMismatch("Witt vector does not match the cache ambient");
    PExponent t_prec = w.component(0).prec();
    for (const auto& c : w.components())
        if (c.prec() < t_prec) t_prec = c.prec();

    std::vector<CharPSeries> digits;
    digits.reserve(n);
    WittVector cur = w;
    for (std::uint32_t i = 0; i < n; ++i) {
        auto [low, carry_sh] = split_digit(cur.component(0));
        digits.push_back(low);
        if (i + 1 == n) break;
        // cur - [low] - [t * carry_sh] + p [carry_sh] subtracts
        // ([t] - p) [carry_sh] and the extracted digit, leaving a multiple
        // of p whose division is exact thanks to p-th roots in O_F.
        WittVector teich_low = WittVector::teichmuller(low, n);
        WittVector teich_carry = WittVector::teichmuller(carry_sh.shifted(PExponent::integer(p, 1)), n);
        std::vector<CharPSeries> pc(n, CharPSeries::zero(p, low.prec()));
        if (n > 1) pc[1] = carry_sh.frobenius();
        WittVector p_carry(p, std::move(pc));

        WittVector acc = cur;
        acc = witt_sub(cache, acc, teich_low, term_cap);
        acc = witt_sub(cache, acc, teich_carry, term_cap);
        acc = witt_add(cache, acc, p_carry, term_cap);
        if (!acc.component(0).empty())
            throw Error("canonicalization did not clear the leading Witt component");
        // divide by p: acc = V(u), and the quotient has components u_j^{1/p}.
        std::vector<CharPSeries> next;
        for (std::uint32_t j = 1; j < n; ++j) next.push_back(acc.component(j).pth_root());
        next.push_back(CharPSeries::zero(p, next.back().prec()));
        cur = WittVector(p, std::move(next));
    }
    return UntiltElement(p, n, t_prec, std::move(digits));
}

namespace {

/// Lift canonical digits to the Witt carrier: sum_i [a_i] p^i = sum_i V^i([a_i^{p^i}])
/// has components (a_0, a_1^p, a_2^{p^2}, ...).
WittVector lift_digits(const UntiltElement& x) {
    std::vector<CharPSeries> comps;
    comps.push_back(x.digit(0));
    for (std::uint32_t i = 1; i < x.n(); ++i) {
        CharPSeries d = x.digit(i);
        for (std::uint32_t j = 0; j < i; ++j) d = d.frobenius();
        comps.push_back(d);
    }
    return WittVector(x.p(), std::move(comps));
}

UntiltElement with_prec(const UntiltElement& x, const PExponent& prec) {
    return UntiltElement(x.p(), x.n(), x.t_prec(), x.digits(), prec);
}

} // namespace

UntiltElement untilt_add(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap) {
    check_same_ambient(x, y);
    UntiltElement r = canonicalize(cache, witt_add(cache, lift_digits(x), lift_digits(y), term_cap), term_cap);
    PExponent prec = x.padic_prec() <= y.padic_prec() ? x.padic_prec() : y.padic_prec();
    return with_prec(r, prec);
}

UntiltElement untilt_mul(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap) {
    check_same_ambient(x, y);
    UntiltElement r = canonicalize(cache, witt_mul(cache, lift_digits(x), lift_digits(y), term_cap), term_cap);
    PExponent prec_l = x.padic_prec() + y.valuation_or_prec();
    PExponent prec_r = y.padic_prec() + x.valuation_or_prec();
    return with_prec(r, prec_l <= prec_r ? prec_l : prec_r);
}

UntiltElement untilt_neg(const WittPolyCache& cache, const UntiltElement& x, std::size_t term_cap) {
    UntiltElement r = canonicalize(cache, witt_neg(cache, lift_digits(x), term_cap), term_cap);
    return with_prec(r, x.padic_prec());
}

UntiltElement untilt_sub(const WittPolyCache& cache, const UntiltElement& x, const UntiltElement& y,
                         std::size_t term_cap) {
    return untilt_add(cache, x, untilt_neg(cache, y, term_cap), term_cap);
}

UntiltElement untilt_pow(const WittPolyCache& cache, const UntiltElement& x, std::uint64_t k,
                         std::size_t term_cap) {
    UntiltElement acc = UntiltElement::one(x.p(), x.n(), x.t_prec());
    UntiltElement base = x;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            acc = first ? base : untilt_mul(cache, acc, base, term_cap);
            first = false;
        }
        k >>= 1;
        if (k > 0) base = untilt_mul(cache, base, base, term_cap);
    }
    return acc;
}

UntiltElement untilt_mul_p_power(const UntiltElement& x, std::uint32_t k) {
    if (k == 0) return x;
    std::vector<CharPSeries> d;
    for (std::uint32_t i = 0; i < k && i < x.n(); ++i) d.push_back(CharPSeries::zero(x.p(), x.t_prec()));
    for (std::uint32_t i = 0; i + k < x.n(); ++i) d.push_back(x.digit(i));
    return UntiltElement(x.p(), x.n(), x.t_prec(), std::move(d),
                         x.padic_prec() + PExponent::integer(x.p(), k));
}

NormEstimate untilt_norm(const UntiltElement& x) {
    std::uint32_t i = x.first_nonzero_digit();
    const std::uint32_t p = x.p();
    if (i >= x.n()) {
        // below precision: bounded by the p-adic precision and the per-digit
        // t-precision windows
        PExponent bound = x.padic_prec();
        for (std::uint32_t j = 0; j < x.n(); ++j) {
            PExponent dj = PExponent::integer(p, j) + x.digit(j).prec();
            if (dj < bound) bound = dj;
        }
        return NormEstimate{NormValue::pow(bound), true};
    }
    PExponent e = PExponent::integer(p, i) + *x.digit(i).valuation();
    return NormEstimate{NormValue::pow(e), false};
}

UntiltElement sharp(const WittPolyCache& cache, const CharPSeries& f, const PExponent& t_prec,
                    std::size_t term_cap) {
    if (!f.integral()) throw Error("sharp requires an integral element; use fractions for Laurent input");
    return canonicalize(cache, WittVector::teichmuller(f.truncated(t_prec), cache.n), term_cap);
}

CharPSeries digit0(const UntiltElement& x) { return x.digit(0); }

UntiltFraction::UntiltFraction(UntiltElement num, std::uint32_t denom_pow)
    : num_(std::move(num)), den_(denom_pow) {
    // minimal k: strip common powers of p (each strip is a division by p and
    // costs one power of p-adic precision)
    while (den_ > 0 && num_.first_nonzero_digit() > 0 && !num_.is_zero_at_precision()) {
        std::vector<CharPSeries> d;
        for (std::uint32_t i = 1; i < num_.n(); ++i) d.push_back(num_.digit(i));
        d.push_back(CharPSeries::zero(num_.p(), num_.t_prec()));
        PExponent prec = num_.padic_prec() - PExponent::integer(num_.p(), 1);
        num_ = UntiltElement(num_.p(), num_.n(), num_.t_prec(), std::move(d), prec);
        --den_;
    }
    if (num_.is_zero_at_precision()) den_ = 0;
}

UntiltFraction UntiltFraction::zero(std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    return UntiltFraction(UntiltElement::zero(p, n, t_prec));
}

UntiltFraction UntiltFraction::one(std::uint32_t p, std::uint32_t n, const PExponent& t_prec) {
    return UntiltFraction(UntiltElement::one(p, n, t_prec));
}

NormEstimate UntiltFraction::norm() const {
    NormEstimate base = untilt_norm(num_);
    NormValue scale = NormValue::pow(PExponent::integer(num_.p(), -static_cast<std::int64_t>(den_)));
    return NormEstimate{base.value * scale, base.below};
}

bool UntiltFraction::equal_at_precision(const UntiltFraction& o) const {
    std::uint32_t k = std::max(den_, o.den_);
    UntiltElement a = untilt_mul_p_power(num_, k - den_);
    UntiltElement b = untilt_mul_p_power(o.num_, k - o.den_);
    return a.equal_at_precision(b);
}

std::string UntiltFraction::to_string() const {
    if (den_ == 0) return num_.to_string();
    return num_.to_string() + " / p^" + std::to_string(den_);
}

UntiltFraction frac_add(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap) {
    std::uint32_t k = std::max(x.denom_pow(), y.denom_pow());
    UntiltElement a = untilt_mul_p_power(x.numerator(), k - x.denom_pow());
    UntiltElement b = untilt_mul_p_power(y.numerator(), k - y.denom_pow());
    return UntiltFraction(untilt_add(cache, a, b, term_cap), k);
}

UntiltFraction frac_mul(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap) {
    return UntiltFraction(untilt_mul(cache, x.numerator(), y.numerator(), term_cap),
                          x.denom_pow() + y.denom_pow());
}

UntiltFraction frac_neg(const WittPolyCache& cache, const UntiltFraction& x, std::size_t term_cap) {
    return UntiltFraction(untilt_neg(cache, x.numerator(), term_cap), x.denom_pow());
}

UntiltFraction frac_sub(const WittPolyCache& cache, const UntiltFraction& x, const UntiltFraction& y,
                        std::size_t term_cap) {
    return frac_add(cache, x, frac_neg(cache, y, term_cap), term_cap);
}

UntiltFraction frac_pow(const WittPolyCache& cache, const UntiltFraction& x, std::uint64_t k,
                        std::size_t term_cap) {
    UntiltFraction acc = UntiltFraction::one(x.p(), x.numerator().n(), x.numerator().t_prec());
    UntiltFraction base = x;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            acc = first ? base : frac_mul(cache, acc, base, term_cap);
            first = false;
        }
        k >>= 1;
        if (k > 0) base = frac_mul(cache, base, base, term_cap);
    }
    return acc;
}

UntiltFraction frac_inverse(const WittPolyCache& cache, const UntiltFraction& x, std::size_t term_cap) {
    const UntiltElement& u = x.numerator();
    const std::uint32_t p = u.p(), n = u.n();
    std::uint32_t i0 = u.first_nonzero_digit();
    if (i0 >= n) throw BelowPrecision("inverse of an element that vanishes at current precision");
    const CharPSeries& a = u.digit(i0);
    PExponent v = *a.valuation();
    std::uint32_t lead = a.terms().begin()->second;
    std::uint32_t lead_inv = 1;
    while ((lead_inv * lead) % p != 1) ++lead_inv;

    // m = p^{i0} sharp(lead t^v) is the dominant monomial of x's numerator;
    // its inverse is sharp(lead^{-1} t^{1-v}) / p^{i0+1} (via sharp(t) = p),
    // or just sharp(lead^{-1}) / p^{i0} when the digit is a unit.
    CharPSeries co_mono = v.is_zero()
        ? CharPSeries::constant(p, lead_inv, u.t_prec())
        : CharPSeries::monomial(p, PExponent::integer(p, 1) - v, lead_inv, u.t_prec());
    UntiltFraction m_inv(sharp(cache, co_mono, u.t_prec(), term_cap), v.is_zero() ? i0 : i0 + 1);

    UntiltFraction unit = frac_mul(cache, UntiltFraction(u), m_inv, term_cap); // 1 + w, |w| < 1
    UntiltFraction one = UntiltFraction::one(p, n, u.t_prec());
    UntiltFraction w = frac_sub(cache, unit, one, term_cap);
    UntiltFraction acc = one;
    UntiltFraction pw = one;
    std::size_t guard = 0;
    while (true) {
        pw = frac_mul(cache, pw, frac_neg(cache, w, term_cap), term_cap);
        if (pw.is_zero_at_precision()) break;
        acc = frac_add(cache, acc, pw, term_cap);
        if (++guard > 512)
            throw CapExceeded("untilt inversion: geometric series did not settle within the iteration cap");
    }
    // x^{-1} = p^{denom} * m^{-1} * (1+w)^{-1}
    UntiltFraction inv_unit = frac_mul(cache, m_inv, acc, term_cap);
    UntiltElement scaled = untilt_mul_p_power(inv_unit.numerator(), x.denom_pow());
    return UntiltFraction(scaled, inv_unit.denom_pow());
}

} // namespace perfectoid
