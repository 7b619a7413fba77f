#include "perfectoid/values.hpp"

#include <numeric>

namespace perfectoid {

namespace {

using i128 = __int128;

std::int64_t checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw ArithmeticOverflow(std::string(what) + " exceeds the 64-bit exponent carrier");
    return static_cast<std::int64_t>(v);
}

/// p^k as 128-bit, guarded.
i128 pow_p(std::uint32_t p, std::uint32_t k) {
    i128 r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        r *= p;
        if (r > (i128(1) << 100))
            throw ArithmeticOverflow("p^" + std::to_string(k) + " exceeds the exponent carrier");
    }
    return r;
}

void check_same_prime(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw AmbientMismatch("exponents with ambient primes " + std::to_string(a) + " and " + std::to_string(b));
}

} // namespace

bool is_supported_prime(std::uint32_t p) { return p == 2 || p == 3 || p == 5; }

PExponent::PExponent(std::uint32_t p, std::int64_t num, std::uint32_t kpow)
    : p_(p), num_(num), kpow_(kpow) {
    if (p < 2) throw UnsupportedConfig("prime must be >= 2, got " + std::to_string(p));
    normalize();
}

void PExponent::normalize() {
    if (num_ == 0) {
        kpow_ = 0;
        return;
    }
    while (kpow_ > 0 && num_ % static_cast<std::int64_t>(p_) == 0) {
        num_ /= static_cast<std::int64_t>(p_);
        --kpow_;
    }
}

PExponent PExponent::operator+(const PExponent& o) const {
    check_same_prime(p_, o.p_);
    std::uint32_t k = std::max(kpow_, o.kpow_);
    i128 a = i128(num_) * pow_p(p_, k - kpow_);
    i128 b = i128(o.num_) * pow_p(p_, k - o.kpow_);
    return PExponent(p_, checked_i64(a + b, "exponent sum"), k);
}

PExponent PExponent::operator-(const PExponent& o) const { return *this + (-o); }

PExponent PExponent::operator-() const {
    PExponent r = *this;
    r.num_ = checked_i64(-i128(num_), "exponent negation");
    return r;
}

PExponent PExponent::operator*(const PExponent& o) const {
    check_same_prime(p_, o.p_);
    i128 n = i128(num_) * i128(o.num_);
    std::uint32_t k = kpow_ + o.kpow_;
    return PExponent(p_, checked_i64(n, "exponent product"), k);
}

PExponent PExponent::scaled_by_p(std::int32_t shift) const {
    if (num_ == 0) return *this;
    if (shift >= 0) {
        std::int32_t s = shift;
        std::uint32_t k = kpow_;
        i128 n = num_;
        // absorb into the stored denominator first
        std::uint32_t absorb = std::min<std::uint32_t>(k, static_cast<std::uint32_t>(s));
        k -= absorb;
        s -= static_cast<std::int32_t>(absorb);
        n *= pow_p(p_, static_cast<std::uint32_t>(s));
        return PExponent(p_, checked_i64(n, "exponent scaling"), k);
    }
    return PExponent(p_, num_, kpow_ + static_cast<std::uint32_t>(-shift));
}

std::optional<PExponent> PExponent::divided_exact(std::int64_t m) const {
    if (m == 0) throw Error("division of exponent by zero");
    // e/m in Z[1/p] iff m's non-p part divides num.
    std::int64_t mm = m;
    std::uint32_t extra = 0;
    bool neg = mm < 0;
    if (neg) mm = -mm;
    while (mm % static_cast<std::int64_t>(p_) == 0) {
        mm /= static_cast<std::int64_t>(p_);
        ++extra;
    }
    if (mm == 0) return std::nullopt;
    if (num_ % mm != 0) return std::nullopt;
    std::int64_t n = num_ / mm;
    if (neg) n = -n;
    return PExponent(p_, n, kpow_ + extra);
}

int PExponent::compare(const PExponent& o) const {
    check_same_prime(p_, o.p_);
    std::uint32_t k = std::max(kpow_, o.kpow_);
    i128 a = i128(num_) * pow_p(p_, k - kpow_);
    i128 b = i128(o.num_) * pow_p(p_, k - o.kpow_);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

std::string PExponent::to_string() const {
    if (kpow_ == 0) return std::to_string(num_);
    i128 den = pow_p(p_, kpow_);
    return std::to_string(num_) + "/" + std::to_string(static_cast<std::int64_t>(den));
}

RationalExponent::RationalExponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational exponent with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

RationalExponent RationalExponent::from(const PExponent& e) {
    i128 den = 1;
    for (std::uint32_t i = 0; i < e.kpow(); ++i) den *= e.prime();
    return RationalExponent(e.num(), checked_i64(den, "exponent denominator"));
}

bool RationalExponent::in_value_group(std::uint32_t p) const {
    std::int64_t d = den_;
    while (d % static_cast<std::int64_t>(p) == 0) d /= static_cast<std::int64_t>(p);
    return d == 1;
}

PExponent RationalExponent::to_pexponent(std::uint32_t p) const {
    std::int64_t d = den_;
    std::uint32_t k = 0;
    while (d % static_cast<std::int64_t>(p) == 0) {
        d /= static_cast<std::int64_t>(p);
        ++k;
    }
    if (d != 1)
        throw Error("rational exponent " + to_string() + " is not in Z[1/" + std::to_string(p) + "]");
    return PExponent(p, num_, k);
}

RationalExponent RationalExponent::divided(std::int64_t m) const {
    if (m == 0) throw Error("division of exponent by zero");
    i128 d = i128(den_) * (m < 0 ? -i128(m) : i128(m));
    std::int64_t n = m < 0 ? checked_i64(-i128(num_), "exponent division") : num_;
    return RationalExponent(n, checked_i64(d, "exponent division"));
}

int RationalExponent::compare(const RationalExponent& o) const {
    i128 a = i128(num_) * i128(o.den_);
    i128 b = i128(o.num_) * i128(den_);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

std::string RationalExponent::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

NormValue NormValue::zero(std::uint32_t p) {
    NormValue v;
    v.zero_ = true;
    v.exp_ = PExponent::zero(p);
    return v;
}

NormValue NormValue::pow(const PExponent& e) {
    NormValue v;
    v.zero_ = false;
    v.exp_ = e;
    return v;
}

const PExponent& NormValue::exponent() const {
    if (zero_) throw Error("exponent of the zero norm value");
    return exp_;
}

NormValue NormValue::operator*(const NormValue& o) const {
    check_same_prime(exp_.prime(), o.exp_.prime());
    if (zero_ || o.zero_) return zero(exp_.prime());
    return pow(exp_ + o.exp_);
}

NormValue NormValue::max(const NormValue& a, const NormValue& b) { return a.compare(b) >= 0 ? a : b; }
NormValue NormValue::min(const NormValue& a, const NormValue& b) { return a.compare(b) <= 0 ? a : b; }

NormValue NormValue::pow_int(std::int64_t k) const {
    if (zero_) {
        if (k <= 0) throw Error("0 cannot be raised to a nonpositive power");
        return *this;
    }
    return pow(exp_ * PExponent::integer(exp_.prime(), k));
}

NormValue NormValue::pow_exponent(const PExponent& e) const {
    if (zero_) {
        if (!((e.num() > 0))) throw Error("0 cannot be raised to a nonpositive power");
        return *this;
    }
    return pow(exp_ * e);
}

int NormValue::compare(const NormValue& o) const {
    check_same_prime(exp_.prime(), o.exp_.prime());
    if (zero_ && o.zero_) return 0;
    if (zero_) return -1;
    if (o.zero_) return 1;
    // p^{-e1} < p^{-e2} iff e1 > e2
    return -exp_.compare(o.exp_);
}

std::string NormValue::to_string() const {
    if (zero_) return "0";
    if (exp_.is_zero()) return "1";
    PExponent neg = -exp_;
    return std::to_string(exp_.prime()) + "^(" + neg.to_string() + ")";
}

NormValueQ NormValueQ::zero(std::uint32_t p) {
    NormValueQ v;
    v.p_ = p;
    v.zero_ = true;
    return v;
}

NormValueQ NormValueQ::from(const NormValue& v) {
    if (v.is_zero()) return zero(v.prime());
    return pow(v.prime(), RationalExponent::from(v.exponent()));
}

NormValueQ NormValueQ::pow(std::uint32_t p, const RationalExponent& e) {
    NormValueQ v;
    v.p_ = p;
    v.zero_ = false;
    v.exp_ = e;
    return v;
}

const RationalExponent& NormValueQ::exponent() const {
    if (zero_) throw Error("exponent of the zero norm value");
    return exp_;
}

NormValue NormValueQ::to_norm_value() const {
    if (zero_) return NormValue::zero(p_);
    return NormValue::pow(exp_.to_pexponent(p_));
}

int NormValueQ::compare(const NormValueQ& o) const {
    check_same_prime(p_, o.p_);
    if (zero_ && o.zero_) return 0;
    if (zero_) return -1;
    if (o.zero_) return 1;
    return -exp_.compare(o.exp_);
}

std::string NormValueQ::to_string() const {
    if (zero_) return "0";
    if (exp_.num() == 0) return "1";
    RationalExponent neg(-exp_.num(), exp_.den());
    std::string s = std::to_string(p_) + "^(" + neg.to_string() + ")";
    if (!in_value_group()) s += " [outside p-power value group]";
    return s;
}

NormValueQ norm_nth_root(const NormValue& a, std::int64_t n) {
    return norm_nth_root(NormValueQ::from(a), n);
}

NormValueQ norm_nth_root(const NormValueQ& a, std::int64_t n) {
    if (n < 1) throw Error("n-th root requires n >= 1");
    if (a.is_zero()) return a;
    return NormValueQ::pow(a.prime(), a.exponent().divided(n));
}

} // namespace perfectoid
