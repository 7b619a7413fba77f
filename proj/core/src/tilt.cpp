#include "perfectoid/tilt.hpp"

#include <sstream>

namespace perfectoid {

MonomialIdeal MonomialIdeal::zero_ideal(std::uint32_t p, std::uint32_t d) {
    MonomialIdeal I;
    I.kind_ = Kind::zero;
    I.p_ = p;
    I.d_ = d;
    return I;
}

MonomialIdeal MonomialIdeal::principal(std::uint32_t p, std::uint32_t d, std::uint32_t var,
                                       const PExponent& a) {
    if (!(PExponent::zero(p) < a)) throw Error("principal bound must be positive (the unit ideal is not an ideal here)");
    std::map<std::uint32_t, VarBound> b;
    b.emplace(var, VarBound{BoundType::principal, a});
    return with_bounds(p, d, std::move(b));
}

MonomialIdeal MonomialIdeal::augmentation(std::uint32_t p, std::uint32_t d, std::uint32_t var) {
    std::map<std::uint32_t, VarBound> b;
    b.emplace(var, VarBound{BoundType::augmentation, PExponent::zero(p)});
    return with_bounds(p, d, std::move(b));
}

MonomialIdeal MonomialIdeal::with_bounds(std::uint32_t p, std::uint32_t d,
                                         std::map<std::uint32_t, VarBound> bounds) {
    if (bounds.empty()) throw Error("bounds presentation needs at least one variable bound");
    for (const auto& [var, b] : bounds) {
        if (var >= d) throw AmbientMismatch("bound on variable " + std::to_string(var) + " outside ambient d");
        if (b.type == BoundType::principal && !(PExponent::zero(p) < b.a))
            throw Error("principal bound must be positive");
    }
    MonomialIdeal I;
    I.kind_ = Kind::bounds;
    I.p_ = p;
    I.d_ = d;
    I.bounds_ = std::move(bounds);
    return I;
}

bool MonomialIdeal::contains_exponent(const MultiExp& e) const {
    if (e.size() != d_) throw AmbientMismatch("exponent arity does not match the ideal ambient");
    if (kind_ == Kind::zero) return false;
    for (const auto& [var, b] : bounds_) {
        const PExponent& x = e[var];
        if (b.type == BoundType::principal) {
            if (x < b.a) return false;
        } else {
            if (!(PExponent::zero(p_) < x)) return false;
        }
    }
    return true;
}

bool MonomialIdeal::contains(const GaussElement& f) const {
    for (const auto& [e, c] : f.terms())
        if (!contains_exponent(e)) return false;
    return true;
}

bool MonomialIdeal::is_prime() const {
    if (kind_ == Kind::zero) return true; // the ambient Gauss algebra is a domain
    return bounds_.size() == 1 && bounds_.begin()->second.type == BoundType::augmentation;
}

bool MonomialIdeal::is_spectrally_reduced() const {
    if (kind_ == Kind::zero) return true; // kernel of the Gauss norm
    for (const auto& [var, b] : bounds_)
        if (b.type == BoundType::principal) return false;
    return true;
}

bool MonomialIdeal::includes(const MonomialIdeal& other) const {
    if (p_ != other.p_ || d_ != other.d_) throw AmbientMismatch("ideals from different ambients");
    if (other.kind_ == Kind::zero) return true;
    if (kind_ == Kind::zero) return false;
    // every bound of *this must be implied by other's bound on the same variable
    for (const auto& [var, b] : bounds_) {
        auto it = other.bounds_.find(var);
        if (it == other.bounds_.end()) return false;
        const VarBound& ob = it->second;
        if (b.type == BoundType::augmentation) {
            continue; // both principal(a>0) and augmentation imply exponent > 0
        }
        if (ob.type != BoundType::principal || ob.a < b.a) return false;
    }
    return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
    if (p_ != o.p_ || d_ != o.d_ || kind_ != o.kind_) return false;
    if (kind_ == Kind::zero) return true;
    if (bounds_.size() != o.bounds_.size()) return false;
    for (const auto& [var, b] : bounds_) {
        auto it = o.bounds_.find(var);
        if (it == o.bounds_.end()) return false;
        if (it->second.type != b.type) return false;
        if (b.type == BoundType::principal && it->second.a != b.a) return false;
    }
    return true;
}

std::string MonomialIdeal::to_string() const {
    if (kind_ == Kind::zero) return "(0)";
    std::ostringstream os;
    bool first = true;
    os << "<";
    for (const auto& [var, b] : bounds_) {
        if (!first) os << " & ";
        first = false;
        if (b.type == BoundType::principal)
            os << "X" << (var + 1) << "^" << b.a.to_string();
        else
            os << "m_X" << (var + 1);
    }
    os << ">";
    return os.str();
}

MonomialIdeal ideal_tilt(const MonomialIdeal& I) {
    if (I.is_zero()) return I;
    for (const auto& [var, b] : I.bounds())
        if (b.type == MonomialIdeal::BoundType::principal)
            return MonomialIdeal::zero_ideal(I.p(), I.d());
    return I;
}

MonomialIdeal ideal_sharp(const MonomialIdeal& J) {
    if (!J.is_spectrally_reduced())
        throw Error("ideal_sharp is defined on spectrally reduced monomial ideals only, got " + J.to_string());
    return J;
}

MonomialIdeal spectral_radical(const MonomialIdeal& I) {
    if (I.is_zero()) return I;
    std::map<std::uint32_t, MonomialIdeal::VarBound> out;
    for (const auto& [var, b] : I.bounds())
        out.emplace(var, MonomialIdeal::VarBound{MonomialIdeal::BoundType::augmentation, PExponent::zero(I.p())});
    return MonomialIdeal::with_bounds(I.p(), I.d(), std::move(out));
}

std::optional<std::pair<MultiExp, MultiExp>> primality_witness(const MonomialIdeal& I,
                                                               std::uint32_t grid, std::uint32_t kmax) {
    if (I.is_zero()) return std::nullopt;
    const std::uint32_t p = I.p(), d = I.d();
    // enumerate candidate monomial exponents per variable
    std::vector<PExponent> candidates;
    candidates.push_back(PExponent::zero(p));
    for (std::uint32_t j = 1; j <= grid; ++j)
        for (std::uint32_t k = 0; k <= kmax; ++k) candidates.push_back(PExponent(p, j, k));
    std::vector<MultiExp> monos;
    MultiExp cur(d, PExponent::zero(p));
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t i) {
        if (i == d) {
            monos.push_back(cur);
            return;
        }
        for (const auto& c : candidates) {
            cur[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    MultiExp prod(d, PExponent::zero(p));
    for (const auto& u : monos) {
        if (I.contains_exponent(u)) continue;
        for (const auto& v : monos) {
            if (I.contains_exponent(v)) continue;
            for (std::uint32_t i = 0; i < d; ++i) prod[i] = u[i] + v[i];
            if (I.contains_exponent(prod)) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

TiltSequence::TiltSequence(const WittPolyCache& cache, CharPSeries base, PExponent t_prec,
                           std::size_t term_cap)
    : cache_(cache), base_(std::move(base)), t_prec_(t_prec), term_cap_(term_cap) {
    if (!base_.integral()) throw Error("tilt sequences are materialized for integral base elements");
}

UntiltElement TiltSequence::view(std::uint32_t m) const {
    CharPSeries root = base_;
    for (std::uint32_t i = 0; i < m; ++i) root = root.pth_root();
    return sharp(cache_, root, t_prec_, term_cap_);
}

bool TiltSequence::compatible(std::uint32_t m) const {
    UntiltElement hi = view(m + 1);
    UntiltElement lo = view(m);
    return untilt_pow(cache_, hi, cache_.p, term_cap_).equal_at_precision(lo);
}

TiltAddReport tilt_add_limit(const WittPolyCache& cache, const CharPSeries& f, const CharPSeries& g,
                             std::uint32_t n, std::uint32_t m_max, const PExponent& t_prec,
                             std::size_t term_cap) {
    if (f.p() != cache.p || g.p() != cache.p) throw AmbientMismatch("operands over the wrong prime");
    TiltSequence sf(cache, f, t_prec, term_cap);
    TiltSequence sg(cache, g, t_prec, term_cap);
    TiltAddReport report{
        {},
        std::nullopt,
        sharp(cache, [&] {
            CharPSeries s = f + g;
            for (std::uint32_t i = 0; i < n; ++i) s = s.pth_root();
            return s;
        }(), t_prec, term_cap),
        false};

    std::uint64_t pm = 1;
    for (std::uint32_t m = 0; m <= m_max; ++m) {
        UntiltElement sum = untilt_add(cache, sf.view(n + m), sg.view(n + m), term_cap);
        report.partial.push_back(untilt_pow(cache, sum, pm, term_cap));
        pm *= cache.p;
    }
    for (std::uint32_t m = 0; m <= m_max; ++m) {
        bool stable = true;
        for (std::uint32_t k = m; k + 1 <= m_max; ++k)
            if (!report.partial[k].equal_at_precision(report.partial[k + 1])) {
                stable = false;
                break;
            }
        if (stable) {
            report.stabilized_at = m;
            break;
        }
    }
    if (report.stabilized_at)
        report.matches_expected = report.partial.back().equal_at_precision(report.expected);
    return report;
}

SeminormDescriptor seminorm_tilt(const SeminormDescriptor& phi) {
    if (phi.side() != CoefSide::untilt)
        throw AmbientMismatch("seminorm_tilt expects a descriptor on the untilt side");
    if (!phi.is_gauss_radius() && !phi.is_eval_point())
        throw Error("descriptor family '" + phi.name() + "' is not supported by the tilting map");
    return phi.with_side(CoefSide::charp);
}

SeminormDescriptor seminorm_sharp(const SeminormDescriptor& phi) {
    if (phi.side() != CoefSide::charp)
        throw AmbientMismatch("seminorm_sharp expects a descriptor on the tilt side");
    if (!phi.is_gauss_radius() && !phi.is_eval_point())
        throw Error("descriptor family '" + phi.name() + "' is not supported by the tilting map");
    return phi.with_side(CoefSide::untilt);
}

UntiltFraction sharp_fraction(const WittPolyCache& cache, const CharPSeries& g, const PExponent& t_prec,
                              std::size_t term_cap) {
    if (g.integral()) return UntiltFraction(sharp(cache, g, t_prec, term_cap));
    // g = (g t^k) / t^k with g t^k integral; sharp(t) = p.
    PExponent v = *g.valuation();
    std::int64_t k = 0;
    PExponent shift = PExponent::zero(g.p());
    while (shift + v < PExponent::zero(g.p())) {
        shift = shift + PExponent::integer(g.p(), 1);
        ++k;
    }
    return UntiltFraction(sharp(cache, g.shifted(shift), t_prec, term_cap), static_cast<std::uint32_t>(k));
}

GaussElement approx_construct(const GaussElement& f, const NormValue& eps, std::size_t term_cap) {
    if (f.side() != CoefSide::untilt)
        throw AmbientMismatch("approx_construct expects an untilt-coefficient element");
    const std::uint32_t p = f.p();
    GaussElement g(CoefSide::charp, p, f.d(), 1, f.t_prec());
    for (const auto& [e, c] : f.terms()) {
        NormEstimate nm = c.norm();
        if (nm.below) {
            if (eps.is_zero() || !(nm.value < eps))
                throw BelowPrecision("coefficient norm is below precision but not provably < eps");
            continue;
        }
        if (nm.value < eps || nm.value.is_zero()) continue;
        const UntiltFraction& fr = c.as_untilt();
        const UntiltElement& num = fr.numerator();
        std::uint32_t i0 = num.first_nonzero_digit();
        const CharPSeries& digit = num.digit(i0);
        // dominant-digit monomial: |t^{i0 + v - k}|^sharp = |c| exactly
        PExponent expo = PExponent::integer(p, static_cast<std::int64_t>(i0) -
                                                   static_cast<std::int64_t>(fr.denom_pow())) +
                         *digit.valuation();
        std::uint32_t lead = digit.terms().begin()->second;
        g.add_term(e, FieldElem(CharPSeries::monomial(p, expo, lead, f.t_prec())));
        if (g.terms().size() > term_cap) throw TruncationOverflow("approximation support exceeds the term cap");
    }
    return g;
}

GaussElement gauss_sharp(const GaussElement& g, std::uint32_t n, std::size_t term_cap) {
    if (g.side() != CoefSide::charp)
        throw AmbientMismatch("gauss_sharp expects a tilt-side element");
    const auto& cache = witt_cache(g.p(), n);
    GaussElement out(CoefSide::untilt, g.p(), g.d(), n, g.t_prec());
    for (const auto& [e, c] : g.terms())
        out.add_term(e, FieldElem(sharp_fraction(cache, c.as_charp(), g.t_prec(), term_cap)));
    return out;
}

std::vector<ApproxVerifyRow> approx_verify(const WittPolyCache& cache, const UntiltFraction& f,
                                           const CharPSeries& g, const NormValue& eps,
                                           std::uint32_t phi_count, std::size_t term_cap) {
    UntiltFraction gs = sharp_fraction(cache, g, f.numerator().t_prec(), term_cap);
    UntiltFraction diff = frac_sub(cache, f, gs, term_cap);
    NormEstimate lhs = diff.norm();
    NormEstimate gn = gs.norm();
    NormValue pinv = NormValue::pow(PExponent::integer(cache.p, 1));
    NormValue rhs = pinv * NormValue::max(gn.value, eps);
    std::vector<ApproxVerifyRow> rows;
    for (std::uint32_t i = 0; i < std::max<std::uint32_t>(phi_count, 1); ++i) {
        // the implemented M(R) family on the field model is its absolute value
        bool pass = lhs.below ? (lhs.value <= rhs || lhs.value.is_zero())
                              : lhs.value <= rhs;
        rows.push_back(ApproxVerifyRow{"abs", lhs.to_string(), rhs.to_string(), pass});
    }
    return rows;
}

} // namespace perfectoid
