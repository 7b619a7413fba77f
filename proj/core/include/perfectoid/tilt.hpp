#pragma once

#include <optional>

#include "perfectoid/gauss.hpp"

namespace perfectoid {

/// Symbolic closed monomial ideal of the d-variable perfected Gauss algebra.
/// Either the zero ideal or a conjunction of per-variable bounds:
///   principal(a):  every term exponent in that variable is >= a (a > 0)
///   augmentation:  every term exponent in that variable is > 0
/// (the perfected closure <X^{a/p^k} : k>). Membership is decidable per term.
class MonomialIdeal {
public:
    enum class Kind { zero, bounds };
    enum class BoundType { principal, augmentation };
    struct VarBound {
        BoundType type;
        PExponent a; // only meaningful for principal
    };

    static MonomialIdeal zero_ideal(std::uint32_t p, std::uint32_t d);
    static MonomialIdeal principal(std::uint32_t p, std::uint32_t d, std::uint32_t var, const PExponent& a);
    static MonomialIdeal augmentation(std::uint32_t p, std::uint32_t d, std::uint32_t var);
    static MonomialIdeal with_bounds(std::uint32_t p, std::uint32_t d,
                                     std::map<std::uint32_t, VarBound> bounds);

    Kind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    const std::map<std::uint32_t, VarBound>& bounds() const { return bounds_; }

    bool is_zero() const { return kind_ == Kind::zero; }

    bool contains_exponent(const MultiExp& e) const;
    /// Every term of f satisfies the bounds (the zero element is in every ideal).
    bool contains(const GaussElement& f) const;

    /// Prime among the supported presentations: the zero ideal (the ambient
    /// algebra is a domain) or a single augmentation bound.
    bool is_prime() const;
    /// Kernel of a bounded power-multiplicative seminorm: the zero ideal or
    /// any conjunction of augmentation bounds. Principal bounds never qualify
    /// (X^{a/p} witnesses failure of radicality).
    bool is_spectrally_reduced() const;

    /// other ⊆ this, decided boundwise.
    bool includes(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& o) const;
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Kind kind_ = Kind::zero;
    std::uint32_t p_ = 2, d_ = 1;
    std::map<std::uint32_t, VarBound> bounds_;
};

/// I -> I_flat: membership of all f^{(n)} forces exponents >= a p^n for a
/// principal bound, which empties the ideal; augmentation bounds are stable
/// under p-th roots and survive unchanged.
MonomialIdeal ideal_tilt(const MonomialIdeal& I);

/// J -> J_sharp, inverse of ideal_tilt on spectrally reduced monomial ideals.
MonomialIdeal ideal_sharp(const MonomialIdeal& J);

/// Smallest spectrally reduced monomial ideal containing I.
MonomialIdeal spectral_radical(const MonomialIdeal& I);

/// Bounded search for a primality counterexample: monomials u, v not in I
/// with uv in I. Exponents are drawn from {j / p^k : j <= grid, k <= kmax}.
std::optional<std::pair<MultiExp, MultiExp>> primality_witness(const MonomialIdeal& I,
                                                               std::uint32_t grid, std::uint32_t kmax);

/// The compatible p-power-root sequence of a tilt element: views
/// f^{(m)} = sharp(pth_root^m(f)) in the untilt model, materialized on demand.
class TiltSequence {
public:
    TiltSequence(const WittPolyCache& cache, CharPSeries base, PExponent t_prec,
                 std::size_t term_cap = kDefaultTermCap);

    const CharPSeries& base() const { return base_; }
    UntiltElement view(std::uint32_t m) const;
    /// (f^{(m+1)})^p == f^{(m)} at tracked precision.
    bool compatible(std::uint32_t m) const;

private:
    const WittPolyCache& cache_;
    CharPSeries base_;
    PExponent t_prec_;
    std::size_t term_cap_;
};

/// One step of the tilt addition formula at index n: the sequence
/// s_m = (f^{(n+m)} + g^{(n+m)})^{p^m} for m = 0..m_max, its stabilization
/// index (first m from which all later terms agree mod p^wittlen at tracked
/// precision), and the comparison against sharp(pth_root^n(f + g)).
struct TiltAddReport {
    std::vector<UntiltElement> partial;
    std::optional<std::uint32_t> stabilized_at;
    UntiltElement expected;
    bool matches_expected;
};
TiltAddReport tilt_add_limit(const WittPolyCache& cache, const CharPSeries& f, const CharPSeries& g,
                             std::uint32_t n, std::uint32_t m_max, const PExponent& t_prec,
                             std::size_t term_cap = kDefaultTermCap);

/// phi -> phi_flat on descriptors: identical radius / point data read on the
/// other side (point coordinates are stored as tilt data already).
SeminormDescriptor seminorm_tilt(const SeminormDescriptor& phi);
SeminormDescriptor seminorm_sharp(const SeminormDescriptor& phi);

/// sharp extended to Laurent tilt elements: sharp(g) = sharp(g t^k) / p^k.
UntiltFraction sharp_fraction(const WittPolyCache& cache, const CharPSeries& g, const PExponent& t_prec,
                              std::size_t term_cap = kDefaultTermCap);

/// Per-term tilt approximation of an untilt-coefficient Gauss element: every
/// coefficient of norm >= eps is replaced by the tilt monomial matching its
/// dominant digit (so norms agree exactly), smaller coefficients are dropped.
/// For every Gauss radius r <= 1, either phi_r(f) = phi_r(g^sharp) or both
/// sides are < eps.
GaussElement approx_construct(const GaussElement& f, const NormValue& eps,
                              std::size_t term_cap = kDefaultTermCap);

/// Apply the coefficientwise sharp map to a tilt-side Gauss element.
GaussElement gauss_sharp(const GaussElement& g, std::uint32_t n, std::size_t term_cap = kDefaultTermCap);

/// Verify the approximation inequality phi(f - g^sharp) <= p^{-1} max(phi(g^sharp), eps)
/// for each seminorm in the test set (the implemented family on the model
/// field is its absolute value; entries are labelled accordingly).
struct ApproxVerifyRow {
    std::string phi_name;
    std::string lhs;
    std::string rhs;
    bool pass;
};
std::vector<ApproxVerifyRow> approx_verify(const WittPolyCache& cache, const UntiltFraction& f,
                                           const CharPSeries& g, const NormValue& eps,
                                           std::uint32_t phi_count = 1,
                                           std::size_t term_cap = kDefaultTermCap);

} // namespace perfectoid
