#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "perfectoid/field.hpp"

namespace perfectoid {

using MultiExp = std::vector<PExponent>;

/// Finite-support element of the perfected Gauss algebra
/// K<X_1^{1/p^infty}, .., X_d^{1/p^infty}> over either coefficient field.
/// Exponents are componentwise >= 0; zero coefficients are never stored.
class GaussElement {
public:
    GaussElement(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n, PExponent t_prec);

    static GaussElement zero(CoefSide side, std::uint32_t p, std::uint32_t d, std::uint32_t n,
                             const PExponent& t_prec);
    static GaussElement constant(const FieldElem& c, std::uint32_t d);
    static GaussElement monomial(const FieldElem& c, const MultiExp& e);

    CoefSide side() const { return side_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint32_t witt_len() const { return n_; }
    const PExponent& t_prec() const { return t_prec_; }
    const std::map<MultiExp, FieldElem>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const MultiExp& e, const FieldElem& c);
    FieldElem coeff_at(const MultiExp& e) const;
    FieldElem constant_coeff() const;

    GaussElement add(const GaussElement& o) const;
    GaussElement sub(const GaussElement& o) const;
    GaussElement mul(const GaussElement& o, std::size_t term_cap = kDefaultTermCap) const;
    GaussElement neg() const;
    GaussElement pow(std::uint64_t k, std::size_t term_cap = kDefaultTermCap) const;

    bool equal_at_precision(const GaussElement& o) const;
    std::string to_string() const;

private:
    CoefSide side_;
    std::uint32_t p_, d_, n_;
    PExponent t_prec_;
    std::map<MultiExp, FieldElem> terms_;
};

/// A member of one of the implemented seminorm families. Every descriptor
/// evaluates to a bounded multiplicative (or at least power-multiplicative)
/// seminorm on its declared ring; boundedness is enforced at construction
/// (radii and point coordinates of norm <= 1 on Gauss algebras).
class SeminormDescriptor {
public:
    struct GaussRadius {
        std::vector<NormValue> r;
    };
    struct EvalPoint {
        std::vector<CharPSeries> coords; // tilt data; realized per side
    };
    struct ProductCoordinate {
        std::size_t index;
    };
    struct CustomTable {
        std::map<std::string, NormValue> values; // keyed by element rendering
    };

    static SeminormDescriptor gauss_radius(CoefSide side, std::vector<NormValue> r);
    /// The Gauss norm itself (all radii 1).
    static SeminormDescriptor gauss_norm(CoefSide side, std::uint32_t p, std::uint32_t d);
    static SeminormDescriptor eval_point(CoefSide side, std::vector<CharPSeries> coords,
                                         const NormValue& radius_bound);
    static SeminormDescriptor product_coordinate(CoefSide side, std::size_t index);
    static SeminormDescriptor custom_table(CoefSide side, std::map<std::string, NormValue> values);

    CoefSide side() const { return side_; }
    const std::string& name() const { return name_; }

    bool is_gauss_radius() const { return std::holds_alternative<GaussRadius>(data_); }
    bool is_eval_point() const { return std::holds_alternative<EvalPoint>(data_); }
    bool is_product_coordinate() const { return std::holds_alternative<ProductCoordinate>(data_); }
    bool is_custom_table() const { return std::holds_alternative<CustomTable>(data_); }

    const GaussRadius& gauss_radius_data() const { return std::get<GaussRadius>(data_); }
    const EvalPoint& eval_point_data() const { return std::get<EvalPoint>(data_); }
    const ProductCoordinate& product_coordinate_data() const { return std::get<ProductCoordinate>(data_); }
    const CustomTable& custom_table_data() const { return std::get<CustomTable>(data_); }

    /// Same family data on the other side; the tilting map on descriptors.
    SeminormDescriptor with_side(CoefSide side) const;

private:
    SeminormDescriptor() = default;
    CoefSide side_ = CoefSide::charp;
    std::string name_;
    std::variant<GaussRadius, EvalPoint, ProductCoordinate, CustomTable> data_;
};

/// Evaluate a Gauss-family descriptor on an element: radius descriptors give
/// max over terms of |a_nu| r^nu, point descriptors substitute and take the
/// coefficient-field norm.
NormEstimate gauss_eval(const SeminormDescriptor& phi, const GaussElement& f);

/// Result of the finite-stage spectral seminorm computation: the running
/// minimum of the root sequence a_n = |f^n|^{1/n} is a certified upper bound
/// for |f|_spc, exact when the sequence stabilizes (and always exact for
/// power-multiplicative norms).
struct SpectralCertificate {
    NormValueQ bound;
    std::vector<NormValueQ> roots;        // a_n, n = 1..N (upper bounds where flagged)
    std::vector<bool> below_precision;    // per entry
    std::vector<NormValueQ> running_min;  // monotone nonincreasing certificate
    std::optional<std::uint32_t> zero_at; // first n with f^n = 0 exactly
};

template <class Elem, class MulFn, class NormFn>
SpectralCertificate spectral_seminorm(const Elem& f, std::uint32_t max_n, MulFn mul, NormFn norm) {
    if (max_n < 1) throw Error("spectral seminorm needs max_n >= 1");
    SpectralCertificate cert;
    Elem power = f;
    bool have = false;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        if (n > 1) power = mul(power, f);
        NormEstimate est = norm(power);
        NormValueQ root = norm_nth_root(NormValueQ::from(est.value), n);
        cert.roots.push_back(root);
        cert.below_precision.push_back(est.below);
        if (!have || root < cert.bound) {
            cert.bound = root;
            have = true;
        }
        cert.running_min.push_back(cert.bound);
        if (!est.below && est.value.is_zero()) {
            cert.zero_at = n;
            break;
        }
    }
    return cert;
}

SpectralCertificate spectral_seminorm_gauss(const GaussElement& f, std::uint32_t max_n,
                                            std::size_t term_cap = kDefaultTermCap);

/// Power-boundedness via the Gauss norm: on a ring with a power-multiplicative
/// norm the power-bounded subring is exactly the unit ball.
bool is_power_bounded(const GaussElement& f);

/// Heuristic fallback (finite-stage spectral bound <= 1) for rings whose norm
/// is not power-multiplicative; the flag marks the verdict as heuristic.
struct PowerBoundedVerdict {
    bool value;
    bool heuristic;
};
PowerBoundedVerdict is_power_bounded_spectral(const SpectralCertificate& cert);

/// Successive-difference norms ||s_{m+1} - s_m|| of the partial sums
/// s_m = sum_{k<=m} w^k X^{1/p^k} in the perfected Gauss algebra, where w is
/// a pseudo-uniformizer of the stated norm; each row is computed by direct
/// evaluation of the Gauss norm on the difference term.
struct CauchyGapRow {
    std::uint32_t m;
    NormValue gap;
};
std::vector<CauchyGapRow> cauchy_gap_demo(CoefSide side, std::uint32_t p, std::uint32_t n,
                                          const PExponent& t_prec, const NormValue& varpi_norm,
                                          std::uint32_t m_max);

/// Dual numbers K[eps]/(eps^2) with ||a + b eps|| = max(|a|, p |b|): the
/// standard exemplar of a ring whose norm is not power-multiplicative.
struct DualNumber {
    FieldElem a;
    FieldElem b;

    DualNumber mul(const DualNumber& o) const;
    NormEstimate norm() const;
    std::string to_string() const;
};

SpectralCertificate spectral_seminorm_dual(const DualNumber& f, std::uint32_t max_n);

} // namespace perfectoid
