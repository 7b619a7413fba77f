#pragma once

#include "perfectoid/poly_ring.hpp"
#include "perfectoid/gauss.hpp"

namespace perfectoid {

/// Carrier for the Zariskian-layer computations: a coefficient field (a
/// complete ring), a c-normed plain polynomial ring (limits must have finite
/// support), or a perfected Gauss algebra (a filtered colimit of complete
/// Banach stages). The carrier kind decides which verdicts are sound.
class ZElem {
public:
    explicit ZElem(FieldElem v) : value_(std::move(v)) {}
    explicit ZElem(CNormedPoly v) : value_(std::move(v)) {}
    explicit ZElem(GaussElement v) : value_(std::move(v)) {}

    enum class Kind { field, cpoly, gauss };
    Kind kind() const;
    std::uint32_t p() const;

    const FieldElem& as_field() const { return std::get<FieldElem>(value_); }
    const CNormedPoly& as_cpoly() const { return std::get<CNormedPoly>(value_); }
    const GaussElement& as_gauss() const { return std::get<GaussElement>(value_); }

    ZElem add(const ZElem& o) const;
    ZElem sub(const ZElem& o) const;
    ZElem mul(const ZElem& o, std::size_t term_cap = kDefaultTermCap) const;
    ZElem neg() const;
    ZElem one_like() const;

    bool is_zero_at_precision() const;
    NormEstimate norm() const;
    std::size_t support_size() const;
    /// Lowest degree of a nonzero coefficient (cpoly case only).
    std::optional<std::size_t> min_degree() const;

    /// In-ring limits require finite support (plain polynomial carrier): the
    /// support-growth divergence argument is sound exactly here.
    bool finite_support_ring() const { return kind() == Kind::cpoly; }
    /// The carrier is complete, so a small residual certifies convergence.
    bool complete_ring() const { return kind() == Kind::field; }

    bool equal_at_precision(const ZElem& o) const;
    std::string to_string() const;

private:
    std::variant<FieldElem, CNormedPoly, GaussElement> value_;
};

enum class InvertStatus { converged, diverged_support, inconclusive };
std::string to_string(InvertStatus s);

/// Partial sums of the geometric series for (1+x)^{-1}.
///   converged:        ||(1+x) s_m - 1|| <= target_prec was reached
///   diverged_support: sound witness that the series has no limit in the ring
///                     (finite-support carrier, x with min degree >= 1: the
///                     frozen low-degree prefix grows without bound)
///   inconclusive:     budget exhausted without either certificate
struct InvertReport {
    InvertStatus status = InvertStatus::inconclusive;
    std::uint32_t terms_used = 0;
    std::optional<NormEstimate> residual; // ||(1+x) s_m - 1|| at the last step
    std::string note;
    std::optional<ZElem> approx;          // s_m when it is meaningful

    std::string residual_string() const { return residual ? residual->to_string() : "-"; }
};

InvertReport invert_one_plus(const ZElem& x, std::uint32_t term_max, const NormValue& target_prec,
                             std::size_t term_cap = kDefaultTermCap);

/// Per-sample invertibility of 1 + x. A single divergence witness soundly
/// marks the ring not Zariskian; all-converged is reported as evidence only
/// ("no counterexample found"), never as a proof.
struct ZariskianSampleRow {
    std::string sample;
    InvertStatus status;
    std::uint32_t terms_used;
    std::string residual;
};
struct ZariskianReport {
    std::vector<ZariskianSampleRow> rows;
    bool witness_found;
    std::string verdict; // fixed wording
};
ZariskianReport is_zariskian_sample(const std::vector<ZElem>& samples, std::uint32_t term_max,
                                    const NormValue& target_prec, std::size_t term_cap = kDefaultTermCap);

/// a / (1 + x) with ||x|| < 1; carries its ring's norm through ||a/s|| = ||a||.
class ZarFraction {
public:
    ZarFraction(ZElem numerator, ZElem denom_small);

    const ZElem& numerator() const { return num_; }
    const ZElem& denom_small() const { return small_; }
    /// 1 + x.
    ZElem denominator() const { return small_.one_like().add(small_); }

    std::string to_string() const;

private:
    ZElem num_;
    ZElem small_;
};

/// || a/s ||_Zar = || a ||.
NormEstimate zar_norm(const ZarFraction& fr);

enum class ZarEq { equal, not_equal, undecided };
std::string to_string(ZarEq e);

/// Localization equality by cross-multiplication. All supported carriers are
/// integral domains, so cross-product equality is definitive; the undecided
/// verdict is reserved for presentations without that guarantee.
ZarEq zar_eq(const ZarFraction& a, const ZarFraction& b, std::size_t term_cap = kDefaultTermCap);

} // namespace perfectoid
