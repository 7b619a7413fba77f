#pragma once

#include "perfectoid/field.hpp"

namespace perfectoid {

/// K[T] with the c-norm ||sum a_i T^i|| = max |a_i| c^i for a fixed c < 1:
/// a normed ring of plain polynomials (no completion), the standard source
/// of non-Zariskian behaviour. Coefficients live in either coefficient field.
class CNormedPoly {
public:
    CNormedPoly(CoefSide side, std::uint32_t p, std::uint32_t n, PExponent t_prec, NormValue c);

    static CNormedPoly zero(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                            const NormValue& c);
    static CNormedPoly one(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                           const NormValue& c);
    static CNormedPoly variable(CoefSide side, std::uint32_t p, std::uint32_t n, const PExponent& t_prec,
                                const NormValue& c);
    static CNormedPoly from_coeffs(std::vector<FieldElem> coeffs, const NormValue& c);

    CoefSide side() const { return side_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t witt_len() const { return n_; }
    const PExponent& t_prec() const { return t_prec_; }
    const NormValue& radius() const { return c_; }

    std::size_t size() const { return coeffs_.size(); } // degree + 1, 0 for the zero polynomial
    bool is_zero_at_precision() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    std::optional<std::size_t> min_degree() const;
    FieldElem coeff(std::size_t i) const;
    std::size_t support_size() const;

    CNormedPoly add(const CNormedPoly& o) const;
    CNormedPoly sub(const CNormedPoly& o) const;
    CNormedPoly mul(const CNormedPoly& o, std::size_t degree_cap = 4096) const;
    CNormedPoly neg() const;
    CNormedPoly scale(const FieldElem& s) const;

    /// Norm at radius c; radius-rho variants for rho <= c stay bounded.
    NormEstimate norm() const;
    NormEstimate norm_at_radius(const NormValue& rho) const;

    FieldElem eval(const FieldElem& point) const;

    bool equal_at_precision(const CNormedPoly& o) const;
    std::string to_string() const;

private:
    void trim();
    CoefSide side_;
    std::uint32_t p_, n_;
    PExponent t_prec_;
    NormValue c_;
    std::vector<FieldElem> coeffs_; // ascending degree, trailing zeros trimmed
};

} // namespace perfectoid
