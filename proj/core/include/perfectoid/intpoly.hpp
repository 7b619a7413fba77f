#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "perfectoid/errors.hpp"

namespace perfectoid {

/// Sparse multivariate polynomial over Z with GMP coefficients. Used for the
/// universal Witt sum/product polynomials and as the torsion-free carrier of
/// the ghost-component oracle; exponents are machine integers, terms are kept
/// in lexicographic order so serialization is canonical.
class IntPoly {
public:
    using Expo = std::vector<std::uint32_t>;
    using TermMap = std::map<Expo, mpz_class>;

    IntPoly() = default;
    explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}

    static IntPoly constant(std::size_t nvars, const mpz_class& c);
    static IntPoly variable(std::size_t nvars, std::size_t idx);
    static IntPoly monomial(std::size_t nvars, const Expo& e, const mpz_class& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly mul(const IntPoly& o, std::size_t term_cap) const;
    IntPoly pow(std::uint64_t k, std::size_t term_cap) const;
    IntPoly scaled(const mpz_class& c) const;

    /// Exact division by a scalar; throws CacheIntegrityError when any
    /// coefficient is not divisible (the integrality assertion).
    IntPoly divided_exact(const mpz_class& c) const;

    bool operator==(const IntPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    /// Substitute polynomials for the variables (args.size() == nvars).
    IntPoly compose(const std::vector<IntPoly>& args, std::size_t term_cap) const;

    void add_term(const Expo& e, const mpz_class& c);

    /// Rendering with a caller-supplied variable namer, terms in stored order.
    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

} // namespace perfectoid
