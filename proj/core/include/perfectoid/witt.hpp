#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfectoid/charp.hpp"
#include "perfectoid/intpoly.hpp"

namespace perfectoid {

inline constexpr std::size_t kDefaultWittTermCap = 400000;

/// Universal p-typical Witt polynomials of length n:
///   sum[k]  = S_k in Z[X_0..X_{n-1}, Y_0..Y_{n-1}]  (2n variables)
///   prod[k] = P_k in the same ring
///   frob[k] = F_k in Z[X_0..X_n]                    (n+1 variables)
/// pinned down by the ghost identities
///   w_k(S_0..S_k) = w_k(X) + w_k(Y),  w_k(P_0..P_k) = w_k(X) w_k(Y),
///   w_k(F_0..F_k) = w_{k+1}(X),       w_k(Z) = sum_{i<=k} p^i Z_i^{p^{k-i}}.
/// Solved over the rationals by back-substitution; every division is asserted
/// exact, so all coefficients are integers by construction.
struct WittPolyCache {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    std::vector<IntPoly> sum;
    std::vector<IntPoly> prod;
    std::vector<IntPoly> frob;

    /// Variable names X_0.. / Y_0.. for rendering the 2n-variable polynomials.
    static std::vector<std::string> xy_names(std::uint32_t n);
};

WittPolyCache build_witt_polys(std::uint32_t p, std::uint32_t n,
                               std::size_t term_cap = kDefaultWittTermCap);

/// Re-derives the ghost identities symbolically; throws CacheIntegrityError
/// on any mismatch. Run after loading a cache from disk.
void verify_witt_polys(const WittPolyCache& cache, std::size_t term_cap = kDefaultWittTermCap);

std::string witt_cache_to_json(const WittPolyCache& cache);
WittPolyCache witt_cache_from_json(const std::string& text);

/// Process-wide memoized access; when `cache_dir` is nonempty the cache is
/// read from / written to `<dir>/witt_p<p>_n<n>.json` (and verified on load).
const WittPolyCache& witt_cache(std::uint32_t p, std::uint32_t n,
                                std::size_t term_cap = kDefaultWittTermCap,
                                const std::string& cache_dir = "");

/// Length-n p-typical Witt vector over the integral truncated series ring.
/// Components must be integral; they may carry different precisions, which
/// the ring operations propagate termwise through the series arithmetic.
class WittVector {
public:
    WittVector(std::uint32_t p, std::vector<CharPSeries> comps);

    static WittVector zero(std::uint32_t p, std::uint32_t n, const PExponent& prec);
    static WittVector one(std::uint32_t p, std::uint32_t n, const PExponent& prec);
    /// (a, 0, .., 0); requires a integral.
    static WittVector teichmuller(const CharPSeries& a, std::uint32_t n);
    /// p = V(1) = (0, 1, 0, .., 0).
    static WittVector p_times_one(std::uint32_t p, std::uint32_t n, const PExponent& prec);

    std::uint32_t p() const { return p_; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(comps_.size()); }
    const std::vector<CharPSeries>& components() const { return comps_; }
    const CharPSeries& component(std::size_t i) const { return comps_.at(i); }

    bool is_zero() const;
    bool operator==(const WittVector& o) const;
    bool operator!=(const WittVector& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::uint32_t p_;
    std::vector<CharPSeries> comps_;
};

/// Truncate components pairwise to their common precision (useful for exact
/// structural comparisons of results from different pipelines).
std::pair<WittVector, WittVector> align_precision(const WittVector& a, const WittVector& b);

WittVector witt_add(const WittPolyCache& cache, const WittVector& a, const WittVector& b,
                    std::size_t term_cap = kDefaultTermCap);
WittVector witt_mul(const WittPolyCache& cache, const WittVector& a, const WittVector& b,
                    std::size_t term_cap = kDefaultTermCap);
WittVector witt_neg(const WittPolyCache& cache, const WittVector& a,
                    std::size_t term_cap = kDefaultTermCap);
WittVector witt_sub(const WittPolyCache& cache, const WittVector& a, const WittVector& b,
                    std::size_t term_cap = kDefaultTermCap);

/// V: (x_0..x_{n-1}) -> (0, x_0, .., x_{n-2}).
WittVector verschiebung(const WittVector& a);
/// F over a char-p base: componentwise p-th power.
WittVector witt_frobenius(const WittVector& a);

/// Witt coordinates of -1 (constants in F_p), e.g. (1,1,..,1) at p = 2.
WittVector neg_one_vector(const WittPolyCache& cache, const PExponent& prec);
/// z = [t] - p, the primitive element of the untilt model; digit 0 is t.
WittVector primitive_z(const WittPolyCache& cache, const PExponent& prec);

/// Ghost components w_k = sum_{i<=k} p^i x_i^{p^{k-i}} over a torsion-free
/// carrier; the independent oracle for the Witt ring axioms.
std::vector<IntPoly> ghost_components(std::uint32_t p, const std::vector<IntPoly>& comps,
                                      std::size_t term_cap = kDefaultWittTermCap);
std::vector<mpz_class> ghost_components(std::uint32_t p, const std::vector<mpz_class>& comps);

/// Evaluate a cached 2n-variable polynomial on the components of (a, b).
CharPSeries eval_witt_poly(const IntPoly& poly, const WittVector& a, const WittVector& b,
                           const PExponent& out_prec, std::size_t term_cap);

} // namespace perfectoid
