#pragma once

#include <cstdint>
#include <string>

#include "perfectoid/values.hpp"

namespace perfectoid {

/// Global ambient configuration shared by the CLI and the self test:
/// prime, Witt length, t-adic precision, engine budgets and caps, the Witt
/// cache directory and the output format.
struct GlobalConfig {
    std::uint32_t p = 2;
    std::uint32_t witt_len = 3;
    std::int64_t t_prec_num = 32;
    std::uint32_t t_prec_kpow = 0;
    std::uint32_t max_spectral_n = 64;
    std::size_t term_cap = 4096;
    std::size_t witt_poly_cap = 400000;
    std::string witt_cache_dir; // empty: in-memory only (PERFECTOID_WITT_CACHE overrides)
    std::string output_format = "json"; // json | tsv

    PExponent t_prec() const { return PExponent(p, t_prec_num, t_prec_kpow); }

    /// Throws UnsupportedConfig on out-of-range values (p outside {2,3,5},
    /// witt_len outside 1..4, nonpositive caps).
    void validate() const;

    /// Apply the PERFECTOID_WITT_CACHE environment variable when no explicit
    /// cache directory was configured.
    void apply_env();
};

GlobalConfig config_from_json(const std::string& text);
std::string config_to_json(const GlobalConfig& cfg);

} // namespace perfectoid
