#include "perfectoid/config.hpp"

#include <cstdlib>

#include <json.hpp>

namespace perfectoid {

void GlobalConfig::validate() const {
    if (!is_supported_prime(p))
        throw UnsupportedConfig("p = " + std::to_string(p) + " is outside the supported set {2, 3, 5}");
    if (witt_len < 1 || witt_len > 4)
        throw UnsupportedConfig("wittLen = " + std::to_string(witt_len) + " is outside the supported range 1..4");
    if (t_prec_num <= 0) throw UnsupportedConfig("tPrec must be positive");
    if (max_spectral_n < 1) throw UnsupportedConfig("maxSpectralN must be positive");
    if (term_cap < 1 || witt_poly_cap < 1) throw UnsupportedConfig("caps must be positive");
    if (output_format != "json" && output_format != "tsv")
        throw UnsupportedConfig("outputFormat must be json or tsv");
}

void GlobalConfig::apply_env() {
    if (!witt_cache_dir.empty()) return;
    if (const char* env = std::getenv("PERFECTOID_WITT_CACHE")) witt_cache_dir = env;
}

GlobalConfig config_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    GlobalConfig cfg;
    try {
        if (root.contains("p")) cfg.p = root["p"].get<std::uint32_t>();
        if (root.contains("wittLen")) cfg.witt_len = root["wittLen"].get<std::uint32_t>();
        if (root.contains("tPrec")) {
            cfg.t_prec_num = root["tPrec"].at("num").get<std::int64_t>();
            cfg.t_prec_kpow = root["tPrec"].value("kpow", 0u);
        }
        if (root.contains("maxSpectralN")) cfg.max_spectral_n = root["maxSpectralN"].get<std::uint32_t>();
        if (root.contains("termCap")) cfg.term_cap = root["termCap"].get<std::size_t>();
        if (root.contains("wittPolyCap")) cfg.witt_poly_cap = root["wittPolyCap"].get<std::size_t>();
        if (root.contains("wittCacheDir")) cfg.witt_cache_dir = root["wittCacheDir"].get<std::string>();
        if (root.contains("outputFormat")) cfg.output_format = root["outputFormat"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    return cfg;
}

std::string config_to_json(const GlobalConfig& cfg) {
    nlohmann::ordered_json root;
    root["p"] = cfg.p;
    root["wittLen"] = cfg.witt_len;
    root["tPrec"] = {{"num", cfg.t_prec_num}, {"kpow", cfg.t_prec_kpow}};
    root["maxSpectralN"] = cfg.max_spectral_n;
    root["termCap"] = cfg.term_cap;
    root["wittPolyCap"] = cfg.witt_poly_cap;
    root["wittCacheDir"] = cfg.witt_cache_dir;
    root["outputFormat"] = cfg.output_format;
    return root.dump(1);
}

} // namespace perfectoid
