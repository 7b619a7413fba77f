#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "perfectoid/json_io.hpp"
#include "perfectoid/report.hpp"
#include "perfectoid/selftest.hpp"
#include "perfectoid/spectra.hpp"

using namespace perfectoid;

namespace {

struct CliState {
    GlobalConfig cfg;
    std::string config_file;
    Report report;
    std::function<void()> action;

    void finalize_config() {
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in) throw ParseError("cannot open config file " + config_file);
            std::stringstream buf;
            buf << in.rdbuf();
            GlobalConfig loaded = config_from_json(buf.str());
            // explicit flags were applied on top of the defaults; config file
            // fills anything still at its default
            GlobalConfig defaults;
            if (cfg.p == defaults.p) cfg.p = loaded.p;
            if (cfg.witt_len == defaults.witt_len) cfg.witt_len = loaded.witt_len;
            if (cfg.t_prec_num == defaults.t_prec_num && cfg.t_prec_kpow == defaults.t_prec_kpow) {
                cfg.t_prec_num = loaded.t_prec_num;
                cfg.t_prec_kpow = loaded.t_prec_kpow;
            }
            if (cfg.max_spectral_n == defaults.max_spectral_n) cfg.max_spectral_n = loaded.max_spectral_n;
            if (cfg.term_cap == defaults.term_cap) cfg.term_cap = loaded.term_cap;
            if (cfg.witt_poly_cap == defaults.witt_poly_cap) cfg.witt_poly_cap = loaded.witt_poly_cap;
            if (cfg.witt_cache_dir.empty()) cfg.witt_cache_dir = loaded.witt_cache_dir;
            if (cfg.output_format == defaults.output_format) cfg.output_format = loaded.output_format;
        }
        cfg.apply_env();
        cfg.validate();
    }

    const WittPolyCache& cache(std::uint32_t p, std::uint32_t n) {
        return witt_cache(p, n, cfg.witt_poly_cap, cfg.witt_cache_dir);
    }
    PExponent t_prec() const { return cfg.t_prec(); }

    void emit() { std::cout << render_report(report, cfg.output_format); }
};

/// Store the subcommand body; it runs after the configuration is finalized.
template <class F>
void defer(CLI::App* cmd, CliState& st, F fn) {
    cmd->callback([&st, fn]() { st.action = fn; });
}

FieldElem field_elem_from_json(const std::string& text, CoefSide side) {
    if (side == CoefSide::charp) return FieldElem(charp_from_json(text));
    return FieldElem(fraction_from_json(text));
}

CoefSide side_from_string(const std::string& s) {
    if (s == "charp") return CoefSide::charp;
    if (s == "untilt") return CoefSide::untilt;
    throw ParseError("side must be charp or untilt, got '" + s + "'");
}

SeminormDescriptor descriptor_from_json(const std::string& text, std::uint32_t p) {
    nlohmann::json node;
    try {
        node = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
    try {
        std::string family = node.at("family").get<std::string>();
        CoefSide side = side_from_string(node.value("side", "charp"));
        if (family == "gauss-radius") {
            std::vector<NormValue> r;
            for (const auto& v : node.at("r")) r.push_back(norm_value_from_json(v.dump(), p));
            return SeminormDescriptor::gauss_radius(side, std::move(r));
        }
        if (family == "eval-point") {
            std::vector<CharPSeries> coords;
            for (const auto& c : node.at("coords")) coords.push_back(charp_from_json(c.dump()));
            return SeminormDescriptor::eval_point(side, std::move(coords), NormValue::one(p));
        }
        if (family == "product-coordinate")
            return SeminormDescriptor::product_coordinate(side, node.at("index").get<std::size_t>());
        throw ParseError("descriptor: unknown family '" + family + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
}

ToyRing ring_from_json(const std::string& text, const CliState& st) {
    nlohmann::json node;
    try {
        node = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ring: ") + e.what());
    }
    try {
        std::string kind = node.at("kind").get<std::string>();
        CoefSide side = side_from_string(node.value("side", "charp"));
        std::uint32_t p = node.value("p", st.cfg.p);
        PExponent prec = st.cfg.t_prec();
        if (kind == "product")
            return ToyRing::product_of_fields(side, p, st.cfg.witt_len, prec, node.value("k", 2u));
        if (kind == "cpoly") {
            NormValue c = node.contains("c") ? norm_value_from_json(node["c"].dump(), p)
                                             : NormValue::p_power(p, 1);
            return ToyRing::poly_gauss_c(side, p, st.cfg.witt_len, prec, c);
        }
        if (kind == "gauss")
            return ToyRing::gauss_algebra(side, p, st.cfg.witt_len, prec, node.value("d", 1u));
        if (kind == "quotient")
            return ToyRing::quotient_by_monomial(side, p, st.cfg.witt_len, prec,
                                                 ideal_from_json(node.at("ideal").dump(), p));
        throw ParseError("ring: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ring: ") + e.what());
    }
}

ToyElem toy_elem_from_json(const std::string& text, const ToyRing& ring) {
    nlohmann::json node;
    try {
        node = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("element: ") + e.what());
    }
    try {
        switch (ring.kind()) {
            case ToyRing::Kind::product: {
                ProductElem e;
                for (const auto& c : node.at("coords"))
                    e.coords.push_back(field_elem_from_json(c.dump(), ring.side()));
                return ToyElem(std::move(e));
            }
            case ToyRing::Kind::cpoly: {
                std::vector<FieldElem> coeffs;
                for (const auto& c : node.at("coeffs"))
                    coeffs.push_back(field_elem_from_json(c.dump(), ring.side()));
                if (coeffs.empty())
                    return ToyElem(CNormedPoly::zero(ring.side(), ring.p(), ring.witt_len(), ring.t_prec(),
                                                     ring.radius()));
                return ToyElem(CNormedPoly::from_coeffs(std::move(coeffs), ring.radius()));
            }
            default:
                return ToyElem(gauss_from_json(node.dump()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("element: ") + e.what());
    }
}

CandidatePrime candidate_from_json(const std::string& text, std::uint32_t p) {
    nlohmann::json node;
    try {
        node = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("candidate: ") + e.what());
    }
    try {
        std::string kind = node.at("kind").get<std::string>();
        if (kind == "zero") return CandidatePrime::zero_ideal();
        if (kind == "coordinate") return CandidatePrime::coordinate_kernel(node.at("index").get<std::size_t>());
        if (kind == "linear") return CandidatePrime::linear(charp_from_json(node.at("lambda").dump()));
        if (kind == "monomial") return CandidatePrime::monomial(ideal_from_json(node.at("ideal").dump(), p));
        throw ParseError("candidate: unknown kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("candidate: ") + e.what());
    }
}

std::vector<std::string> json_array_items(const std::string& text, const char* what) {
    nlohmann::json node;
    try {
        node = nlohmann::json::parse(text);
        if (!node.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
        std::vector<std::string> out;
        for (const auto& item : node) out.push_back(item.dump());
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

void add_values_commands(CLI::App& app, CliState& st) {
    auto* values = app.add_subcommand("values", "exact exponent and norm-value arithmetic");
    static std::string a, b;
    static std::int64_t root_n = 2;

    auto* addexp = values->add_subcommand("addexp", "add two exponents in Z[1/p]");
    addexp->add_option("--a", a)->required();
    addexp->add_option("--b", b)->required();
    defer(addexp, st, [&st]() {
        PExponent ea = pexponent_from_json(a, st.cfg.p);
        PExponent eb = pexponent_from_json(b, st.cfg.p);
        auto& sec = st.report.section("exp_add");
        sec.fields.emplace_back("result", (ea + eb).to_string());
        sec.fields.emplace_back("json", pexponent_to_json(ea + eb));
    });

    auto* mul = values->add_subcommand("mul", "multiply two norm values");
    mul->add_option("--a", a)->required();
    mul->add_option("--b", b)->required();
    defer(mul, st, [&st]() {
        NormValue va = norm_value_from_json(a, st.cfg.p);
        NormValue vb = norm_value_from_json(b, st.cfg.p);
        auto& sec = st.report.section("norm_mul");
        sec.fields.emplace_back("result", (va * vb).to_string());
        sec.fields.emplace_back("json", norm_value_to_json(va * vb));
    });

    auto* mx = values->add_subcommand("max", "lattice max of two norm values");
    mx->add_option("--a", a)->required();
    mx->add_option("--b", b)->required();
    defer(mx, st, [&st]() {
        NormValue va = norm_value_from_json(a, st.cfg.p);
        NormValue vb = norm_value_from_json(b, st.cfg.p);
        auto& sec = st.report.section("norm_max");
        sec.fields.emplace_back("result", NormValue::max(va, vb).to_string());
    });

    auto* root = values->add_subcommand("root", "n-th root of a norm value (flags exponents outside Z[1/p])");
    root->add_option("--a", a)->required();
    root->add_option("--n", root_n)->required();
    defer(root, st, [&st]() {
        NormValueQ v = norm_nth_root(norm_value_from_json(a, st.cfg.p), root_n);
        auto& sec = st.report.section("norm_nth_root");
        sec.fields.emplace_back("result", v.to_string());
        sec.fields.emplace_back("in_value_group", v.in_value_group() ? "true" : "false");
    });
}

void add_charp_commands(CLI::App& app, CliState& st) {
    auto* charp = app.add_subcommand("charp", "truncated tilt-side series arithmetic");
    static std::string f, g;

    auto* add = charp->add_subcommand("add", "sum of two series");
    add->add_option("--f", f)->required();
    add->add_option("--g", g)->required();
    defer(add, st, [&st]() {
        CharPSeries r = charp_from_json(f) + charp_from_json(g);
        auto& sec = st.report.section("cps_add");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", charp_to_json(r));
    });

    auto* mul = charp->add_subcommand("mul", "product of two series");
    mul->add_option("--f", f)->required();
    mul->add_option("--g", g)->required();
    defer(mul, st, [&st]() {
        CharPSeries r = charp_from_json(f).mul(charp_from_json(g), st.cfg.term_cap);
        auto& sec = st.report.section("cps_mul");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", charp_to_json(r));
    });

    auto* frob = charp->add_subcommand("frobenius", "p-th power, exact");
    frob->add_option("--f", f)->required();
    defer(frob, st, [&st]() {
        CharPSeries r = charp_from_json(f).frobenius();
        auto& sec = st.report.section("frobenius");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", charp_to_json(r));
    });

    auto* root = charp->add_subcommand("pth-root", "exact p-th root");
    root->add_option("--f", f)->required();
    defer(root, st, [&st]() {
        CharPSeries r = charp_from_json(f).pth_root();
        auto& sec = st.report.section("pth_root");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", charp_to_json(r));
    });

    auto* nm = charp->add_subcommand("norm", "t-adic norm p^{-v(f)}");
    nm->add_option("--f", f)->required();
    defer(nm, st, [&st]() {
        auto& sec = st.report.section("cps_norm");
        sec.fields.emplace_back("result", charp_from_json(f).norm().to_string());
    });
}

void add_witt_commands(CLI::App& app, CliState& st) {
    auto* witt = app.add_subcommand("witt", "Witt vector layer");
    static std::uint32_t wp = 2, wn = 2;
    static std::string a, b, f, ints;

    auto* polys = witt->add_subcommand("polys", "universal sum/product polynomials");
    polys->add_option("--p", wp)->required();
    polys->add_option("--n", wn)->required();
    defer(polys, st, [&st]() {
        const WittPolyCache& cache = st.cache(wp, wn);
        auto names = WittPolyCache::xy_names(wn);
        auto& sec = st.report.section("witt_polys");
        sec.fields.emplace_back("p", std::to_string(wp));
        sec.fields.emplace_back("n", std::to_string(wn));
        ReportTable table{"polys", {"role", "index", "terms"}, {}};
        for (std::uint32_t k = 0; k < wn; ++k)
            table.rows.push_back({"S", std::to_string(k), cache.sum[k].to_string(names)});
        for (std::uint32_t k = 0; k < wn; ++k)
            table.rows.push_back({"P", std::to_string(k), cache.prod[k].to_string(names)});
        sec.tables.push_back(std::move(table));
    });

    auto vector_from_json = [](const std::string& text, const char* what) {
        std::vector<CharPSeries> comps;
        for (const auto& item : json_array_items(text, what)) comps.push_back(charp_from_json(item));
        if (comps.empty()) throw ParseError(std::string(what) + ": empty component list");
        return WittVector(comps.front().p(), std::move(comps));
    };

    auto* add = witt->add_subcommand("add", "Witt sum");
    add->add_option("--a", a)->required();
    add->add_option("--b", b)->required();
    defer(add, st, [&st, vector_from_json]() {
        WittVector va = vector_from_json(a, "a");
        WittVector vb = vector_from_json(b, "b");
        const WittPolyCache& cache = st.cache(va.p(), va.length());
        auto& sec = st.report.section("witt_add");
        sec.fields.emplace_back("result", witt_add(cache, va, vb, st.cfg.term_cap).to_string());
    });

    auto* mul = witt->add_subcommand("mul", "Witt product");
    mul->add_option("--a", a)->required();
    mul->add_option("--b", b)->required();
    defer(mul, st, [&st, vector_from_json]() {
        WittVector va = vector_from_json(a, "a");
        WittVector vb = vector_from_json(b, "b");
        const WittPolyCache& cache = st.cache(va.p(), va.length());
        auto& sec = st.report.section("witt_mul");
        sec.fields.emplace_back("result", witt_mul(cache, va, vb, st.cfg.term_cap).to_string());
    });

    auto* teich = witt->add_subcommand("teichmuller", "Teichmuller lift (a, 0, .., 0)");
    teich->add_option("--f", f)->required();
    defer(teich, st, [&st]() {
        CharPSeries s = charp_from_json(f);
        auto& sec = st.report.section("teichmuller");
        sec.fields.emplace_back("result", WittVector::teichmuller(s, st.cfg.witt_len).to_string());
    });

    auto* ghost = witt->add_subcommand("ghost", "ghost components of an integer vector");
    ghost->add_option("--ints", ints)->required();
    defer(ghost, st, [&st]() {
        std::vector<mpz_class> comps;
        for (const auto& item : json_array_items(ints, "ints")) comps.emplace_back(item);
        auto w = ghost_components(st.cfg.p, comps);
        auto& sec = st.report.section("ghost");
        ReportTable table{"components", {"k", "w_k"}, {}};
        for (std::size_t k = 0; k < w.size(); ++k)
            table.rows.push_back({std::to_string(k), w[k].get_str()});
        sec.tables.push_back(std::move(table));
    });

    auto* zcmd = witt->add_subcommand("primitive", "the primitive element z = [t] - p");
    defer(zcmd, st, [&st]() {
        const WittPolyCache& cache = st.cache(st.cfg.p, st.cfg.witt_len);
        auto& sec = st.report.section("primitive_z");
        sec.fields.emplace_back("result", primitive_z(cache, st.t_prec()).to_string());
    });
}

void add_untilt_commands(CLI::App& app, CliState& st) {
    auto* untilt = app.add_subcommand("untilt", "char-0 model arithmetic");
    static std::string f, x, y;

    auto* sharp_cmd = untilt->add_subcommand("sharp", "Teichmuller lift reduced mod z");
    sharp_cmd->add_option("--f", f)->required();
    defer(sharp_cmd, st, [&st]() {
        CharPSeries s = charp_from_json(f);
        const WittPolyCache& cache = st.cache(s.p(), st.cfg.witt_len);
        UntiltElement r = sharp(cache, s, st.t_prec(), st.cfg.term_cap);
        auto& sec = st.report.section("sharp");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", untilt_to_json(r));
        sec.fields.emplace_back("norm", untilt_norm(r).to_string());
    });

    auto* add = untilt->add_subcommand("add", "sum of canonical elements");
    add->add_option("--x", x)->required();
    add->add_option("--y", y)->required();
    defer(add, st, [&st]() {
        UntiltElement ex = untilt_from_json(x);
        UntiltElement ey = untilt_from_json(y);
        const WittPolyCache& cache = st.cache(ex.p(), ex.n());
        UntiltElement r = untilt_add(cache, ex, ey, st.cfg.term_cap);
        auto& sec = st.report.section("untilt_add");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", untilt_to_json(r));
    });

    auto* mul = untilt->add_subcommand("mul", "product of canonical elements");
    mul->add_option("--x", x)->required();
    mul->add_option("--y", y)->required();
    defer(mul, st, [&st]() {
        UntiltElement ex = untilt_from_json(x);
        UntiltElement ey = untilt_from_json(y);
        const WittPolyCache& cache = st.cache(ex.p(), ex.n());
        UntiltElement r = untilt_mul(cache, ex, ey, st.cfg.term_cap);
        auto& sec = st.report.section("untilt_mul");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", untilt_to_json(r));
    });

    auto* nm = untilt->add_subcommand("norm", "lambda-norm");
    nm->add_option("--x", x)->required();
    defer(nm, st, [&st]() {
        auto& sec = st.report.section("untilt_norm");
        sec.fields.emplace_back("result", untilt_norm(untilt_from_json(x)).to_string());
    });

    auto* d0 = untilt->add_subcommand("digit0", "reduction mod p");
    d0->add_option("--x", x)->required();
    defer(d0, st, [&st]() {
        CharPSeries r = digit0(untilt_from_json(x));
        auto& sec = st.report.section("digit0");
        sec.fields.emplace_back("result", r.to_string());
        sec.fields.emplace_back("json", charp_to_json(r));
    });
}

void add_gauss_commands(CLI::App& app, CliState& st) {
    auto* gauss = app.add_subcommand("gauss", "Gauss algebra and the spectral engine");
    static std::string phi, f, ring = "gauss", da, db;
    static std::uint32_t max_n = 0, m_max = 8;

    auto* ev = gauss->add_subcommand("eval", "evaluate a seminorm descriptor");
    ev->add_option("--phi", phi)->required();
    ev->add_option("--f", f)->required();
    defer(ev, st, [&st]() {
        GaussElement g = gauss_from_json(f);
        SeminormDescriptor d = descriptor_from_json(phi, g.p());
        auto& sec = st.report.section("gauss_eval");
        sec.fields.emplace_back("phi", d.name());
        sec.fields.emplace_back("result", gauss_eval(d, g).to_string());
    });

    auto* spectral = gauss->add_subcommand("spectral", "finite-stage spectral seminorm bound");
    spectral->add_option("--f", f);
    spectral->add_option("--max-n", max_n);
    spectral->add_option("--ring", ring)->check(CLI::IsMember({"gauss", "dual"}));
    spectral->add_option("--dual-a", da);
    spectral->add_option("--dual-b", db);
    defer(spectral, st, [&st]() {
        std::uint32_t budget = max_n ? max_n : st.cfg.max_spectral_n;
        SpectralCertificate cert;
        std::string subject;
        if (ring == "dual") {
            PExponent prec = st.t_prec();
            FieldElem a = da.empty() ? FieldElem(CharPSeries::zero(st.cfg.p, prec))
                                     : field_elem_from_json(da, CoefSide::charp);
            FieldElem b = db.empty() ? FieldElem(CharPSeries::one(st.cfg.p, prec))
                                     : field_elem_from_json(db, CoefSide::charp);
            DualNumber x{a, b};
            subject = x.to_string();
            cert = spectral_seminorm_dual(x, budget);
        } else {
            if (f.empty()) throw ParseError("gauss spectral needs --f for the gauss ring");
            GaussElement g = gauss_from_json(f);
            subject = g.to_string();
            cert = spectral_seminorm_gauss(g, budget, st.cfg.term_cap);
        }
        auto& sec = st.report.section("spectral_seminorm");
        sec.fields.emplace_back("element", subject);
        sec.fields.emplace_back("bound", cert.bound.to_string());
        if (cert.zero_at) sec.fields.emplace_back("zero_at", std::to_string(*cert.zero_at));
        ReportTable table{"certificate", {"n", "root", "running_min"}, {}};
        for (std::size_t i = 0; i < cert.roots.size(); ++i)
            table.rows.push_back({std::to_string(i + 1), cert.roots[i].to_string(),
                                  cert.running_min[i].to_string()});
        sec.tables.push_back(std::move(table));
    });

    auto* pb = gauss->add_subcommand("power-bounded", "unit-ball test under the Gauss norm");
    pb->add_option("--f", f)->required();
    defer(pb, st, [&st]() {
        GaussElement g = gauss_from_json(f);
        auto& sec = st.report.section("power_bounded");
        sec.fields.emplace_back("result", is_power_bounded(g) ? "true" : "false");
    });

    auto* cauchy = gauss->add_subcommand("cauchy-demo", "successive gaps of the standard Cauchy sequence");
    cauchy->add_option("--m-max", m_max);
    defer(cauchy, st, [&st]() {
        auto rows = cauchy_gap_demo(CoefSide::charp, st.cfg.p, st.cfg.witt_len, st.t_prec(),
                                    NormValue::p_power(st.cfg.p, 1), m_max);
        auto& sec = st.report.section("cauchy_gap_demo");
        ReportTable table{"gaps", {"m", "gap"}, {}};
        for (const auto& row : rows)
            table.rows.push_back({std::to_string(row.m), row.gap.to_string()});
        sec.tables.push_back(std::move(table));
    });
}

void add_tilt_commands(CLI::App& app, CliState& st) {
    auto* tilt = app.add_subcommand("tilt", "tilting correspondence");
    static std::string f, g, ideal, op, eps, phi, dir = "flat";
    static std::uint32_t seq_n = 0, m_max = 0;

    auto* addlim = tilt->add_subcommand("add-limit", "the limit addition formula at index n");
    addlim->add_option("--f", f)->required();
    addlim->add_option("--g", g)->required();
    addlim->add_option("--n", seq_n);
    addlim->add_option("--m-max", m_max);
    defer(addlim, st, [&st]() {
        CharPSeries sf = charp_from_json(f);
        CharPSeries sg = charp_from_json(g);
        const WittPolyCache& cache = st.cache(sf.p(), st.cfg.witt_len);
        std::uint32_t budget = m_max ? m_max : st.cfg.witt_len;
        TiltAddReport rep = tilt_add_limit(cache, sf, sg, seq_n, budget, st.t_prec(), st.cfg.term_cap);
        auto& sec = st.report.section("tilt_add_limit");
        sec.fields.emplace_back("stabilized_at",
                                rep.stabilized_at ? std::to_string(*rep.stabilized_at) : "none");
        sec.fields.emplace_back("matches_expected", rep.matches_expected ? "true" : "false");
        sec.fields.emplace_back("expected", rep.expected.to_string());
        ReportTable table{"partial_sums", {"m", "value"}, {}};
        for (std::size_t m = 0; m < rep.partial.size(); ++m)
            table.rows.push_back({std::to_string(m), rep.partial[m].to_string()});
        sec.tables.push_back(std::move(table));
    });

    auto* ideal_cmd = tilt->add_subcommand("ideal", "ideal-level maps");
    ideal_cmd->add_option("--op", op)->required()->check(CLI::IsMember({"flat", "sharp", "spectral-radical"}));
    ideal_cmd->add_option("--ideal", ideal)->required();
    defer(ideal_cmd, st, [&st]() {
        MonomialIdeal I = ideal_from_json(ideal, st.cfg.p);
        MonomialIdeal out = op == "flat" ? ideal_tilt(I)
                            : op == "sharp" ? ideal_sharp(I)
                                            : spectral_radical(I);
        auto& sec = st.report.section("tilt_ideal");
        sec.fields.emplace_back("op", op);
        sec.fields.emplace_back("input", I.to_string());
        sec.fields.emplace_back("result", out.to_string());
        sec.fields.emplace_back("json", ideal_to_json(out));
    });

    auto* approx = tilt->add_subcommand("approx", "per-term tilt approximant");
    approx->add_option("--f", f)->required();
    approx->add_option("--eps", eps)->required();
    defer(approx, st, [&st]() {
        GaussElement gf = gauss_from_json(f);
        NormValue e = norm_value_from_json(eps, gf.p());
        GaussElement out = approx_construct(gf, e, st.cfg.term_cap);
        auto& sec = st.report.section("approx_construct");
        sec.fields.emplace_back("result", out.to_string());
        sec.fields.emplace_back("json", gauss_to_json(out));
    });

    auto* verify = tilt->add_subcommand("approx-verify", "the digitwise approximation inequality");
    verify->add_option("--f", f)->required();
    verify->add_option("--g", g)->required();
    verify->add_option("--eps", eps)->required();
    defer(verify, st, [&st]() {
        UntiltFraction uf = fraction_from_json(f);
        CharPSeries sg = charp_from_json(g);
        const WittPolyCache& cache = st.cache(uf.p(), uf.numerator().n());
        NormValue e = norm_value_from_json(eps, uf.p());
        auto rows = approx_verify(cache, uf, sg, e, 1, st.cfg.term_cap);
        auto& sec = st.report.section("approx_verify");
        ReportTable table{"checks", {"phi", "lhs", "rhs", "pass"}, {}};
        for (const auto& row : rows)
            table.rows.push_back({row.phi_name, row.lhs, row.rhs, row.pass ? "true" : "false"});
        sec.tables.push_back(std::move(table));
    });

    auto* semi = tilt->add_subcommand("seminorm", "descriptor-level tilting");
    semi->add_option("--phi", phi)->required();
    semi->add_option("--dir", dir)->check(CLI::IsMember({"flat", "sharp"}));
    defer(semi, st, [&st]() {
        SeminormDescriptor d = descriptor_from_json(phi, st.cfg.p);
        SeminormDescriptor out = dir == "flat" ? seminorm_tilt(d) : seminorm_sharp(d);
        auto& sec = st.report.section("seminorm_tilt");
        sec.fields.emplace_back("input", d.name());
        sec.fields.emplace_back("result", out.name());
    });
}

void add_zariski_commands(CLI::App& app, CliState& st) {
    auto* zar = app.add_subcommand("zariski", "Zariskian layer");
    static std::string x, ringspec, samples, num, den, prec;
    static std::uint32_t term_max = 0;

    auto zelem_from = [&st](const std::string& text, const std::string& ring_text) {
        ToyRing ring = ring_from_json(ring_text, st);
        ToyElem e = toy_elem_from_json(text, ring);
        switch (ring.kind()) {
            case ToyRing::Kind::product:
                throw ParseError("product rings are not a Zariskian-layer carrier");
            case ToyRing::Kind::cpoly: return ZElem(e.as_cpoly());
            default: return ZElem(e.as_gauss());
        }
    };

    auto* invert = zar->add_subcommand("invert", "geometric series for (1 + x)^{-1}");
    invert->add_option("--x", x)->required();
    invert->add_option("--ring", ringspec)->required();
    invert->add_option("--term-max", term_max);
    invert->add_option("--prec", prec);
    defer(invert, st, [&st, zelem_from]() {
        ZElem zx = [&]() {
            nlohmann::json rnode = nlohmann::json::parse(ringspec, nullptr, false);
            if (!rnode.is_discarded() && rnode.value("kind", "") == "field")
                return ZElem(field_elem_from_json(x, side_from_string(rnode.value("side", "charp"))));
            return zelem_from(x, ringspec);
        }();
        NormValue target = prec.empty() ? NormValue::p_power(st.cfg.p, st.cfg.witt_len)
                                        : norm_value_from_json(prec, st.cfg.p);
        std::uint32_t budget = term_max ? term_max : 2 * st.cfg.witt_len;
        InvertReport rep = invert_one_plus(zx, budget, target, st.cfg.term_cap);
        auto& sec = st.report.section("invert_one_plus");
        sec.fields.emplace_back("status", to_string(rep.status));
        sec.fields.emplace_back("terms_used", std::to_string(rep.terms_used));
        sec.fields.emplace_back("residual", rep.residual_string());
        if (!rep.note.empty()) sec.fields.emplace_back("note", rep.note);
    });

    auto* check = zar->add_subcommand("check", "sample-based Zariskian test");
    check->add_option("ring", ringspec)->required();
    check->add_option("--samples", samples)->required();
    check->add_option("--term-max", term_max);
    defer(check, st, [&st, zelem_from]() {
        std::vector<ZElem> elems;
        nlohmann::json rnode = nlohmann::json::parse(ringspec, nullptr, false);
        bool is_field = !rnode.is_discarded() && rnode.value("kind", "") == "field";
        for (const auto& item : json_array_items(samples, "samples")) {
            if (is_field)
                elems.push_back(ZElem(field_elem_from_json(item, side_from_string(rnode.value("side", "charp")))));
            else
                elems.push_back(zelem_from(item, ringspec));
        }
        std::uint32_t budget = term_max ? term_max : 2 * st.cfg.witt_len;
        ZariskianReport rep = is_zariskian_sample(elems, budget,
                                                  NormValue::p_power(st.cfg.p, st.cfg.witt_len),
                                                  st.cfg.term_cap);
        auto& sec = st.report.section("zariskian_check");
        sec.fields.emplace_back("verdict", rep.verdict);
        ReportTable table{"samples", {"sample", "status", "terms", "residual"}, {}};
        for (const auto& row : rep.rows)
            table.rows.push_back({row.sample, to_string(row.status), std::to_string(row.terms_used),
                                  row.residual});
        sec.tables.push_back(std::move(table));
    });

    auto* nm = zar->add_subcommand("norm", "norm of a Zariskisation fraction a / (1 + x)");
    nm->add_option("--num", num)->required();
    nm->add_option("--den-small", den)->required();
    nm->add_option("--ring", ringspec)->required();
    defer(nm, st, [&st, zelem_from]() {
        ZarFraction fr{zelem_from(num, ringspec), zelem_from(den, ringspec)};
        auto& sec = st.report.section("zar_norm");
        sec.fields.emplace_back("result", zar_norm(fr).to_string());
    });
}

void add_spectra_commands(CLI::App& app, CliState& st) {
    auto* spectra = app.add_subcommand("spectra", "toy Berkovich and topological spectra");
    static std::string ringspec, tests, felem, cands, points;
    static std::uint32_t grid = 3;

    auto parse_tests = [&st](const std::string& text, const ToyRing& ring) {
        std::vector<ToyElem> out;
        for (const auto& item : json_array_items(text, "tests")) out.push_back(toy_elem_from_json(item, ring));
        return out;
    };
    auto parse_cands = [&st](const std::string& text) {
        std::vector<CandidatePrime> out;
        for (const auto& item : json_array_items(text, "candidates"))
            out.push_back(candidate_from_json(item, st.cfg.p));
        return out;
    };

    auto* shilov = spectra->add_subcommand("shilov", "minimal boundaries by brute force");
    shilov->add_option("--ring", ringspec)->required();
    shilov->add_option("--tests", tests)->required();
    shilov->add_option("--points", points);
    shilov->add_option("--grid", grid);
    defer(shilov, st, [&st, parse_tests]() {
        ToyRing ring = ring_from_json(ringspec, st);
        std::vector<CharPSeries> extra;
        if (!points.empty())
            for (const auto& item : json_array_items(points, "points")) extra.push_back(charp_from_json(item));
        auto family = berkovich_points(ring, grid, extra);
        ShilovResult res = shilov_bruteforce(ring, family, parse_tests(tests, ring));
        auto& sec = st.report.section("shilov");
        sec.fields.emplace_back("family", res.family_id);
        sec.fields.emplace_back("unique", res.unique ? "true" : "false");
        ReportTable table{"minimal_sets", {"set"}, {}};
        for (const auto& s : res.minimal_sets) {
            std::string row;
            for (std::size_t i : s) row += (row.empty() ? "" : ", ") + family[i].name();
            table.rows.push_back({row});
        }
        sec.tables.push_back(std::move(table));
    });

    auto* tdz = spectra->add_subcommand("tdz", "topological-zero-divisor verdicts");
    tdz->add_option("--ring", ringspec)->required();
    tdz->add_option("--f", felem)->required();
    tdz->add_option("--tests", tests)->required();
    tdz->add_option("--grid", grid);
    defer(tdz, st, [&st, parse_tests]() {
        ToyRing ring = ring_from_json(ringspec, st);
        auto family = berkovich_points(ring, grid, {});
        TdzReport rep = is_topological_zero_divisor(ring, toy_elem_from_json(felem, ring), family,
                                                    parse_tests(tests, ring));
        auto& sec = st.report.section("tdz");
        sec.fields.emplace_back("direct", rep.direct_verdict ? "tdz" : "not-tdz");
        sec.fields.emplace_back("direct_witness", rep.direct_witness);
        sec.fields.emplace_back("escassut", rep.escassut_verdict ? "tdz" : "not-tdz");
        sec.fields.emplace_back("escassut_point", rep.escassut_point);
        sec.fields.emplace_back("agree", rep.agree ? "true" : "false");
    });

    auto* topspec = spectra->add_subcommand("topspec", "spectrally-reduced-prime membership table");
    topspec->add_option("--ring", ringspec)->required();
    topspec->add_option("--candidates", cands)->required();
    topspec->add_option("--grid", grid);
    defer(topspec, st, [&st, parse_cands]() {
        ToyRing ring = ring_from_json(ringspec, st);
        auto rows = topspec_enumerate(ring, parse_cands(cands), grid);
        auto& sec = st.report.section("topspec");
        sec.fields.emplace_back("family", ring.family_id());
        ReportTable table{"candidates", {"candidate", "verdict", "reason"}, {}};
        for (const auto& row : rows)
            table.rows.push_back({row.candidate, to_string(row.verdict), row.reason});
        sec.tables.push_back(std::move(table));
    });

    auto* compare = spectra->add_subcommand("compare-zar", "TopSpec vs the Zariskisation");
    compare->add_option("--ring", ringspec)->required();
    compare->add_option("--candidates", cands)->required();
    defer(compare, st, [&st, parse_cands]() {
        ToyRing ring = ring_from_json(ringspec, st);
        auto rows = topspec_zar_compare(ring, parse_cands(cands));
        auto& sec = st.report.section("compare_zar");
        ReportTable table{"pairs", {"candidate", "extension", "contraction_ok", "extension_prime", "detail"}, {}};
        for (const auto& row : rows)
            table.rows.push_back({row.candidate, row.extension, row.contraction_ok ? "true" : "false",
                                  row.extension_prime ? "true" : "false", row.detail});
        sec.tables.push_back(std::move(table));
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-precision workbench for nonarchimedean seminormed rings and perfectoid tilting"};
    app.require_subcommand(1);

    CliState st;
    app.add_option("--config", st.config_file, "JSON configuration file");
    app.add_option("--p", st.cfg.p, "ambient prime (2, 3 or 5)");
    app.add_option("--witt-n", st.cfg.witt_len, "Witt vector length");
    app.add_option("--t-prec", st.cfg.t_prec_num, "t-adic precision exponent (integer)");
    app.add_option("--max-spectral-n", st.cfg.max_spectral_n, "spectral engine power budget");
    app.add_option("--term-cap", st.cfg.term_cap, "series term cap");
    app.add_option("--witt-cache-dir", st.cfg.witt_cache_dir, "Witt polynomial cache directory");
    app.add_option("--format", st.cfg.output_format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    add_values_commands(app, st);
    add_charp_commands(app, st);
    add_witt_commands(app, st);
    add_untilt_commands(app, st);
    add_gauss_commands(app, st);
    add_tilt_commands(app, st);
    add_zariski_commands(app, st);
    add_spectra_commands(app, st);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    defer(selftest, st, [&st]() {
        SelftestOutcome out = run_selftest(st.cfg);
        std::cout << out.report_text;
        if (!out.all_passed) throw Error("selftest failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        st.finalize_config();
        if (st.action) st.action();
        if (!st.report.sections.empty()) st.emit();
    } catch (const Error& e) {
        nlohmann::ordered_json err{{"error", {{"type", "domain"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}
