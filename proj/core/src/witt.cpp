#include "perfectoid/witt.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace perfectoid {

namespace {

mpz_class mpz_pow_p(std::uint32_t p, std::uint32_t k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

std::uint64_t pow_u64(std::uint32_t p, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r *= p;
    return r;
}

/// w_k of a list of polynomials (the arguments may live in any arity).
IntPoly ghost_of(std::uint32_t p, const std::vector<IntPoly>& z, std::uint32_t k, std::size_t cap) {
    IntPoly acc(z.front().nvars());
    for (std::uint32_t i = 0; i <= k; ++i)
        acc = acc + z[i].pow(pow_u64(p, k - i), cap).scaled(mpz_pow_p(p, i));
    return acc;
}

} // namespace

std::vector<std::string> WittPolyCache::xy_names(std::uint32_t n) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i));
    return names;
}

WittPolyCache build_witt_polys(std::uint32_t p, std::uint32_t n, std::size_t term_cap) {
    if (n < 1) throw UnsupportedConfig("Witt length must be >= 1");
    WittPolyCache cache;
    cache.p = p;
    cache.n = n;

    const std::size_t nv2 = 2 * static_cast<std::size_t>(n);
    std::vector<IntPoly> X, Y;
    for (std::uint32_t i = 0; i < n; ++i) X.push_back(IntPoly::variable(nv2, i));
    for (std::uint32_t i = 0; i < n; ++i) Y.push_back(IntPoly::variable(nv2, n + i));

    for (std::uint32_t k = 0; k < n; ++k) {
        IntPoly target_sum = ghost_of(p, X, k, term_cap) + ghost_of(p, Y, k, term_cap);
        IntPoly target_prod = ghost_of(p, X, k, term_cap).mul(ghost_of(p, Y, k, term_cap), term_cap);
        for (std::uint32_t i = 0; i < k; ++i) {
            target_sum = target_sum - cache.sum[i].pow(pow_u64(p, k - i), term_cap).scaled(mpz_pow_p(p, i));
            target_prod = target_prod - cache.prod[i].pow(pow_u64(p, k - i), term_cap).scaled(mpz_pow_p(p, i));
        }
        cache.sum.push_back(target_sum.divided_exact(mpz_pow_p(p, k)));
        cache.prod.push_back(target_prod.divided_exact(mpz_pow_p(p, k)));
    }

    // Frobenius polynomials live in X_0..X_n.
    const std::size_t nvf = static_cast<std::size_t>(n) + 1;
    std::vector<IntPoly> XF;
    for (std::uint32_t i = 0; i <= n; ++i) XF.push_back(IntPoly::variable(nvf, i));
    for (std::uint32_t k = 0; k < n; ++k) {
        IntPoly target = ghost_of(p, XF, k + 1, term_cap);
        for (std::uint32_t i = 0; i < k; ++i)
            target = target - cache.frob[i].pow(pow_u64(p, k - i), term_cap).scaled(mpz_pow_p(p, i));
        cache.frob.push_back(target.divided_exact(mpz_pow_p(p, k)));
    }
    return cache;
}

void verify_witt_polys(const WittPolyCache& cache, std::size_t term_cap) {
    const std::uint32_t p = cache.p, n = cache.n;
    if (cache.sum.size() != n || cache.prod.size() != n || cache.frob.size() != n)
        throw CacheIntegrityError("cache for (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ") has wrong poly counts");
    const std::size_t nv2 = 2 * static_cast<std::size_t>(n);
    std::vector<IntPoly> X, Y;
    for (std::uint32_t i = 0; i < n; ++i) X.push_back(IntPoly::variable(nv2, i));
    for (std::uint32_t i = 0; i < n; ++i) Y.push_back(IntPoly::variable(nv2, n + i));
    for (std::uint32_t k = 0; k < n; ++k) {
        if (ghost_of(p, cache.sum, k, term_cap) != ghost_of(p, X, k, term_cap) + ghost_of(p, Y, k, term_cap))
            throw CacheIntegrityError("ghost identity fails for S_" + std::to_string(k));
        if (ghost_of(p, cache.prod, k, term_cap) != ghost_of(p, X, k, term_cap).mul(ghost_of(p, Y, k, term_cap), term_cap))
            throw CacheIntegrityError("ghost identity fails for P_" + std::to_string(k));
    }
    const std::size_t nvf = static_cast<std::size_t>(n) + 1;
    std::vector<IntPoly> XF;
    for (std::uint32_t i = 0; i <= n; ++i) XF.push_back(IntPoly::variable(nvf, i));
    for (std::uint32_t k = 0; k < n; ++k) {
        if (ghost_of(p, cache.frob, k, term_cap) != ghost_of(p, XF, k + 1, term_cap))
            throw CacheIntegrityError("ghost identity fails for F_" + std::to_string(k));
    }
}

std::string witt_cache_to_json(const WittPolyCache& cache) {
    nlohmann::ordered_json root;
    root["p"] = cache.p;
    root["n"] = cache.n;
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    auto emit = [&](const char* role, const std::vector<IntPoly>& list) {
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            nlohmann::ordered_json entry;
            entry["role"] = role;
            entry["index"] = idx;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& [e, c] : list[idx].terms()) {
                nlohmann::ordered_json t;
                t["e"] = e;
                t["c"] = c.get_str();
                terms.push_back(std::move(t));
            }
            entry["terms"] = std::move(terms);
            polys.push_back(std::move(entry));
        }
    };
    emit("sum", cache.sum);
    emit("prod", cache.prod);
    emit("frob", cache.frob);
    root["polys"] = std::move(polys);
    return root.dump(1);
}

WittPolyCache witt_cache_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witt cache: ") + e.what());
    }
    WittPolyCache cache;
    try {
        cache.p = root.at("p").get<std::uint32_t>();
        cache.n = root.at("n").get<std::uint32_t>();
        const std::size_t nv2 = 2 * static_cast<std::size_t>(cache.n);
        const std::size_t nvf = static_cast<std::size_t>(cache.n) + 1;
        cache.sum.assign(cache.n, IntPoly(nv2));
        cache.prod.assign(cache.n, IntPoly(nv2));
        cache.frob.assign(cache.n, IntPoly(nvf));
        for (const auto& entry : root.at("polys")) {
            std::string role = entry.at("role").get<std::string>();
            std::size_t idx = entry.at("index").get<std::size_t>();
            std::vector<IntPoly>* list = nullptr;
            if (role == "sum") list = &cache.sum;
            else if (role == "prod") list = &cache.prod;
            else if (role == "frob") list = &cache.frob;
            else throw ParseError("witt cache: unknown role '" + role + "'");
            IntPoly poly(role == "frob" ? nvf : nv2);
            for (const auto& t : entry.at("terms")) {
                IntPoly::Expo e = t.at("e").get<IntPoly::Expo>();
                mpz_class c(t.at("c").get<std::string>());
                poly.add_term(e, c);
            }
            list->at(idx) = std::move(poly);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witt cache: ") + e.what());
    }
    return cache;
}

const WittPolyCache& witt_cache(std::uint32_t p, std::uint32_t n, std::size_t term_cap,
                                const std::string& cache_dir) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, WittPolyCache> store;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(p, n);
    auto it = store.find(key);
    if (it != store.end()) return it->second;

    if (!cache_dir.empty()) {
        std::filesystem::path file = std::filesystem::path(cache_dir) /
            ("witt_p" + std::to_string(p) + "_n" + std::to_string(n) + ".json");
        if (std::filesystem::exists(file)) {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            WittPolyCache cache = witt_cache_from_json(buf.str());
            if (cache.p != p || cache.n != n)
                throw CacheIntegrityError("cache file " + file.string() + " is for different (p, n)");
            verify_witt_polys(cache, term_cap);
            return store.emplace(key, std::move(cache)).first->second;
        }
        WittPolyCache cache = build_witt_polys(p, n, term_cap);
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(file);
        out << witt_cache_to_json(cache);
        return store.emplace(key, std::move(cache)).first->second;
    }
    return store.emplace(key, build_witt_polys(p, n, term_cap)).first->second;
}

WittVector::WittVector(std::uint32_t p, std::vector<CharPSeries> comps) : p_(p), comps_(std::move(comps)) {
    if (comps_.empty()) throw Error("Witt vector needs at least one component");
    for (const auto& c : comps_) {
        if (c.p() != p_) throw AmbientMismatch("Witt component over the wrong prime");
        if (!c.integral()) throw Error("Witt components must be integral");
    }
}

WittVector WittVector::zero(std::uint32_t p, std::uint32_t n, const PExponent& prec) {
    return WittVector(p, std::vector<CharPSeries>(n, CharPSeries::zero(p, prec)));
}

WittVector WittVector::one(std::uint32_t p, std::uint32_t n, const PExponent& prec) {
    std::vector<CharPSeries> comps(n, CharPSeries::zero(p, prec));
    comps[0] = CharPSeries::one(p, prec);
    return WittVector(p, std::move(comps));
}

WittVector WittVector::teichmuller(const CharPSeries& a, std::uint32_t n) {
    if (!a.integral()) throw Error("Teichmuller lift requires an integral element");
    std::vector<CharPSeries> comps(n, CharPSeries::zero(a.p(), a.prec()));
    comps[0] = a;
    return WittVector(a.p(), std::move(comps));
}

WittVector WittVector::p_times_one(std::uint32_t p, std::uint32_t n, const PExponent& prec) {
    std::vector<CharPSeries> comps(n, CharPSeries::zero(p, prec));
    if (n > 1) comps[1] = CharPSeries::one(p, prec);
    return WittVector(p, std::move(comps));
}

bool WittVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.empty()) return false;
    return true;
}

bool WittVector::operator==(const WittVector& o) const {
    if (p_ != o.p_ || comps_.size() != o.comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!(comps_[i] == o.comps_[i])) return false;
    return true;
}

std::string WittVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += ", ";
        s += comps_[i].to_string();
    }
    return s + ")";
}

std::pair<WittVector, WittVector> align_precision(const WittVector& a, const WittVector& b) {
    if (a.length() != b.length()) throw AmbientMismatch("Witt vectors of different lengths");
    // componentwise: the Witt polynomials are triangular (S_k, P_k involve
    // components 0..k only), so precision must not leak across indices
    std::vector<CharPSeries> ca, cb;
    for (std::size_t i = 0; i < a.length(); ++i) {
        PExponent common = a.component(i).prec() <= b.component(i).prec() ? a.component(i).prec()
                                                                          : b.component(i).prec();
        ca.push_back(a.component(i).truncated(common));
        cb.push_back(b.component(i).truncated(common));
    }
    return {WittVector(a.p(), std::move(ca)), WittVector(b.p(), std::move(cb))};
}

namespace {

void check_operands(const WittPolyCache& cache, const WittVector& a, const WittVector& b) {
    if (a.p() != b.p() || a.p() != cache.p)
        throw AmbientMismatch("Witt operands over different primes");
    if (a.length() != b.length() || a.length() != cache.n)
        throw AmbientMismatch("Witt operands of different lengths");
}

/// Evaluate with memoized power tables per variable. Components keep their
/// individual precisions; the series arithmetic propagates them termwise
/// (a zero or high-valuation factor absorbs an eroded one), which is sharper
/// than any blanket truncation.
class PolyEvaluator {
public:
    PolyEvaluator(const std::vector<const CharPSeries*>& vals, std::size_t cap)
        : vals_(vals), cap_(cap), powers_(vals.size()) {}

    CharPSeries eval(const IntPoly& poly, std::uint32_t p) {
        std::optional<CharPSeries> acc;
        for (const auto& [e, c] : poly.terms()) {
            unsigned long cm = mpz_fdiv_ui(c.get_mpz_t(), p);
            if (cm == 0) continue;
            std::optional<CharPSeries> term;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const CharPSeries& pw = power(i, e[i], p);
                term = term ? term->mul(pw, cap_) : pw;
            }
            CharPSeries value = term ? term->scaled(static_cast<std::uint32_t>(cm))
                                     : CharPSeries::constant(p, static_cast<std::uint32_t>(cm),
                                                             best_prec(p));
            acc = acc ? *acc + value : value;
        }
        if (!acc) return CharPSeries::zero(p, best_prec(p));
        return *acc;
    }

private:
    PExponent best_prec(std::uint32_t p) const {
        PExponent best = PExponent::zero(p);
        for (const auto* v : vals_)
            if (v->prec() > best) best = v->prec();
        return best;
    }

    const CharPSeries& power(std::size_t var, std::uint32_t k, std::uint32_t p) {
        auto& table = powers_[var];
        auto it = table.find(k);
        if (it != table.end()) return it->second;
        CharPSeries value = *vals_[var];
        if (k > 1) {
            if (k % 2 == 0) {
                const CharPSeries& h = power(var, k / 2, p);
                value = h.mul(h, cap_);
            } else {
                value = power(var, k - 1, p).mul(*vals_[var], cap_);
            }
        }
        return table.emplace(k, std::move(value)).first->second;
    }

    std::vector<const CharPSeries*> vals_;
    std::size_t cap_;
    std::vector<std::map<std::uint32_t, CharPSeries>> powers_;
};

WittVector eval_componentwise(const WittPolyCache& cache, const std::vector<IntPoly>& polys,
                              const WittVector& a, const WittVector& b, std::size_t cap) {
    check_operands(cache, a, b);
    std::vector<const CharPSeries*> vals;
    for (const auto& c : a.components()) vals.push_back(&c);
    for (const auto& c : b.components()) vals.push_back(&c);
    PolyEvaluator ev(vals, cap);
    std::vector<CharPSeries> out;
    for (std::uint32_t k = 0; k < cache.n; ++k) out.push_back(ev.eval(polys[k], cache.p));
    return WittVector(cache.p, std::move(out));
}

} // namespace

CharPSeries eval_witt_poly(const IntPoly& poly, const WittVector& a, const WittVector& b,
                           const PExponent& out_prec, std::size_t term_cap) {
    std::vector<const CharPSeries*> vals;
    for (const auto& c : a.components()) vals.push_back(&c);
    for (const auto& c : b.components()) vals.push_back(&c);
    PolyEvaluator ev(vals, term_cap);
    return ev.eval(poly, a.p()).truncated(out_prec);
}

WittVector witt_add(const WittPolyCache& cache, const WittVector& a, const WittVector& b, std::size_t cap) {
    return eval_componentwise(cache, cache.sum, a, b, cap);
}

WittVector witt_mul(const WittPolyCache& cache, const WittVector& a, const WittVector& b, std::size_t cap) {
    return eval_componentwise(cache, cache.prod, a, b, cap);
}

WittVector witt_neg(const WittPolyCache& cache, const WittVector& a, std::size_t cap) {
    // -1 has constant components, so build it at the best precision present
    // and let componentwise alignment trim it where needed
    PExponent prec = a.component(0).prec();
    for (const auto& c : a.components())
        if (c.prec() > prec) prec = c.prec();
    WittVector m = neg_one_vector(cache, prec);
    auto [x, y] = align_precision(a, m);
    return witt_mul(cache, x, y, cap);
}

WittVector witt_sub(const WittPolyCache& cache, const WittVector& a, const WittVector& b, std::size_t cap) {
    return witt_add(cache, a, witt_neg(cache, b, cap), cap);
}

WittVector verschiebung(const WittVector& a) {
    std::vector<CharPSeries> comps;
    comps.push_back(CharPSeries::zero(a.p(), a.component(0).prec()));
    for (std::size_t i = 0; i + 1 < a.length(); ++i) comps.push_back(a.component(i));
    return WittVector(a.p(), std::move(comps));
}

WittVector witt_frobenius(const WittVector& a) {
    std::vector<CharPSeries> comps;
    for (const auto& c : a.components()) comps.push_back(c.frobenius());
    return WittVector(a.p(), std::move(comps));
}

WittVector neg_one_vector(const WittPolyCache& cache, const PExponent& prec) {
    const std::uint32_t p = cache.p, n = cache.n;
    WittVector one = WittVector::one(p, n, prec);
    std::vector<CharPSeries> v(n, CharPSeries::zero(p, prec));
    // S_k is triangular in the sense that X_k enters as + X_k, so each digit
    // of -1 can be fixed in turn by cancelling the k-th digit of v + 1.
    for (std::uint32_t k = 0; k < n; ++k) {
        WittVector s = witt_add(cache, WittVector(p, v), one);
        std::uint32_t c = s.component(k).constant_term();
        if (c != 0) v[k] = CharPSeries::constant(p, p - c, prec);
    }
    WittVector result(p, v);
    if (!witt_add(cache, result, one).is_zero())
        throw CacheIntegrityError("construction of -1 in the Witt ring failed");
    return result;
}

WittVector primitive_z(const WittPolyCache& cache, const PExponent& prec) {
    WittVector teich_t = WittVector::teichmuller(CharPSeries::t(cache.p, prec), cache.n);
    WittVector p_vec = WittVector::p_times_one(cache.p, cache.n, prec);
    return witt_sub(cache, teich_t, p_vec);
}

std::vector<IntPoly> ghost_components(std::uint32_t p, const std::vector<IntPoly>& comps, std::size_t cap) {
    std::vector<IntPoly> out;
    for (std::uint32_t k = 0; k < comps.size(); ++k) out.push_back(ghost_of(p, comps, k, cap));
    return out;
}

std::vector<mpz_class> ghost_components(std::uint32_t p, const std::vector<mpz_class>& comps) {
    std::vector<mpz_class> out;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), comps[i].get_mpz_t(), static_cast<unsigned long>(pow_u64(p, static_cast<std::uint32_t>(k - i))));
            acc += mpz_pow_p(p, static_cast<std::uint32_t>(i)) * pw;
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace perfectoid
