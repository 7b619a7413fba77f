#include "perfectoid/intpoly.hpp"

#include <sstream>

namespace perfectoid {

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
    IntPoly r(nvars);
    r.add_term(Expo(nvars, 0), c);
    return r;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t idx) {
    IntPoly r(nvars);
    Expo e(nvars, 0);
    e.at(idx) = 1;
    r.add_term(e, 1);
    return r;
}

IntPoly IntPoly::monomial(std::size_t nvars, const Expo& e, const mpz_class& c) {
    IntPoly r(nvars);
    r.add_term(e, c);
    return r;
}

void IntPoly::add_term(const Expo& e, const mpz_class& c) {
    if (c == 0) return;
    if (e.size() != nvars_) throw Error("exponent vector arity mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    IntPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::mul(const IntPoly& o, std::size_t term_cap) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    IntPoly r(nvars_);
    Expo e(nvars_, 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
            if (r.terms_.size() > term_cap)
                throw CapExceeded("polynomial product exceeds the term cap of " + std::to_string(term_cap));
        }
    }
    return r;
}

IntPoly IntPoly::pow(std::uint64_t k, std::size_t term_cap) const {
    IntPoly acc = constant(nvars_, 1);
    IntPoly base = *this;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            acc = first ? base : acc.mul(base, term_cap);
            first = false;
        }
        k >>= 1;
        if (k > 0) base = base.mul(base, term_cap);
    }
    return acc;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    IntPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

IntPoly IntPoly::divided_exact(const mpz_class& c) const {
    IntPoly r(nvars_);
    for (const auto& [e, coef] : terms_) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), coef.get_mpz_t(), c.get_mpz_t());
        if (rem != 0)
            throw CacheIntegrityError("coefficient " + coef.get_str() + " is not divisible by " + c.get_str());
        r.terms_.emplace(e, q);
    }
    return r;
}

IntPoly IntPoly::compose(const std::vector<IntPoly>& args, std::size_t term_cap) const {
    if (args.size() != nvars_) throw Error("compose arity mismatch");
    std::size_t out_vars = args.empty() ? 0 : args.front().nvars();
    IntPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        IntPoly term = IntPoly::constant(out_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            term = term.mul(args[i].pow(e[i], term_cap), term_cap);
        }
        r = r + term;
    }
    return r;
}

std::string IntPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1) {
            os << a.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << var_names.at(i);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

} // namespace perfectoid
