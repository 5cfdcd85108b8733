#include "dw2/witt.hpp"

#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dw2 {

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.terms_[Key{}] = std::move(c);
    return p;
}

IntPoly IntPoly::var_a(int i) {
    IntPoly p;
    Key k;
    k.ea = uint64_t(1) << (8 * i);
    p.terms_[k] = 1;
    return p;
}

IntPoly IntPoly::var_b(int i) {
    IntPoly p;
    Key k;
    k.eb = uint64_t(1) << (8 * i);
    p.terms_[k] = 1;
    return p;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_.emplace(k, -c);
        else {
            it->second -= c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (auto& [ka, a] : terms_) {
        for (auto& [kb, b] : o.terms_) {
            Key k;
            k.ea = ka.ea + kb.ea;
            k.eb = ka.eb + kb.eb;
            // 8-bit per-variable packed exponents; degrees stay small at the
            // truncation cap
            BigInt c = a * b;
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_.emplace(k, std::move(c));
            else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

IntPoly IntPoly::pow_int(int n) const {
    IntPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

IntPoly IntPoly::div_scalar_exact(const BigInt& d) const {
    assert(d != 0);
    IntPoly r;
    for (auto& [k, c] : terms_) {
        if (c % d != 0) throw std::logic_error("witt polynomial division not exact");
        r.terms_[k] = c / d;
    }
    return r;
}

IntPoly IntPoly::subst(const std::vector<IntPoly>& a_subs,
                       const std::vector<IntPoly>& b_subs) const {
    IntPoly out;
    for (auto& [k, c) : terms_) {
        IntPoly term = constant(c);
        for (size_t i = 0; i < a_subs.size(); ++i) {
            int e = int((k.ea >> (8 * i)) & 0xff);
            for (int j = 0; j < e; ++j) term = term * a_subs[i];
        }
        for (size_t i = 0; i < b_subs.size(); ++i) {
            int e = int((k.eb >> (8 * i)) & 0xff);
            for (int j = 0; j < e; ++j) term = term * b_subs[i];
        }
        out = out + term;
    }
    return out;
}

MultiPoly IntPoly::eval_mod2(const std::vector<MultiPoly>& a_vals,
                             const std::vector<MultiPoly>& b_vals, const Gf2eCtx& F) const {
    MultiPoly out;
    for (auto& [k, c] : terms_) {
        if (c % 2 == 0) continue;
        MultiPoly term = MultiPoly::constant(1);
        for (size_t i = 0; i < a_vals.size(); ++i) {
            int e = int((k.ea >> (8 * i)) & 0xff);
            for (int j = 0; j < e; ++j) term = term.mul(a_vals[i], F);
        }
        for (size_t i = 0; i < b_vals.size(); ++i) {
            int e = int((k.eb >> (8 * i)) & 0xff);
            for (int j = 0; j < e; ++j) term = term.mul(b_vals[i], F);
        }
        out = out.add(term, F);
    }
    return out;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::ostringstream term;
        bool printed_coeff = false;
        if (c != 1) {
            term << c;
            printed_coeff = true;
        }
        for (int v = 0; v < 2; ++v)
            for (int i = 0; i < 8; ++i) {
                int e = int(((v == 0 ? k.ea : k.eb) >> (8 * i)) & 0xff);
                if (!e) continue;
                if (printed_coeff || !term.str().empty()) term << "*";
                term << (v == 0 ? "a" : "b") + std::to_string(i);
                if (e > 1) term << "^" + std::to_string(e);
                printed_coeff = true;
            }
        }
        if (term.str().empty()) term << "1";
        out += term.str();
    }
    return out.empty() ? "0" : out;
}

IntPoly ghost_poly(int m, bool b_vars) {
    IntPoly w;
    for (int i = 0; i <= m; ++i) {
        IntPoly v = b_vars ? IntPoly::var_b(i) : IntPoly::var_a(i);
        IntPoly p = constant(1);
        for (int j = 0; j < (1 << (m - i)); ++j) p = p * v;
        w = w + p.div_scalar_exact(1) * IntPoly::constant(BigInt(1) << i);
    }
    return w;
}

namespace {

std::mutex g_witt_mutex;
std::map<int, WittPolys> g_witt_cache;

WittPolys derive_witt_polys(int n) {
    WittPolys out;
    out.n = n;
    std::vector<IntPoly> avars, bvars;
    for (int i = 0; i <= n; ++i) {
        avars.push_back(IntPoly::var_a(i));
        bvars.push_back(IntPoly::var_b(i));
    }
    for (int m = 0; m <= n; ++m) {
        // sum: w_m(S_0..S_m) = w_m(a) + w_m(b)
        IntPoly rhs = ghost_poly(m, false) + ghost_poly(m, true);
        IntPoly acc;
        for (int i = 0; i < m; ++i) acc = acc + out.S.pow_int(1 << (m - i)).div_scalar_exact(BigInt(1) << i);
        out.S.push_back((rhs - acc).div_scalar_exact(BigInt(1) << m));

        // product: w_m(P) = w_m(a)*w_m(b)
        rhs = ghost_poly(m, false) * ghost_poly(m, true);
        acc = IntPoly();
        for (int i = 0; i < m; ++i)
            acco = acco + out.P.pow_int(1 << (m - i)).div_scalar_exact(BigInt(1) << i);
        out.P.push_back((rhs - acc).div_scalar_exact(BigInt(1) << m));

        // negation: w_m(N) = -w_m(a)
        rhs = IntPoly();
        for (int i = 0; i <=||>
