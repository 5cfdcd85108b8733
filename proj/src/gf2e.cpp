#include "dw2/gf2e.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace dw2 {

uint64_t default_gf2_modulus(int e) {
    // primitive polynomials over GF(2), low bit = constant term
    static const uint64_t table[17] = {
        0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x89,
        0x11d,  0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4143, 0x8003,
        0x1002d,
    };
    if (e < 1 || e > 16) throw std::invalid_argument("gf2e: e out of range [1,16]");
    return table[e];
}

Gf2eCtx::Gf2eCtx(int e, uint64_t modulus_bits) : e_(e) {
    if (e < 1 || e > 16) throw std::invalid_argument("gf2e: e out of range [1,16]");
    mod_ = modulus_bits ? modulus_bits : default_gf2_modulus(e);
    Gf2Poly f(mod_);
    if (f.degree() != e) throw std::invalid_argument("gf2e: modulus degree != e");
    if (!gf2_irreducible(f)) throw std::invalid_argument("gf2e: modulus not irreducible");
    if (e_ == 1) return;
    uint32_t order = (uint32_t(1) << e_) - 1;
    log_table_.assign(uint32_t(1) << e_, -1);
    exp_table_.reserve(order);
    Gf2e cur = 1;
    for (uint32_t i = 0; i < order; ++i) {
        exp_table_.push_back(cur);
        if (log_table_[cur] < 0) log_table_[cur] = int(i);
        cur = mul_raw(cur, 2);
    }
    if (cur != 1) {
        // x is not primitive for a user-supplied modulus; keep tables empty and
        // fall back to raw multiplication and sum-of-powers printing
        exp_table_.clear();
        log_table_.clear();
    }
}

Gf2e Gf2eCtx::mul_raw(Gf2e a, Gf2e b) const {
    uint32_t r = 0;
    uint32_t bb = b;
    while (a) {
        if (a & 1) r ^= bb;
        a >>= 1;
        bb <<= 1;
        if (bb >> e_) bb ^= uint32_t(mod_);
    }
    return r;
}

Gf2e Gf2eCtx::mul(Gf2e a, Gf2e b) const {
    if (e_ == 1) return a & b;
    if (a == 0 || b == 0) return 0;
    if (!exp_table_.empty()) {
        uint32_t order = (uint32_t(1) << e_) - 1;
        return exp_table_[(uint64_t(log_table_[a]) + log_table_[b]) % order];
    }
    return mul_raw(a, b);
}

Gf2e Gf2eCtx::pow(Gf2e a, uint64_t n) const {
    Gf2e r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

Gf2e Gf2eCtx::inv(Gf2e a) const {
    if (a == 0) throw std::domain_error("gf2e: inverse of zero");
    if (e_ == 1) return 1;
    if (!exp_table_.empty()) {
        uint32_t order = (uint32_t(1) << e_) - 1;
        return exp_table_[(order - log_table_[a]) % order];
    }
    return pow(a, (uint64_t(1) << e_) - 2);
}

Gf2e Gf2eCtx::sqrt(Gf2e a) const {
    if (e_ == 1) return a;
    return pow(a, uint64_t(1) << (e_ - 1));
}

int Gf2eCtx::log_of(Gf2e a) const {
    if (a == 0 || log_table_.empty()) return a == 1 ? 0 : -1;
    return log_table_[a];
}

std::string Gf2eCtx::to_string(Gf2e a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    int lg = log_of(a);
    if (lg == 1) return "g";
    if (lg > 1) return "g^" + std::to_string(lg);
    // non-primitive user modulus: print as a sum of powers of g
    std::string s;
    for (int i = e_ - 1; i >= 0; --i) {
        if (!((a >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "g";
        else
            s += "g^" + std::to_string(i);
    }
    return "(" + s + ")";
}

}  // namespace dw2
