#include "dw2/gf2poly.hpp"

#include <bit>
#include <cassert>

namespace dw2 {

void Gf2Poly::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Gf2Poly Gf2Poly::x_pow(int n) {
    Gf2Poly p;
    p.set_coeff(n, true);
    return p;
}

int Gf2Poly::degree() const {
    if (limbs_.empty()) return -1;
    return 64 * int(limbs_.size() - 1) + 63 - std::countl_zero(limbs_.back());
}

bool Gf2Poly::coeff(int i) const {
    size_t j = size_t(i) / 64;
    if (j >= limbs_.size()) return false;
    return (limbs_[j] >> (i % 64)) & 1;
}

void Gf2Poly::set_coeff(int i, bool v) {
    size_t j = size_t(i) / 64;
    if (j >= limbs_.size()) {
        if (!v) return;
        limbs_.resize(j + 1, 0);
    }
    if (v)
        limbs_[j] |= uint64_t(1) << (i % 64);
    else
        limbs_[j] &= ~(uint64_t(1) << (i % 64));
    trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r;
    r.limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) r.limbs_[i] ^= limbs_[i];
    for (size_t i = 0; i < o.limbs_.size(); ++i) r.limbs_[i] ^= o.limbs_[i];
    r.trim();
    return r;
}

namespace {
// carry-less 64x64 -> 128 multiply, plain shift-and-xor
inline void clmul64(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
    lo = hi = 0;
    while (a) {
        int k = std::countr_zero(a);
        a &= a - 1;
        lo ^= b << k;
        if (k) hi ^= b >> (64 - k);
    }
}
}  // namespace

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Gf2Poly r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) continue;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            if (o.limbs_[j] == 0) continue;
            uint64_t lo, hi;
            clmul64(limbs_[i], o.limbs_[j], lo, hi);
            r.limbs_[i + j] ^= lo;
            r.limbs_[i + j + 1] ^= hi;
        }
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::square() const {
    Gf2Poly r;
    int d = degree();
    for (int i = 0; i <= d; ++i)
        if (coeff(i)) r.set_coeff(2 * i, true);
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b) {
    assert(!b.is_zero());
    Gf2Poly q, r = a;
    int db = b.degree();
    for (int dr = r.degree(); dr >= db; dr = r.degree()) {
        q.set_coeff(dr - db, true);
        r = r + b.shifted(dr - db);
    }
    return {q, r};
}

Gf2Poly Gf2Poly::shifted(int n) const {
    if (is_zero() || n == 0) return *this;
    Gf2Poly r;
    int lim = n % 64, off = n / 64;
    r.limbs_.assign(limbs_.size() + size_t(off) + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + off] ^= limbs_[i] << lim;
        if (lim) r.limbs_[i + off + 1] ^= limbs_[i] >> (64 - lim);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

Gf2Poly Gf2Poly::pow2k_x_mod(int k, const Gf2Poly& f) {
    Gf2Poly r = divmod(x_pow(1), f).second;
    for (int i = 0; i < k; ++i) r = divmod(r.square(), f).second;
    return r;
}

bool gf2_irreducible(const Gf2Poly& f) {
    int e = f.degree();
    if (e <= 0) return false;
    if (e == 1) return true;
    // Rabin: x^(2^e) == x mod f, and for each prime p | e, gcd(x^(2^(e/p)) - x, f) = 1
    Gf2Poly x1 = Gf2Poly::divmod(Gf2Poly::x_pow(1), f).second;
    if (!(Gf2Poly::pow2k_x_mod(e, f) == x1)) return false;
    for (int p = 2; p <= e; ++p) {
        if (e % p != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        Gf2Poly g = Gf2Poly::gcd(Gf2Poly::pow2k_x_mod(e / p, f) + x1, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace dw2
