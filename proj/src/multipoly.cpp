#include "dw2/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

namespace dw2 {

Mono Mono::var(int i, int e) {
    assert(i >= 0 && i < kMaxVars && e >= 0 && e < 0x10000);
    Mono m;
    m.packed = uint64_t(e) << (48 - 16 * i);
    return m;
}

int Mono::total() const {
    int t = 0;
    for (int i = 0; i < kMaxVars; ++i) t += exp(i);
    return t;
}

Mono Mono::operator*(Mono o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp(i) + o.exp(i) >= 0x10000) throw std::overflow_error("monomial exponent overflow");
    return Mono{packed + o.packed};
}

bool Mono::divides(Mono o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp(i) > o.exp(i)) return false;
    return true;
}

Mono Mono::div(Mono o) const {
    assert(o.divides(*this));
    return Mono{packed - o.packed};
}

uint32_t Mono::parity_mask(int d) const {
    uint32_t m = 0;
    for (int i = 0; i < d; ++i)
        if (exp(i) & 1) m |= uint32_t(1) << i;
    return m;
}

Mono Mono::half_shifted(uint32_t parity) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = exp(i) - int((parity >> i) & 1);
        assert(e >= 0 && e % 2 == 0);
        r.packed |= uint64_t(e / 2) << (48 - 16 * i);
    }
    return r;
}

Mono Mono::square() const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = exp(i);
        if (2 * e >= 0x10000) throw std::overflow_error("monomial exponent overflow");
        r.packed |= uint64_t(2 * e) << (48 - 16 * i);
    }
    return r;
}

bool grlex_less(Mono a, Mono b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.packed < b.packed;
}

MultiPoly MultiPoly::constant(Gf2e c) {
    MultiPoly p;
    if (c) p.terms_.push_back({Mono{}, c});
    return p;
}

MultiPoly MultiPoly::variable(int i) { return monomial(Mono::var(i), 1); }

MultiPoly MultiPoly::monomial(Mono m, Gf2e c) {
    MultiPoly p;
    if (c) p.terms_.push_back({m, c});
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first.packed == 0 && terms_[0].second == 1;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.packed == 0);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

int MultiPoly::degree_in(int v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
}

uint32_t MultiPoly::vars_mask(int d) const {
    uint32_t mask = 0;
    for (auto& [m, c] : terms_)
        for (int i = 0; i < d; ++i)
            if (m.exp(i)) mask |= uint32_t(1) << i;
    return mask;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> ts, const Gf2eCtx& F) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    MultiPoly p;
    for (auto& t : ts) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second = F.add(p.terms_.back().second, t.second);
        else
            p.terms_.push_back(t);
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

MultiPoly MultiPoly::add(const MultiPoly& o, const Gf2eCtx& F) const {
    MultiPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && grlex_less(o.terms_[j].first, terms_[i].first))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || grlex_less(terms_[i].first, o.terms_[j].first)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Gf2e c = F.add(terms_[i].second, o.terms_[j].second);
            if (c) r.terms_.push_back({terms_[i].first, c});
            ++i, ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& o, const Gf2eCtx& F) const {
    if (is_zero() || o.is_zero()) return {};
    struct Desc {
        bool operator()(Mono a, Mono b) const { return grlex_less(b, a); }
    };
    std::map<Mono, Gf2e, Desc> acc;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Mono m = ma * mb;
            Gf2e c = F.mul(ca, cb);
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh) it->second = F.add(it->second, c);
        }
    MultiPoly r;
    for (auto& [m, c] : acc)
        if (c) r.terms_.push_back({m, c});
    return r;
}

MultiPoly MultiPoly::mul_term(Mono m, Gf2e c, const Gf2eCtx& F) const {
    MultiPoly r;
    if (!c) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [tm, tc] : terms_) {
        Gf2e cc = F.mul(tc, c);
        if (cc) r.terms_.push_back({tm * m, cc});
    }
    return r;
}

MultiPoly MultiPoly::square(const Gf2eCtx& F) const {
    MultiPoly r;
    r.terms_.reserve(terms_.size());
    for (auto& [m, c] : terms_) r.terms_.push_back({m.square(), F.mul(c, c)});
    return r;
}

MultiPoly MultiPoly::monic(const Gf2eCtx& F) const {
    if (is_zero()) return *this;
    Gf2e lc = leading().second;
    if (lc == 1) return *this;
    return mul_term(Mono{}, F.inv(lc), F);
}

MultiPoly MultiPoly::coeff_of(int v, int k) const {
    MultiPoly r;
    for (auto& [m, c] : terms_)
        if (m.exp(v) == k) r.terms_.push_back({Mono{m.packed - (uint64_t(k) << (48 - 16 * v))}, c});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
    return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (!(terms_[i].first == o.terms_[i].first))
            return grlex_less(terms_[i].first, o.terms_[i].first);
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return terms_.size() < o.terms_.size();
}

MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b, const Gf2eCtx& F) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = a, q;
    Gf2e lbi = F.inv(b.leading().second);
    std::vector<MultiPoly::Term> qt;
    while (!rem.is_zero()) {
        auto& lt = rem.leading();
        if (!b.leading().first.divides(lt.first)) throw std::domain_error("inexact polynomial division");
        Mono m = lt.first.div(b.leading().first);
        Gf2e c = F.mul(lt.second, lbi);
        qt.push_back({m, c});
        rem = rem.add(b.mul_term(m, c, F), F);
    }
    return MultiPoly::from_terms(std::move(qt), F);
}

namespace {

// dense univariate gcd in variable v (both inputs involve no other variable)
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, int v, const Gf2eCtx& F) {
    auto to_dense = [&](const MultiPoly& p) {
        std::vector<Gf2e> d(size_t(p.degree_in(v)) + 1, 0);
        for (auto& [m, c] : p.terms()) d[m.exp(v)] = c;
        return d;
    };
    auto deg = [](const std::vector<Gf2e>& d) {
        int n = int(d.size()) - 1;
        while (n >= 0 && d[n] == 0) --n;
        return n;
    };
    if (F.e() == 1) {
        Gf2Poly pa, pb;
        for (auto& [m, c] : a.terms()) pa.set_coeff(m.exp(v), true);
        for (auto& [m, c] : b.terms()) pb.set_coeff(m.exp(v), true);
        Gf2Poly g = Gf2Poly::gcd(pa, pb);
        std::vector<MultiPoly::Term> ts;
        for (int i = 0; i <= g.degree(); ++i)
            if (g.coeff(i)) ts.push_back({Mono::var(v, i), 1});
        return MultiPoly::from_terms(std::move(ts), F);
    }
    std::vector<Gf2e> x = to_dense(a), y = to_dense(b);
    while (deg(y) >= 0) {
        int dy = deg(y);
        Gf2e ly = F.inv(y[dy]);
        while (deg(x) >= dy) {
            int dx = deg(x);
            Gf2e q = F.mul(x[dx], ly);
            for (int i = 0; i <= dy; ++i) x[dx - dy + i] = F.add(x[dx - dy + i], F.mul(q, y[i]));
        }
        std::swap(x, y);
    }
    std::vector<MultiPoly::Term> ts;
    for (int i = 0; i <= deg(x); ++i)
        if (x[i]) ts.push_back({Mono::var(v, i), x[i]});
    return MultiPoly::from_terms(std::move(ts), F).monic(F);
}

// pseudo-remainder of a by b in variable v (char 2, signs immaterial)
MultiPoly prem(MultiPoly a, const MultiPoly& b, int v, const Gf2eCtx& F) {
    int db = b.degree_in(v);
    MultiPoly lb = b.coeff_of(v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        MultiPoly la = a.coeff_of(v, da);
        MultiPoly shift = la.mul(MultiPoly::monomial(Mono::var(v, da - db), 1), F);
        a = a.mul(lb, F).add(b.mul(shift, F), F);
    }
    return a;
}

MultiPoly content_in(const MultiPoly& p, int v, const Gf2eCtx& F) {
    MultiPoly c;
    for (int k = p.degree_in(v); k >= 0; --k) {
        MultiPoly ck = p.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : poly_gcd(c, ck, F);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, const Gf2eCtx& F) {
    if (a.is_zero()) return b.monic(F);
    if (b.is_zero()) return a.monic(F);
    uint32_t mask = a.vars_mask(kMaxVars) | b.vars_mask(kMaxVars);
    if (mask == 0) return MultiPoly::constant(1);
    if ((mask & (mask - 1)) == 0) {
        int v = std::countr_zero(mask);
        return univariate_gcd(a, b, v, F);
    }
    int v = 31 - std::countl_zero(mask);
    MultiPoly ca = content_in(a, v, F), cb = content_in(b, v, F);
    MultiPoly c = poly_gcd(ca, cb, F);
    MultiPoly g = div_exact(a, ca, F), h = div_exact(b, cb, F);
    if (g.degree_in(v) < h.degree_in(v)) std::swap(g, h);
    while (!h.is_zero() && h.degree_in(v) > 0) {
        MultiPoly r = prem(g, h, v, F);
        g = h;
        if (r.is_zero()) {
            h = MultiPoly();
            break;
        }
        h = div_exact(r, content_in(r, v, F), F);
    }
    MultiPoly pp = h.is_zero() ? div_exact(g, content_in(g, v, F), F) : MultiPoly::constant(1);
    return c.mul(pp, F).monic(F);
}

}  // namespace dw2
