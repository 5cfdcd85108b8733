#include "dw2/field.hpp"

#include <cassert>
#include <cctype>

namespace dw2 {

FieldSpec::FieldSpec(int e, int d, std::vector<std::string> names, uint64_t modulus)
    : e_(e), d_(d), names_(std::move(names)), gf_(e, modulus) {
    if (d < 1 || d > kMaxVars) throw std::invalid_argument("field: d out of range [1,4]");
    static const char* defaults[kMaxVars] = {"t", "u", "v", "w"};
    if (names_.empty())
        for (int i = 0; i < d; ++i) names_.push_back(defaults[i]);
    if (int(names_.size()) != d) throw std::invalid_argument("field: wrong number of variable names");
    for (auto& n : names_) {
        if (n.empty() || n == "g") throw std::invalid_argument("field: bad variable name");
        for (char c : n)
            if (!std::islower(uint8_t(c)) && !std::isdigit(uint8_t(c)))
                throw std::invalid_argument("field: variable names are lowercase identifiers");
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("field: duplicate variable name");
}

int FieldSpec::var_index(const std::string& n) const {
    for (int i = 0; i < d_; ++i)
        if (names_[i] == n) return i;
    return -1;
}

FieldElem FieldElem::zero(const FieldSpec& s) { return {s, MultiPoly(), MultiPoly::constant(1)}; }
FieldElem FieldElem::one(const FieldSpec& s) {
    return {s, MultiPoly::constant(1), MultiPoly::constant(1)};
}
FieldElem FieldElem::constant(const FieldSpec& s, Gf2e c) {
    return {s, MultiPoly::constant(c), MultiPoly::constant(1)};
}
FieldElem FieldElem::variable(const FieldSpec& s, int i) {
    assert(i >= 0 && i < s.d());
    return {s, MultiPoly::variable(i), MultiPoly::constant(1)};
}
FieldElem FieldElem::from_poly(const FieldSpec& s, MultiPoly p) {
    return {s, std::move(p), MultiPoly::constant(1)};
}

FieldElem FieldElem::x_subset(const FieldSpec& s, uint32_t mask) {
    Mono m;
    for (int i = 0; i < s.d(); ++i)
        if ((mask >> i) & 1) m = m * Mono::var(i);
    return {s, MultiPoly::monomial(m, 1), MultiPoly::constant(1)};
}

FieldElem FieldElem::make(const FieldSpec& s, MultiPoly num, MultiPoly den) {
    const Gf2eCtx& F = s.gf();
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (num.is_zero()) return zero(s);
    if (!den.is_one()) {
        MultiPoly g = poly_gcd(num, den, F);
        if (!g.is_one()) {
            num = div_exact(num, g, F);
            den = div_exact(den, g, F);
        }
        Gf2e lc = den.leading().second;
        if (lc != 1) {
            Gf2e ilc = F.inv(lc);
            num = num.mul_term(Mono{}, ilc, F);
            den = den.mul_term(Mono{}, ilc, F);
        }
    }
    return {s, std::move(num), std::move(den)};
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    assert(spec_ && spec_ == o.spec_);
    const Gf2eCtx& F = spec_->gf();
    if (den_ == o.den_) {
        if (den_.is_one()) return {*spec_, num_.add(o.num_, F), MultiPoly::constant(1)};
        return make(*spec_, num_.add(o.num_, F), den_);
    }
    // numerators are reduced against their own denominators, so only a
    // cross gcd can appear
    MultiPoly g = poly_gcd(den_, o.den_, F);
    if (g.is_one())
        return {*spec_, num_.mul(o.den_, F).add(o.num_.mul(den_, F), F),
                den_.mul(o.den_, F)};
    MultiPoly db = div_exact(o.den_, g, F);
    MultiPoly t = num_.mul(db, F).add(o.num_.mul(div_exact(den_, g, F), F), F);
    MultiPoly g1 = poly_gcd(t, g, F);
    if (g1.is_one()) return make_reduced(*spec_, std::move(t), den_.mul(db, F));
    return make_reduced(*spec_, div_exact(t, g1, F),
                        div_exact(den_, g1, F).mul(db, F));
}

// num/den with gcd(num, den) = 1 already; normalizes the denominator monic
FieldElem FieldElem::make_reduced(const FieldSpec& s, MultiPoly num, MultiPoly den) {
    const Gf2eCtx& F = s.gf();
    if (num.is_zero()) return zero(s);
    Gf2e lc = den.leading().second;
    if (lc != 1) {
        Gf2e ilc = F.inv(lc);
        num = num.mul_term(Mono{}, ilc, F);
        den = den.mul_term(Mono{}, ilc, F);
    }
    return {s, std::move(num), std::move(den)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    assert(spec_ && spec_ == o.spec_);
    const Gf2eCtx& F = spec_->gf();
    if (is_zero() || o.is_zero()) return zero(*spec_);
    if (den_.is_one() && o.den_.is_one())
        return {*spec_, num_.mul(o.num_, F), MultiPoly::constant(1)};
    // cross gcds only: each side is already reduced
    MultiPoly g1 = poly_gcd(num_, o.den_, F);
    MultiPoly g2 = poly_gcd(o.num_, den_, F);
    return make_reduced(*spec_,
                        div_exact(num_, g1, F).mul(div_exact(o.num_, g2, F), F),
                        div_exact(den_, g2, F).mul(div_exact(o.den_, g1, F), F));
}

FieldElem FieldElem::inv() const {
    assert(spec_);
    if (is_zero()) throw std::domain_error("inversion of zero");
    const Gf2eCtx& F = spec_->gf();
    MultiPoly n = den_, d = num_;
    Gf2e lc = d.leading().second;
    if (lc != 1) {
        Gf2e ilc = F.inv(lc);
        n = n.mul_term(Mono{}, ilc, F);
        d = d.mul_term(Mono{}, ilc, F);
    }
    return {*spec_, std::move(n), std::move(d)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(long n) const {
    assert(spec_);
    if (n < 0) return inv().pow(-n);
    FieldElem r = one(*spec_), b = *this;
    unsigned long m = (unsigned long)n;
    while (m) {
        if (m & 1) r = r * b;
        b = b.square();
        m >>= 1;
    }
    return r;
}

FieldElem FieldElem::square() const {
    assert(spec_);
    const Gf2eCtx& F = spec_->gf();
    return {*spec_, num_.square(F), den_.square(F)};
}

bool FieldElem::operator<(const FieldElem& o) const {
    if (num_ == o.num_) return den_ < o.den_;
    return num_ < o.num_;
}

std::map<uint32_t, FieldElem> FieldElem::square_decomp() const {
    assert(spec_);
    const Gf2eCtx& F = spec_->gf();
    std::map<uint32_t, FieldElem> out;
    if (is_zero()) return out;
    // a = P/Q = (PQ)/Q^2; split the monomials of PQ by exponent parity and
    // take coefficient square roots
    MultiPoly t = num_.mul(den_, F);
    std::map<uint32_t, std::vector<MultiPoly::Term>> parts;
    for (auto& [m, c] : t.terms()) {
        uint32_t xi = m.parity_mask(spec_->d());
        parts[xi].push_back({m.half_shifted(xi), F.sqrt(c)});
    }
    for (auto& [xi, ts] : parts) {
        MultiPoly p = MultiPoly::from_terms(std::move(ts), F);
        if (p.is_zero()) continue;
        FieldElem s = make(*spec_, std::move(p), den_);
        if (!s.is_zero()) out.emplace(xi, std::move(s));
    }
    return out;
}

FieldElem FieldElem::mod_squares() const {
    assert(spec_);
    auto d = square_decomp();
    auto it = d.find(0);
    if (it == d.end()) return *this;
    return *this + it->second.square();
}

std::optional<FieldElem> FieldElem::sqrt() const {
    assert(spec_);
    if (is_zero()) return zero(*spec_);
    auto d = square_decomp();
    if (d.size() != 1 || d.begin()->first != 0) return std::nullopt;
    return d.begin()->second;
}

FieldElem reconstitute(const FieldSpec& s, const std::map<uint32_t, FieldElem>& decomp) {
    FieldElem a = FieldElem::zero(s);
    for (auto& [xi, sx] : decomp) a = a + sx.square() * FieldElem::x_subset(s, xi);
    return a;
}

std::string poly_to_string(const MultiPoly& p, const FieldSpec& spec) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < spec.d(); ++i) {
            int e = m.exp(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += spec.name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += spec.gf().to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += spec.gf().to_string(c) + "*" + mono;
    }
    return out;
}

std::string FieldElem::to_string() const {
    if (!spec_) return "(0)/(1)";
    return "(" + poly_to_string(num_, *spec_) + ")/(" + poly_to_string(den_, *spec_) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    const FieldSpec& spec;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    FieldElem parse_expr() {
        FieldElem r = parse_term();
        while (true) {
            if (eat('+') || eat('-'))
                r = r + parse_term();
            else
                return r;
        }
    }

    FieldElem parse_term() {
        FieldElem r = parse_power();
        while (true) {
            if (eat('*'))
                r = r * parse_power();
            else if (eat('/'))
                r = r / parse_power();
            else
                return r;
        }
    }

    FieldElem parse_power() {
        FieldElem base = parse_atom();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            bool neg = eat('-');
            long n = 0;
            bool any = false;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
                n = n * 10 + (s[pos] - '0');
                ++pos;
                any = true;
            }
            if (!any) throw ParseError(start, "expected exponent");
            return base.pow(neg ? -n : n);
        }
        return base;
    }

    FieldElem parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError(pos, "unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElem r = parse_expr();
            if (!eat(')')) throw ParseError(pos, "expected ')'");
            return r;
        }
        if (std::isdigit(uint8_t(c))) {
            unsigned long n = 0;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
                n = n * 10 + (s[pos] - '0');
                ++pos;
            }
            return FieldElem::constant(spec, Gf2e(n & 1));
        }
        if (std::islower(uint8_t(c))) {
            size_t start = pos;
            std::string name;
            while (pos < s.size() &&
                   (std::islower(uint8_t(s[pos])) || std::isdigit(uint8_t(s[pos]))))
                name += s[pos++];
            if (name == "g") {
                if (spec.e() == 1) throw ParseError(start, "no generator g over GF(2)");
                return FieldElem::constant(spec, spec.gf().generator());
            }
            int v = spec.var_index(name);
            if (v < 0) throw ParseError(start, "unknown variable '" + name + "'");
            return FieldElem::variable(spec, v);
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

FieldElem parse_elem(const std::string& text, const FieldSpec& spec) {
    Parser p{text, spec};
    FieldElem r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "trailing input");
    return r;
}

}  // namespace dw2
