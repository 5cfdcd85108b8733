#include "dw2/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace dw2 {

bool subset_less(uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

TensorElem TensorElem::one(const FieldSpec& s) {
    TensorElem t(s);
    t.coords_.emplace(0, FieldElem::one(s));
    return t;
}

TensorElem TensorElem::from_coords(const FieldSpec& s, std::map<uint32_t, FieldElem> c) {
    TensorElem t(s);
    for (auto& [xi, v] : c)
        if (!v.is_zero()) t.coords_.emplace(xi, v);
    return t;
}

TensorElem TensorElem::elementary(const FieldElem& a, const FieldElem& b) {
    const FieldSpec& s = a.spec();
    TensorElem t(s);
    if (a.is_zero() || b.is_zero()) return t;
    for (auto& [beta, sb] : b.square_decomp()) {
        FieldElem c = a * sb.square();
        if (!c.is_zero()) t.coords_.emplace(beta, c);
    }
    return t;
}

FieldElem TensorElem::coord(uint32_t xi) const {
    auto it = coords_.find(xi);
    return it == coords_.end() ? FieldElem::zero(*spec_) : it->second;
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    assert(spec_ == o.spec_);
    TensorElem r(*spec_);
    r.coords_ = coords_;
    for (auto& [xi, v] : o.coords_) {
        auto it = r.coords_.find(xi);
        if (it == r.coords_.end()) {
            r.coords_.emplace(xi, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) r.coords_.erase(it);
        }
    }
    return r;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
    assert(spec_ == o.spec_);
    // (c (x) x^xi)(e (x) x^eta) = c e x^{2(xi & eta)} (x) x^{xi ^ eta}
    TensorElem r(*spec_);
    for (auto& [xi, c] : coords_)
        for (auto& [eta, e] : o.coords_) {
            FieldElem v = c * e * FieldElem::x_subset(*spec_, xi & eta).square();
            if (v.is_zero()) continue;
            uint32_t key = xi ^ eta;
            auto it = r.coords_.find(key);
            if (it == r.coords_.end()) {
                r.coords_.emplace(key, v);
            } else {
                it->second = it->second + v;
                if (it->second.is_zero()) r.coords_.erase(it);
            }
        }
    return r;
}

TensorElem TensorElem::left_scalar(const FieldElem& a) const {
    TensorElem r(*spec_);
    if (a.is_zero()) return r;
    for (auto& [xi, c] : coords_) {
        FieldElem v = a * c;
        if (!v.is_zero()) r.coords_.emplace(xi, v);
    }
    return r;
}

std::string TensorElem::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto& [xi, c] : coords_) {
        if (!out.empty()) out += " + ";
        std::string m;
        for (int i = 0; i < spec_->d(); ++i)
            if ((xi >> i) & 1) {
                if (!m.empty()) m += "*";
                m += spec_->name(i);
            }
        if (m.empty()) m = "1";
        out += c.to_string() + " (1 (x) " + m + ")";
    }
    return out;
}

void SBasisMatrix::set(uint32_t a, uint32_t b, const FieldElem& u) {
    if (u.is_zero())
        cells_.erase({a, b});
    else
        cells_[{a, b}] = u;
}

void SBasisMatrix::accumulate(uint32_t a, uint32_t b, const FieldElem& u) {
    if (u.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = cells_.find(key);
    if (it == cells_.end()) {
        cells_.emplace(key, u);
    } else {
        it->second = it->second + u;
        if (it->second.is_zero()) cells_.erase(it);
    }
}

FieldElem SBasisMatrix::cell(uint32_t a, uint32_t b) const {
    auto it = cells_.find({a, b});
    return it == cells_.end() ? FieldElem::zero(*spec_) : it->second;
}

SBasisMatrix SBasisMatrix::transpose() const {
    SBasisMatrix r(*spec_);
    for (auto& [k, u] : cells_) r.cells_.emplace(std::make_pair(k.second, k.first), u);
    return r;
}

bool SBasisMatrix::is_symmetric() const {
    for (auto& [k, u] : cells_) {
        auto it = cells_.find({k.second, k.first});
        if (it == cells_.end() || !(it->second == u)) return false;
    }
    return true;
}

bool SBasisMatrix::is_diagonal() const {
    for (auto& [k, u] : cells_)
        if (k.first != k.second) return false;
    return true;
}

SBasisMatrix to_s_basis(const TensorElem& x) {
    SBasisMatrix m(x.spec());
    for (auto& [beta, c] : x.coords())
        for (auto& [alpha, s] : c.square_decomp()) m.set(alpha, beta, s.square());
    return m;
}

TensorElem from_s_basis(const SBasisMatrix& m) {
    const FieldSpec& s = m.spec();
    std::map<uint32_t, FieldElem> coords;
    for (auto& [k, u] : m.cells()) {
        FieldElem part = u * FieldElem::x_subset(s, k.first);
        auto it = coords.find(k.second);
        if (it == coords.end())
            coords.emplace(k.second, part);
        else
            it->second = it->second + part;
    }
    return TensorElem::from_coords(s, std::move(coords));
}

QuotClass QuotClass::operator+(const QuotClass& o) const {
    SBasisMatrix r = m_;
    for (auto& [k, u] : o.m_.cells()) r.accumulate(k.first, k.second, u);
    return QuotClass(r);
}

namespace {
SBasisMatrix fold_mod_1pw(const SBasisMatrix& m) {
    SBasisMatrix r(m.spec());
    for (auto& [k, u] : m.cells()) {
        if (k.first != k.second && subset_less(k.first, k.second))
            r.accumulate(k.second, k.first, u);
        else
            r.accumulate(k.first, k.second, u);
    }
    return r;
}
}  // namespace

TensorElem involution_w(const TensorElem& x) { return from_s_basis(to_s_basis(x).transpose()); }

FieldElem mu(const TensorElem& x) {
    FieldElem r = FieldElem::zero(x.spec());
    for (auto& [xi, c] : x.coords()) r = r + c * FieldElem::x_subset(x.spec(), xi);
    return r;
}

TensorElem delta(const FieldElem& a) {
    const FieldSpec& s = a.spec();
    TensorElem one_a = TensorElem::elementary(FieldElem::one(s), a);
    TensorElem a_one = TensorElem::elementary(a, FieldElem::one(s));
    return one_a + a_one;
}

TensorElem phi_elementary(const FieldElem& a, const FieldElem& b) {
    return TensorElem::elementary(b * a.square(), b);
}

TensorElem phi_power(int n, const FieldElem& a, const FieldElem& b) {
    assert(n >= 0);
    if (n == 0) return TensorElem::elementary(a, b);
    long p = 1L << n;
    return TensorElem::elementary(b.pow(p - 1) * a.pow(p), b);
}

QuotClass phi_bar(const TensorElem& x) {
    const FieldSpec& s = x.spec();
    SBasisMatrix img(s);
    SBasisMatrix m = to_s_basis(x);
    for (auto& [k, u] : m.cells()) {
        FieldElem v = u.square() * FieldElem::x_subset(s, k.first).square();
        img.accumulate(k.second, k.second, v);
    }
    return QuotClass(fold_mod_1pw(img));
}

QuotClass pi_quotient(const TensorElem& x) { return QuotClass(fold_mod_1pw(to_s_basis(x))); }

bool in_image_1pw(const TensorElem& x) {
    SBasisMatrix m = to_s_basis(x);
    return m.is_symmetric() && [&] {
        for (auto& [k, u] : m.cells())
            if (k.first == k.second) return false;
        return true;
    }();
}

bool is_fixed(const TensorElem& x) { return to_s_basis(x).is_symmetric(); }

TensorElem phi_inv_pi(const TensorElem& x) {
    const FieldSpec& s = x.spec();
    QuotClass q = pi_quotient(x);
    std::map<uint32_t, FieldElem> coords;
    for (auto& [k, u] : q.matrix().cells()) {
        if (k.first != k.second) continue;
        auto r = u.sqrt();
        assert(r.has_value());  // diagonal coefficients of a folded class lie in S
        if (!r->is_zero()) coords.emplace(k.first, *r);
    }
    return TensorElem::from_coords(s, std::move(coords));
}

std::map<uint32_t, FieldElem> delta_basis_coords(const TensorElem& x) {
    // 1 (x) x^xi = sum_{nu subset xi} x^{xi \ nu} Delta(x)^nu, a self-inverse
    // triangular transform of the coordinate vector
    const FieldSpec& s = x.spec();
    std::map<uint32_t, FieldElem> out;
    for (auto& [xi, c] : x.coords()) {
        for (uint32_t nu = xi;; nu = (nu - 1) & xi) {
            FieldElem term = c * FieldElem::x_subset(s, xi & ~nu);
            auto it = out.find(nu);
            if (it == out.end())
                out.emplace(nu, term);
            else
                it->second = it->second + term;
            if (nu == 0) break;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

TensorElem from_delta_basis(const FieldSpec& s, const std::map<uint32_t, FieldElem>& c) {
    std::map<uint32_t, FieldElem> coords;
    for (auto& [xi, v] : c) {
        for (uint32_t nu = xi;; nu = (nu - 1) & xi) {
            FieldElem term = v * FieldElem::x_subset(s, xi & ~nu);
            auto it = coords.find(nu);
            if (it == coords.end())
                coords.emplace(nu, term);
            else
                it->second = it->second + term;
            if (nu == 0) break;
        }
    }
    return TensorElem::from_coords(s, std::move(coords));
}

int j1_degree(const TensorElem& x) {
    if (x.is_zero()) return kInfiniteDegree;
    int best = kInfiniteDegree;
    auto coords = delta_basis_coords(x);
    for (auto& [xi, c] : coords) best = std::min(best, std::popcount(xi));
    return best;
}

BredonReport bredon_homology(const FieldSpec& s, int n) {
    assert(n >= 0);
    BredonReport rep;
    rep.n = n;
    int dd = s.d();
    int m = 1 << (2 * dd);  // cells (alpha, beta)
    rep.dim_full = m;
    // 1+w sends cell (a,b) to (a,b)+(b,a); rank over S equals rank of the
    // 0/1 matrix over GF(2)
    std::vector<std::vector<uint64_t>> rows;
    int words = (m + 63) / 64;
    auto cell_index = [dd](uint32_t a, uint32_t b) { return int((a << dd) | b); };
    for (uint32_t a = 0; a < (uint32_t(1) << dd); ++a)
        for (uint32_t b = 0; b < (uint32_t(1) << dd); ++b) {
            if (a == b) continue;  // (1+w) kills diagonal cells in char 2
            std::vector<uint64_t> row(words, 0);
            int i = cell_index(a, b), j = cell_index(b, a);
            row[i / 64] ^= uint64_t(1) << (i % 64);
            row[j / 64] ^= uint64_t(1) << (j % 64);
            rows.push_back(std::move(row));
        }
    int rank = 0;
    for (int col = 0; col < m && rank < int(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if ((rows[r][col / 64] >> (col % 64)) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank) continue;
            if ((rows[r][col / 64] >> (col % 64)) & 1)
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    rep.rank_1pw = rank;
    rep.dim_fixed = (m + (1 << dd)) / 2;
    rep.dim_quotient = rep.dim_fixed - rank;
    if (n == 0) {
        rep.dims = {rep.dim_fixed};
        return rep;
    }
    rep.dims.assign(size_t(n) + 1, 0);
    rep.dims[0] = rep.dim_quotient;                       // degree n
    for (int i = 1; i < n; ++i) rep.dims[i] = (m - rank) - rank;  // degrees n<i<2n
    rep.dims[n] = m - rank;                               // degree 2n
    return rep;
}

std::string tensor_to_json(const TensorElem& x) {
    std::string out = "[";
    bool first = true;
    for (auto& [xi, c] : x.coords()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(xi) + ",\"" + c.to_string() + "\"]";
    }
    return out + "]";
}

}  // namespace dw2
