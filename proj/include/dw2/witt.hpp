#ifndef DW2_WITT_HPP
#define DW2_WITT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dw2/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dw2 {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial over Z in the variables a_0..a_n, b_0..b_n; used to derive
// and verify the universal Witt polynomials.
class IntPoly {
  public:
    // exponents packed 8 bits per variable, a_i in bytes 0.., b_i in 8..
    struct Key {
        uint64_t ea = 0, eb = 0;
        bool operator<(const Key& o) const { return ea != o.ea ? ea < o.ea : eb < o.eb; }
        bool operator==(const Key& o) const { return ea == o.ea && eb == o.eb; }
    };

    IntPoly() = default;
    static IntPoly constant(BigInt c);
    static IntPoly var_a(int i);
    static IntPoly var_b(int i);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigInt>& terms() const { return terms_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow_int(int n) const;
    // divides every coefficient by d; throws if any division is inexact
    IntPoly div_scalar_exact(const BigInt& d) const;
    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }

    // substitute polynomials for the variables a_0..a_n, b_0..b_n
    IntPoly subst(const std::vector<IntPoly>& a_subs, const std::vector<IntPoly>& b_subs) const;

    // reduce coefficients mod 2 and map onto k via a_vals/b_vals
    MultiPoly eval_mod2(const std::vector<MultiPoly>& a_vals,
                       const std::vector<MultiPoly>& b_vals, const Gf2eCtx& F) const;

    // readable form, e.g. "a1*b0^2 + 2*a1*b1"
    std::string to_string() const;

  private:
    std::map<Key, BigInt> terms_;
};

// w_m(a) = sum_{i<=m} 2^i a_i^{2^(m-i)}
IntPoly ghost_poly(int m, bool b_vars = false);

// Universal 2-typical Witt structure polynomials: S (sum), P (product), N (negation)
// and F (Frobenius), all with exact integer coefficients, derived from the ghost
// relations and memoized per truncation level.
struct WittPolys {
    int n;
    std::vector<IntPoly> S, P, N, F;
};

// n <= kWittCap; results are cached
constexpr int kWittCap = 4;
const WittPolys& witt_polys(int n);

// Truncated 2-typical Witt vector (a_0, ..., a_n) over k.
class WittVec {
  public:
    WittVec() = default;
    WittVec(const FieldSpec& s, std::vector<FieldElem> comps);
    static WittVec zero(const FieldSpec& s, int n);
    // tau_n(a) = (a, 0, ..., 0) at level n
    static WittVec teich(const FieldSpec& s, int n, const FieldElem& a);
    // (0, ..., 0, a, 0, ..., 0) with a in position n-i (i.e. V^{n-i} tau_i)
    static WittVec v_tau(const FieldSpec& s, int n, int i, const FieldElem& a);

    int level() const { return int(comps_.size()) - 1; }
    const std::vector<FieldElem>& comps() const { return comps_; }
    const FieldElem& comp(int i) const { return comps_[size_t(i)]; }
    const FieldSpec& spec() const { return *spec_; }

    WittVec add(const WittVec& o) const;
    WittVec mul(const WittVec& o) const;
    WittVec neg() const;
    WittVec sub(const WittVec& o) const { return add(o.neg()); }

    WittVec V_op() const;                 // level n -> n+1
    WittVec R_op() const;                 // level n -> n-1; requires n >= 1
    WittVec F_op() const;                 // level n -> n-1; requires n >= 1

    bool operator==(const WittVec& o) const { return comps_ == o.comps_; }
    bool is_zero() const;

    std::string to_string() const;

  private:
    const FieldSpec* spec_ = nullptr;
    std::vector<FieldElem> comps_;
};

// Normal form of a class in W_<2^n>(k)/2: (a_0, [a_1], ..., [a_n]) with
// [a_i] in k/S normal form. Computed by the greedy Witt-subtraction
// reduction, which respects the twisted coset structure of 2W.
class WittMod2 {
  public:
    WittMod2() = default;
    explicit WittMod2(std::vector<FieldElem> comps) : comps_(std::move(comps)) {}

    int level() const { return int(comps_.size()) - 1; }
    const std::vector<FieldElem>& comps() const { return comps_; }
    bool operator==(const WittMod2& o) const { return comps_ == o.comps_; }
    bool is_zero() const;

    std::string to_string() const;

  private:
    std::vector<FieldElem> comps_;
};

WittMod2 to_mod2(const WittVec& x);
bool mod2_equal(const WittVec& x, const WittVec& y);
// membership test for 2*W = {(0, s_1, ..., s_n) : s_i in S}, used to
// cross-check mod2_equal
bool in_two_w(const WittVec& x);

}  // namespace dw2

#endif
