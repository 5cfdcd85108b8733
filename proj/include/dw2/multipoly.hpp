#ifndef DW2_MULTIPOLY_HPP
#define DW2_MULTIPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dw2/gf2e.hpp"

namespace dw2 {

constexpr int kMaxVars = 4;

// A monomial in at most kMaxVars variables; exponent of variable i sits in
// bits [48-16*i, 63-16*i], so raw comparison of `packed` is lex order with
// variable 0 most significant.
struct Mono {
    uint64_t packed = 0;

    static Mono var(int i, int e = 1);
    int exp(int i) const { return int((packed >> (48 - 16 * i)) & 0xffff); }
    int total() const;
    Mono operator*(Mono o) const;
    bool divides(Mono o) const;        // this | o
    Mono div(Mono o) const;            // this / o, assumes divisibility
    uint32_t parity_mask(int d) const; // bit i set iff exp(i) is odd
    Mono half_shifted(uint32_t parity) const;  // (m - parity) / 2
    Mono square() const;
    bool operator==(Mono o) const { return packed == o.packed; }
};

// graded-lexicographic order
bool grlex_less(Mono a, Mono b);

// Sparse multivariate polynomial over GF(2^e). Terms are sorted descending
// in grlex order and carry nonzero coefficients.
class MultiPoly {
  public:
    using Term = std::pair<Mono, Gf2e>;

    MultiPoly() = default;
    static MultiPoly constant(Gf2e c);
    static MultiPoly variable(int i);
    static MultiPoly monomial(Mono m, Gf2e c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    int degree_in(int v) const;
    uint32_t vars_mask(int d) const;

    MultiPoly add(const MultiPoly& o, const Gf2eCtx& F) const;
    MultiPoly mul(const MultiPoly& o, const Gf2eCtx& F) const;
    MultiPoly mul_term(Mono m, Gf2e c, const Gf2eCtx& F) const;
    MultiPoly square(const Gf2eCtx& F) const;
    MultiPoly monic(const Gf2eCtx& F) const;

    // coefficient of v^k, a polynomial not involving v
    MultiPoly coeff_of(int v, int k) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const MultiPoly& o) const;  // canonical total order

    // builds a term list; normalizes (sorts, merges, drops zeros)
    static MultiPoly from_terms(std::vector<Term> ts, const Gf2eCtx& F);

  private:
    std::vector<Term> terms_;
};

// exact division; asserts that b | a
MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b, const Gf2eCtx& F);
// gcd, normalized monic w.r.t. grlex leading coefficient
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, const Gf2eCtx& F);

}  // namespace dw2

#endif
