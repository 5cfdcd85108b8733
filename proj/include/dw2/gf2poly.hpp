#ifndef DW2_GF2POLY_HPP
#define DW2_GF2POLY_HPP

#include <cstdint>
#include <vector>

namespace dw2 {

// Dense polynomial over GF(2), coefficients bit-packed into 64-bit limbs.
// Bit i of limbs[j] is the coefficient of x^(64*j+i).
class Gf2Poly {
  public:
    Gf2Poly() = default;
    explicit Gf2Poly(uint64_t bits) : limbs_{bits} { trim(); }

    static Gf2Poly x_pow(int n);

    bool is_zero() const { return limbs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const;
    bool coeff(int i) const;
    void set_coeff(int i, bool v);

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    // returns {quotient, remainder}; divisor must be nonzero
    static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);
    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
    // x^(2^k) mod f, by repeated squaring mod f
    static Gf2Poly pow2k_x_mod(int k, const Gf2Poly& f);
    Gf2Poly shifted(int n) const;  // multiply by x^n
    Gf2Poly square() const;

    bool operator==(const Gf2Poly& o) const { return limbs_ == o.limbs_; }

    const std::vector<uint64_t>& limbs() const { return limbs_; }

  private:
    std::vector<uint64_t> limbs_;
    void trim();
};

// true iff f (over GF(2)) is irreducible
bool gf2_irreducible(const Gf2Poly& f);

}  // namespace dw2

#endif
