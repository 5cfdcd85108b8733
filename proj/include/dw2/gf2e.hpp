#ifndef DW2_GF2E_HPP
#define DW2_GF2E_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dw2/gf2poly.hpp"

namespace dw2 {

// An element of GF(2^e) is a polynomial over GF(2) of degree < e, packed into
// the low e bits of a uint32. Arithmetic is modulo the context's irreducible.
using Gf2e = uint32_t;

class Gf2eCtx {
  public:
    // modulus_bits encodes the defining polynomial; 0 selects a built-in
    // primitive polynomial for the given e (1 <= e <= 16).
    explicit Gf2eCtx(int e, uint64_t modulus_bits = 0);

    int e() const { return e_; }
    uint64_t modulus_bits() const { return mod_; }

    Gf2e add(Gf2e a, Gf2e b) const { return a ^ b; }
    Gf2e mul(Gf2e a, Gf2e b) const;
    Gf2e inv(Gf2e a) const;
    Gf2e sqrt(Gf2e a) const;  // Frobenius is bijective on GF(2^e)
    Gf2e pow(Gf2e a, uint64_t n) const;
    Gf2e generator() const { return e_ == 1 ? 1 : 2; }  // the class of x

    // discrete log base g when g is primitive; -1 when a is not a power of g
    int log_of(Gf2e a) const;

    // canonical text of a constant: "0", "1", "g^k", or a sum "g^2+g+1"
    std::string to_string(Gf2e a) const;

  private:
    int e_;
    uint64_t mod_;
    std::vector<Gf2e> exp_table_;   // g^i for i in [0, 2^e-2]
    std::vector<int> log_table_;    // index by element; -1 for 0
    Gf2e mul_raw(Gf2e a, Gf2e b) const;
};

uint64_t default_gf2_modulus(int e);

}  // namespace dw2

#endif
