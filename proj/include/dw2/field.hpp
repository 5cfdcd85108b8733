#ifndef DW2_FIELD_HPP
#define DW2_FIELD_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dw2/multipoly.hpp"

namespace dw2 {

// k = GF(2^e)(t_1,...,t_d). The variables are the fixed 2-basis of k over the
// subfield of squares S = k^2.
class FieldSpec {
  public:
    FieldSpec(int e, int d, std::vector<std::string> names = {}, uint64_t modulus = 0);

    int e() const { return e_; }
    int d() const { return d_; }
    const Gf2eCtx& gf() const { return gf_; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int var_index(const std::string& n) const;  // -1 if unknown

    // number of subsets of {1..d}, i.e. the S-dimension of k
    uint32_t subset_count() const { return uint32_t(1) << d_; }

  private:
    int e_, d_;
    std::vector<std::string> names_;
    Gf2eCtx gf_;
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t p, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// A reduced fraction of sparse polynomials over GF(2^e); immutable value type.
class FieldElem {
  public:
    FieldElem() = default;  // detached zero; usable only as a placeholder

    static FieldElem zero(const FieldSpec& s);
    static FieldElem one(const FieldSpec& s);
    static FieldElem constant(const FieldSpec& s, Gf2e c);
    static FieldElem variable(const FieldSpec& s, int i);
    static FieldElem from_poly(const FieldSpec& s, MultiPoly p);
    static FieldElem make(const FieldSpec& s, MultiPoly num, MultiPoly den);
    // precondition: gcd(num, den) == 1
    static FieldElem make_reduced(const FieldSpec& s, MultiPoly num, MultiPoly den);
    // the square-free monomial x^xi for a subset mask
    static FieldElem x_subset(const FieldSpec& s, uint32_t mask);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const FieldSpec& spec() const { return *spec_; }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inv() const;
    FieldElem pow(long n) const;
    FieldElem square() const;

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool operator<(const FieldElem& o) const;

    // unique decomposition a = sum_xi s_xi^2 * x^xi over subsets xi of the
    // variables; only nonzero s_xi appear
    std::map<uint32_t, FieldElem> square_decomp() const;
    // class of a in k/S: the decomposition with the empty-set part deleted
    FieldElem mod_squares() const;
    // square root, or nullopt when the element is not in S
    std::optional<FieldElem> sqrt() const;

    std::string to_string() const;

  private:
    const FieldSpec* spec_ = nullptr;
    MultiPoly num_, den_ = MultiPoly::constant(1);
    FieldElem(const FieldSpec& s, MultiPoly n, MultiPoly d)
        : spec_(&s), num_(std::move(n)), den_(std::move(d)) {}
};

FieldElem reconstitute(const FieldSpec& s, const std::map<uint32_t, FieldElem>& decomp);

// Parses an arithmetic expression over the variables, GF(2^e) constants
// (integers and powers of g), +, -, *, /, ^ and parentheses. '-' is a synonym
// for '+' in characteristic 2. Throws ParseError / std::domain_error.
FieldElem parse_elem(const std::string& text, const FieldSpec& spec);

std::string poly_to_string(const MultiPoly& p, const FieldSpec& spec);

}  // namespace dw2

#endif
