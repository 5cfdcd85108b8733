#ifndef DW2_TENSOR_HPP
#define DW2_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "dw2/field.hpp"

namespace dw2 {

// Orders subset masks by (cardinality, lex); the tie-break order used
// everywhere a subset ordering is needed.
bool subset_less(uint32_t a, uint32_t b);

// An element of k tensor_S k, stored as left-k coefficients over the basis
// {1 (x) x^xi}: x = sum_xi c_xi * (1 (x) x^xi).
class TensorElem {
  public:
    TensorElem() = default;
    explicit TensorElem(const FieldSpec& s) : spec_(&s) {}

    static TensorElem zero(const FieldSpec& s) { return TensorElem(s); }
    static TensorElem one(const FieldSpec& s);
    // the elementary tensor a (x) b
    static TensorElem elementary(const FieldElem& a, const FieldElem& b);
    static TensorElem from_coords(const FieldSpec& s, std::map<uint32_t, FieldElem> c);

    const FieldSpec& spec() const { return *spec_; }
    bool is_zero() const { return coords_.empty(); }
    const std::map<uint32_t, FieldElem>& coords() const { return coords_; }
    FieldElem coord(uint32_t xi) const;

    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator*(const TensorElem& o) const;
    TensorElem left_scalar(const FieldElem& a) const;
    bool operator==(const TensorElem& o) const { return coords_ == o.coords_; }
    bool operator!=(const TensorElem& o) const { return !(*this == o); }
    bool operator<(const TensorElem& o) const { return coords_ < o.coords_; }

    std::string to_string() const;

  private:
    const FieldSpec* spec_ = nullptr;
    std::map<uint32_t, FieldElem> coords_;  // zero coefficients dropped
};

// The expansion of an element over the S-basis cells x^alpha (x) x^beta with
// coefficients in S: x = sum u_{alpha,beta} * (x^alpha (x) x^beta).
class SBasisMatrix {
  public:
    SBasisMatrix() = default;
    explicit SBasisMatrix(const FieldSpec& s) : spec_(&s) {}

    const FieldSpec& spec() const { return *spec_; }
    // cells keyed by (alpha, beta); coefficients in S, zeros dropped
    const std::map<std::pair<uint32_t, uint32_t>, FieldElem>& cells() const { return cells_; }
    void set(uint32_t a, uint32_t b, const FieldElem& u);
    void accumulate(uint32_t a, uint32_t b, const FieldElem& u);
    FieldElem cell(uint32_t a, uint32_t b) const;

    SBasisMatrix transpose() const;
    bool is_symmetric() const;
    bool is_diagonal() const;
    bool operator==(const SBasisMatrix& o) const { return cells_ == o.cells_; }

  private:
    const FieldSpec* spec_ = nullptr;
    std::map<std::pair<uint32_t, uint32_t>, FieldElem> cells_;
};

SBasisMatrix to_s_basis(const TensorElem& x);
TensorElem from_s_basis(const SBasisMatrix& m);

// Reduced form modulo Im(1+w): every strictly upper cell (alpha < beta in
// subset order) is folded into its transpose cell and zeroed.
class QuotClass {
  public:
    QuotClass() = default;
    explicit QuotClass(SBasisMatrix folded) : m_(std::move(folded)) {}
    const SBasisMatrix& matrix() const { return m_; }
    bool is_zero() const { return m_.cells().empty(); }
    bool is_diagonal() const { return m_.is_diagonal(); }
    bool operator==(const QuotClass& o) const { return m_ == o.m_; }
    bool operator!=(const QuotClass& o) const { return !(*this == o); }
    QuotClass operator+(const QuotClass& o) const;

  private:
    SBasisMatrix m_;
};

// the swap involution w
TensorElem involution_w(const TensorElem& x);
// the multiplication map mu(sum c_xi (1 (x) x^xi)) = sum c_xi x^xi
FieldElem mu(const TensorElem& x);
// Delta(a) = 1 (x) a + a (x) 1
TensorElem delta(const FieldElem& a);

// phi(a (x) b) = b a^2 (x) b and its iterates phi^n(a (x) b) = b^(2^n-1) a^(2^n) (x) b
TensorElem phi_elementary(const FieldElem& a, const FieldElem& b);
TensorElem phi_power(int n, const FieldElem& a, const FieldElem& b);

// the additive isomorphism k(x)_S k -> (k(x)_S k)^{C2}/Im(1+w), computed
// cellwise: u * (x^a (x) x^b) -> u^2 x^{2a} * (x^b (x) x^b)
QuotClass phi_bar(const TensorElem& x);
QuotClass pi_quotient(const TensorElem& x);
bool in_image_1pw(const TensorElem& x);
bool is_fixed(const TensorElem& x);
// inverts phi_bar on the diagonal part of the class of x; for fixed x this is
// the honest inverse phi^{-1} pi
TensorElem phi_inv_pi(const TensorElem& x);

// coordinates over the basis Delta(x)^xi = prod_{i in xi} Delta(x_i)
std::map<uint32_t, FieldElem> delta_basis_coords(const TensorElem& x);
TensorElem from_delta_basis(const FieldSpec& s, const std::map<uint32_t, FieldElem>& c);

// min |xi| over the Delta-basis support; kInfiniteDegree for 0. Exact
// membership test: x in J^q iff j1_degree(x) >= q.
constexpr int kInfiniteDegree = 1 << 20;
int j1_degree(const TensorElem& x);

struct BredonReport {
    int n = 0;
    int dim_full = 0;      // S-dim of k (x)_S k
    int dim_fixed = 0;     // S-dim of the fixed points
    int rank_1pw = 0;      // S-rank of 1+w
    int dim_quotient = 0;  // fixed / Im(1+w)
    std::vector<int> dims; // homology S-dimensions in degrees n..2n
};

// S-dimensions of the homology of 0 <- (k(x)k)^{C2} <-(1+w)- k(x)k <- ... <- 0
// concentrated in degrees n..2n
BredonReport bredon_homology(const FieldSpec& s, int n);

std::string tensor_to_json(const TensorElem& x);

}  // namespace dw2

#endif
