#ifndef DW2_DERHAM_HPP
#define DW2_DERHAM_HPP

#include <map>
#include <optional>
#include <vector>

#include "dw2/field.hpp"

namespace dw2 {

// A homogeneous differential form of degree q over k = F_{2^e}(t_1..t_d),
// stored as sum_{|xi|=q} lambda_xi (dx)^xi with (dx)^xi the wedge of the dx_i
// for i in xi.
class DiffForm {
  public:
    static DiffForm zero(const FieldSpec& s, int q);
    static DiffForm from_terms(const FieldSpec& s, int q,
                               std::map<uint32_t, FieldElem> coeffs);

    const FieldSpec& spec() const { return *spec_; }
    int q() const { return q_; }
    const std::map<uint32_t, FieldElem>& coeffs() const { return coeffs_; }
    FieldElem coeff(uint32_t xi) const;
    bool is_zero() const;

    DiffForm operator+(const DiffForm& o) const;
    DiffForm left_mul(const FieldElem& a) const;
    bool operator==(const DiffForm& o) const {
        return q_ == o.q_ && coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

  private:
    const FieldSpec* spec_ = nullptr;
    int q_ = 0;
    std::map<uint32_t, FieldElem> coeffs_;  // keyed by xi, |xi| == q
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);

// d(a (dx)^xi) = sum s_eta != 0} s_eta^2 d(x^eta)(dx)^xi; a derivation with
// d o d = 0 in characteristic 2
DiffForm d_op(const DiffForm& w);

// membership test for the subspace d(Omega^{q-1}) of Omega^q; exact, via the
// S-linear system on square-decomposition coordinates
bool is_exact_form(const DiffForm& omega);
// normal form of the class of omega in Omega^q/d(Omega^{q-1})
DiffForm exact_form_reduce(const DiffForm& omega);
// witness eta with d(eta) = omega, when omega is exact
std::optional<DiffForm> exact_form_witness(const DiffForm& omega);

// C^{-1}(a (dx)^xi) = a^2 x^xi (dx)^xi on the monomial basis, additive; the raw
// value before reduction into Omega^q/d(Omega^{q-1})
DiffForm inverse_cartier_raw(const DiffForm& omega);
// class of C^{-1}(omega) in Omega^q/d(Omega^{q-1})
DiffForm inverse_cartier(const DiffForm& omega);

// pi(omega) == C^{-1}(omega) as classes in Omega^q/d(Omega^{q-1})
bool nu_member(const DiffForm& omega);

struct EpsClassResult {
    DiffForm value;          // residual representative modulo Im(pi - C^{-1})
    bool resolved = false;
    std::vector<std::string> witness;  // generators used, for the log
};

// bounded reduction of a class in Omega^q/dOmega^{q-1} modulo Im(pi - C^{-1});
// semidecidable, reports unresolved when the bound is exhausted
EpsClassResult eps_class(const DiffForm& omega_bar, int degree_bound);

}  // namespace dw2

#endif
