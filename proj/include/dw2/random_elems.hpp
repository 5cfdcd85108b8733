#ifndef DW2_RANDOM_ELEMS_HPP
#define DW2_RANDOM_ELEMS_HPP

#include "dw2/field.hpp"
#include "dw2/rng.hpp"
#include "dw2/tensor.hpp"

namespace dw2 {

// Random polynomial with a handful of terms of total degree <= max_deg and
// nonzero coefficients. Suites default to max_deg = 3.
inline FieldElem rand_poly_elem(const FieldSpec& s, Rng& rng, int max_deg = 3) {
    std::vector<MultiPoly::Term> ts;
    int nterms = 1 + int(rng.below(4));
    for (int i = 0; i < nterms; ++i) {
        Mono m;
        int budget = max_deg;
        for (int v = 0; v < s.d(); ++v) {
            int e = int(rng.below(uint64_t(budget) + 1));
            m = m * Mono::var(v, e);
            budget -= e;
        }
        Gf2e c = Gf2e(rng.below((uint64_t(1) << s.e()) - 1) + 1);
        ts.push_back({m, c});
    }
    return FieldElem::from_poly(s, MultiPoly::from_terms(std::move(ts), s.gf()));
}

inline FieldElem rand_nonzero(const FieldSpec& s, Rng& rng, int max_deg = 3) {
    for (;;) {
        FieldElem a = rand_poly_elem(s, rng, max_deg);
        if (!a.is_zero()) return a;
    }
}

inline FieldElem rand_fraction(const FieldSpec& s, Rng& rng, int max_deg = 3) {
    return rand_poly_elem(s, rng, max_deg) / rand_nonzero(s, rng, max_deg);
}

inline TensorElem rand_tensor(const FieldSpec& s, Rng& rng, int max_deg = 3) {
    std::map<uint32_t, FieldElem> coords;
    int n = 1 + int(rng.below(3));
    for (int i = 0; i < n; ++i) {
        uint32_t xi = uint32_t(rng.below(s.subset_count()));
        auto it = coords.find(xi);
        FieldElem c = rand_poly_elem(s, rng, max_deg);
        if (it == coords.end())
            coords.emplace(xi, c);
        else
            it->second = it->second + c;
    }
    return TensorElem::from_coords(s, std::move(coords));
}

// random w-fixed element, built from a symmetric S-basis matrix
inline TensorElem rand_fixed_tensor(const FieldSpec& s, Rng& rng, int max_deg = 3) {
    SBasisMatrix m(s);
    int n = 1 + int(rng.below(3));
    for (int i = 0; i < n; ++i) {
        uint32_t a = uint32_t(rng.below(s.subset_count()));
        uint32_t b = uint32_t(rng.below(s.subset_count()));
        FieldElem u = rand_poly_elem(s, rng, max_deg).square();
        m.accumulate(a, b, u);
        if (a != b) m.accumulate(b, a, u);
    }
    return from_s_basis(m);
}

}  // namespace dw2

#endif
