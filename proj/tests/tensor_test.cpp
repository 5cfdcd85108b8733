#include "doctest.h"
#include "dw2/tensor.hpp"
#include "dw2/random_elems.hpp"

using namespace dw2;

TEST_CASE("tensor ring basics") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);

    // (1 (x) t)^2 = t^2 (1 (x) 1), i.e. t^2 crosses the tensor
    TensorElem x = TensorElem::elementary(one, t);
    CHECK(x * x == TensorElem::one(s).left_scalar(t.square()));

    CHECK(TensorElem::one(s).left_scalar(t) == TensorElem::elementary(t, one));
    CHECK((x + x).is_zero());
}

TEST_CASE("s-basis round trip") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);

    auto m1 = to_s_basis(TensorElem::elementary(t, one));
    REQUIRE(m1.cells().size() == 1);
    CHECK(m1.cell(1, 0) == one);

    // t^3 (x) t = t^2 (t (x) t)
    auto m2 = to_s_basis(TensorElem::elementary(t.pow(3), t));
    REQUIRE(m2.cells().size() == 1);
    CHECK(m2.cell(1, 1) == t.square());

    auto m3 = to_s_basis(TensorElem::one(s));
    REQUIRE(m3.cells().size() == 1);
    CHECK(m3.cell(0, 0) == one);

    Rng rng(3);
    for (auto spec : {FieldSpec(1, 1), FieldSpec(1, 2), FieldSpec(2, 2)}) {
        for (int i = 0; i < 100; ++i) {
            TensorElem x = rand_tensor(spec, rng);
            SBasisMatrix m = to_s_basis(x);
            CHECK(from_s_basis(m) == x);
            for (auto& [k, u] : m.cells()) CHECK(u.sqrt().has_value());
        }
    }
}

TEST_CASE("involution w") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);
    CHECK(involution_w(TensorElem::elementary(t, one)) == TensorElem::elementary(one, t));
    CHECK(involution_w(TensorElem::elementary(t, t)) == TensorElem::elementary(t, t));
    CHECK(involution_w(delta(t)) == delta(t));

    Rng rng(4);
    FieldSpec s2(1, 2);
    for (int i = 0; i < 100; ++i) {
        TensorElem x = rand_tensor(s2, rng);
        CHECK(involution_w(involution_w(x)) == x);
        CHECK(mu(involution_w(x)) == mu(x));
        // w is S-linear
        FieldElem c = rand_fraction(s2, rng);
        CHECK(involution_w(x.left_scalar(c.square())) == involution_w(x).left_scalar(c.square()));
    }
}

TEST_CASE("mu and delta") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    CHECK(mu(delta(t)).is_zero());
    CHECK(mu(TensorElem::elementary(t, t)) == t.square());
    CHECK(mu(TensorElem::one(s)) == FieldElem::one(s));

    // Delta(t) has coordinates {0 -> t, 1 -> 1}
    TensorElem dt = delta(t);
    auto& c = dt.coords();
    REQUIRE(c.size() == 2);
    CHECK(c.at(0) == t);
    CHECK(c.at(1) == FieldElem::one(s));

    CHECK(delta(t.square()).is_zero());
    CHECK(delta(t.pow(3)) == delta(t).left_scalar(t.square()));

    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        FieldElem a = rand_fraction(s, rng), b = rand_fraction(s, rng);
        CHECK(delta(a + b) == delta(a) + delta(b));
        CHECK(mu(delta(a)).is_zero());
    }
}

TEST_CASE("phi on elementary tensors") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);

    CHECK(phi_elementary(one, t) == TensorElem::elementary(t, t));
    CHECK(phi_power(1, t, one) == TensorElem::elementary(t.square(), one));
    CHECK(phi_power(2, t, t) == TensorElem::elementary(t.pow(7), t));
    CHECK(phi_power(0, t, one) == TensorElem::elementary(t, one));

    Rng rng(11);
    FieldSpec s2(1, 2);
    for (int i = 0; i < 40; ++i) {
        FieldElem a = rand_fraction(s2, rng, 2), b = rand_fraction(s2, rng, 2);
        for (int n = 1; n <= 3; ++n) CHECK(is_fixed(phi_power(n, a, b)));
        // phi^{n+1} = phi^n composed with the elementary phi
        CHECK(phi_power(2, a, b) == phi_power(1, b * a.square(), b));
    }
}

TEST_CASE("phi_bar") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);

    CHECK(phi_bar(TensorElem::elementary(one, t)) == pi_quotient(TensorElem::elementary(t, t)));
    // Delta(t) -> class of t (x) t + t^2 (1 (x) 1)
    TensorElem expect = TensorElem::elementary(t, t) + TensorElem::one(s).left_scalar(t.square());
    CHECK(phi_bar(delta(t)) == pi_quotient(expect));
    CHECK(phi_bar(TensorElem::one(s)) == pi_quotient(TensorElem::one(s)));

    Rng rng(17);
    for (auto spec : {FieldSpec(1, 1), FieldSpec(1, 2)}) {
        for (int i = 0; i < 200; ++i) {
            TensorElem x = rand_tensor(spec, rng), y = rand_tensor(spec, rng);
            // additive
            CHECK(phi_bar(x + y) == phi_bar(x) + phi_bar(y));
            // agrees with the elementary formula
            FieldElem a = rand_fraction(spec, rng), b = rand_fraction(spec, rng);
            CHECK(phi_bar(TensorElem::elementary(a, b)) == pi_quotient(phi_elementary(a, b)));
            // mu-square compatibility: mu(phi_bar(x)) = mu(x)^2
            CHECK(mu(from_s_basis(phi_bar(x).matrix())) == mu(x).square());
            // multiplicative on the nose for the cellwise formula
            CHECK(phi_bar(x * y) == pi_quotient(from_s_basis(phi_bar(x).matrix()) *
                                                from_s_basis(phi_bar(y).matrix())));
        }
    }
}

TEST_CASE("pi_quotient and fixedness") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    CHECK(pi_quotient(delta(t)).is_zero());
    CHECK(is_fixed(TensorElem::elementary(t, t)));
    CHECK_FALSE(in_image_1pw(TensorElem::elementary(t, t)));
    CHECK(in_image_1pw(delta(t)));

    Rng rng(23);
    FieldSpec s2(1, 2);
    for (int i = 0; i < 100; ++i) {
        TensorElem x = rand_tensor(s2, rng);
        TensorElem sym = x + involution_w(x);
        CHECK(in_image_1pw(sym));
        CHECK(pi_quotient(sym).is_zero());
        CHECK(is_fixed(sym));
    }
}

TEST_CASE("phi_inv_pi") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);
    CHECK(phi_inv_pi(TensorElem::elementary(t, t)) == TensorElem::elementary(one, t));
    CHECK(phi_inv_pi(TensorElem::one(s)) == TensorElem::one(s));
    CHECK(phi_inv_pi(delta(t)).is_zero());

    Rng rng(31);
    for (auto spec : {FieldSpec(1, 1), FieldSpec(1, 2)}) {
        for (int i = 0; i < 200; ++i) {
            // phi_bar is bijective onto the quotient of the fixed part
            TensorElem x = rand_fixed_tensor(spec, rng);
            CHECK(phi_bar(phi_inv_pi(x)) == pi_quotient(x));
            // and phi_inv_pi recovers preimages: phi_inv_pi(rep(phi_bar(y))) = y
            TensorElem y = rand_tensor(spec, rng);
            CHECK(phi_inv_pi(from_s_basis(phi_bar(y).matrix())) == y);
        }
    }
}

TEST_CASE("delta basis coordinates") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    FieldElem one = FieldElem::one(s);

    auto c1 = delta_basis_coords(TensorElem::elementary(one, t));
    REQUIRE(c1.size() == 2);
    CHECK(c1.at(0) == t);
    CHECK(c1.at(1) == one);

    auto c2 = delta_basis_coords(delta(t));
    REQUIRE(c2.size() == 1);
    CHECK(c2.at(1) == one);

    auto c3 = delta_basis_coords(TensorElem::elementary(t, one));
    REQUIRE(c3.size() == 1);
    CHECK(c3.at(0) == t);

    Rng rng(37);
    FieldSpec s2(1, 2);
    for (int i = 0; i < 100; ++i) {
        TensorElem x = rand_tensor(s2, rng);
        CHECK(from_delta_basis(s2, delta_basis_coords(x)) == x);
    }
}

TEST_CASE("j1 degree") {
    FieldSpec s2(1, 2);
    FieldElem t = FieldElem::variable(s2, 0), u = FieldElem::variable(s2, 1);
    CHECK(j1_degree(delta(t) * delta(u)) == 2);
    CHECK(j1_degree(TensorElem::one(s2)) == 0);
    CHECK(j1_degree(delta(t.pow(3))) == 1);
    CHECK(j1_degree(TensorElem::zero(s2)) == kInfiniteDegree);

    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        TensorElem x = rand_tensor(s2, rng), y = rand_tensor(s2, rng);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(j1_degree(x * y) >= j1_degree(x) + j1_degree(y));
    }
}

TEST_CASE("bredon homology") {
    FieldSpec s(1, 1);
    auto r = bredon_homology(s, 1);
    CHECK(r.dim_fixed == 3);
    CHECK(r.rank_1pw == 1);
    CHECK(r.dim_quotient == 2);
    REQUIRE(r.dims.size() == 2);
    CHECK(r.dims[0] == 2);  // H_1
    CHECK(r.dims[1] == 3);  // H_2

    auto r0 = bredon_homology(s, 0);
    REQUIRE(r0.dims.size() == 1);
    CHECK(r0.dims[0] == 3);

    FieldSpec s2(1, 2);
    auto r2 = bredon_homology(s2, 2);
    CHECK(r2.dim_fixed == 10);
    CHECK(r2.rank_1pw == 6);
    CHECK(r2.dim_quotient == 4);
    REQUIRE(r2.dims.size() == 3);
    CHECK(r2.dims[0] == 4);
    CHECK(r2.dims[1] == 4);   // middle degrees: ker/im = (16-6)-6
    CHECK(r2.dims[2] == 10);  // top degree: fixed = ker(1+w)
    // quotient dimension in middle degrees equals dim_S k = 2^d
    CHECK(r2.dim_quotient == 4);
}
