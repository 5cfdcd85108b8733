#include "doctest.h"
#include "dw2/field.hpp"
#include "dw2/random_elems.hpp"

#include <set>

using namespace dw2;

TEST_CASE("gf2e arithmetic") {
    Gf2eCtx F(4);
    for (Gf2e a = 1; a < 16; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(F.sqrt(a), F.sqrt(a)) == a);
    }
    CHECK(F.add(7, 7) == 0);
    Gf2eCtx F1(1);
    CHECK(F1.mul(1, 1) == 1);
    CHECK(F1.sqrt(1) == 1);
    CHECK_THROWS(Gf2eCtx(4, 0x18));  // x^4 + x^3 is reducible
}

TEST_CASE("parse and print round-trip") {
    FieldSpec s(1, 1);
    FieldElem a = parse_elem("t^3+1", s);
    CHECK(a.den().is_one());
    CHECK(a.to_string() == "(t^3 + 1)/(1)");

    CHECK(parse_elem("(t+1)/(t+1)", s).is_one());
    CHECK_THROWS_AS(parse_elem("1/0", s), std::domain_error);
    CHECK_THROWS_AS(parse_elem("t+", s), ParseError);
    CHECK_THROWS_AS(parse_elem("x+1", s), ParseError);

    Rng rng(12345);
    for (int i = 0; i < 200; ++i) {
        FieldElem x = rand_fraction(s, rng);
        CHECK(parse_elem(x.to_string(), s) == x);
    }
    FieldSpec s2(3, 2);
    for (int i = 0; i < 200; ++i) {
        FieldElem x = rand_fraction(s2, rng);
        CHECK(parse_elem(x.to_string(), s2) == x);
    }
}

TEST_CASE("field arithmetic axioms") {
    FieldSpec s(1, 2);
    Rng rng(99);
    FieldElem t = FieldElem::variable(s, 0);
    CHECK((t + t).is_zero());
    CHECK((t * t.inv()).is_one());
    FieldElem tp1 = parse_elem("t+1", s);
    CHECK(tp1.pow(2) == parse_elem("t^2+1", s));
    CHECK_THROWS_AS(FieldElem::zero(s).inv(), std::domain_error);

    for (int i = 0; i < 100; ++i) {
        FieldElem a = rand_fraction(s, rng), b = rand_fraction(s, rng), c = rand_fraction(s, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inv() == FieldElem::one(s));
        CHECK((a + b).square() == a.square() + b.square());
    }
}

TEST_CASE("sqrt") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    CHECK(*(t.square() + t.pow(4)).sqrt() == t + t.square());
    CHECK_FALSE(t.sqrt().has_value());
    FieldSpec s4(4, 1);
    for (Gf2e c = 1; c < 16; ++c) {
        FieldElem e = FieldElem::constant(s4, c);
        auto r = e.sqrt();
        REQUIRE(r.has_value());
        CHECK(r->square() == e);
        CHECK(*r == FieldElem::constant(s4, s4.gf().pow(c, 1u << 3)));
    }
}

TEST_CASE("square_decomp") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);

    auto d1 = parse_elem("t^3+1", s).square_decomp();
    REQUIRE(d1.size() == 2);
    CHECK(d1.at(0) == FieldElem::one(s));
    CHECK(d1.at(1) == t);

    auto d2 = parse_elem("1/t", s).square_decomp();
    REQUIRE(d2.size() == 1);
    CHECK(d2.at(1) == t.inv());

    FieldSpec s2(1, 2);
    auto d3 = parse_elem("t*u+1", s2).square_decomp();
    REQUIRE(d3.size() == 2);
    CHECK(d3.at(0) == FieldElem::one(s2));
    CHECK(d3.at(3) == FieldElem::one(s2));

    Rng rng(7);
    for (auto spec : {FieldSpec(1, 1), FieldSpec(1, 2), FieldSpec(2, 3)}) {
        for (int i = 0; i < 100; ++i) {
            FieldElem a = rand_fraction(spec, rng);
            CHECK(reconstitute(spec, a.square_decomp()) == a);
        }
    }
}

TEST_CASE("square_decomp is additive in the squares sense") {
    FieldSpec s(1, 2);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        FieldElem a = rand_fraction(s, rng), b = rand_fraction(s, rng);
        auto da = a.square_decomp(), db = b.square_decomp(), dab = (a + b).square_decomp();
        std::set<uint32_t> keys;
        for (auto& [k, v] : da) keys.insert(k);
        for (auto& [k, v] : db) keys.insert(k);
        for (uint32_t k : keys) {
            FieldElem sa = da.count(k) ? da.at(k) : FieldElem::zero(s);
            FieldElem sb = db.count(k) ? db.at(k) : FieldElem::zero(s);
            FieldElem sab = dab.count(k) ? dab.at(k) : FieldElem::zero(s);
            CHECK(sab == sa + sb);
        }
    }
}

TEST_CASE("mod_squares") {
    FieldSpec s(1, 1);
    FieldElem t = FieldElem::variable(s, 0);
    CHECK(t.square().mod_squares().is_zero());
    CHECK(parse_elem("t^3+1", s).mod_squares() == parse_elem("t^3", s));
    CHECK(t.mod_squares() == t);

    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        FieldElem a = rand_fraction(s, rng), c = rand_fraction(s, rng);
        CHECK((a + c.square()).mod_squares() == a.mod_squares());
    }
}

TEST_CASE("poly gcd reduction") {
    FieldSpec s(1, 2);
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        FieldElem a = rand_poly_elem(s, rng), b = rand_nonzero(s, rng), c = rand_nonzero(s, rng);
        // (a*c)/(b*c) must equal a/b in reduced form
        FieldElem lhs = FieldElem::make(s, a.num().mul(c.num(), s.gf()), b.num().mul(c.num(), s.gf()));
        CHECK(lhs == a / b);
    }
    FieldSpec s3(2, 3);
    for (int i = 0; i < 60; ++i) {
        FieldElem a = rand_poly_elem(s3, rng, 2), b = rand_nonzero(s3, rng, 2), c = rand_nonzero(s3, rng, 2);
        FieldElem lhs =
            FieldElem::make(s3, a.num().mul(c.num(), s3.gf()), b.num().mul(c.num(), s3.gf()));
        CHECK(lhs == a / b);
    }
}
