#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zartan/field.hpp"
#include "zartan/groebner.hpp"
#include "zartan/linalg.hpp"
#include "zartan/poly.hpp"
#include "zartan/univar.hpp"

using namespace zartan;

static Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

TEST_CASE("rational field arithmetic") {
    FieldPtr q = Field::rationals();
    FElem a = q->from_mpq(mpq_class(3, 4));
    FElem b = q->from_int(-2);
    CHECK(elem_str(add(a, b)) == "-5/4");
    CHECK(elem_str(mul(a, b)) == "-3/2");
    CHECK(elem_str(invert(a)) == "4/3");
    CHECK(equal(divide(a, a), q->one()));
    CHECK(is_zero(sub(a, a)));
}

TEST_CASE("prime field arithmetic") {
    FieldPtr f5 = Field::prime_field(5);
    FElem a = f5->from_int(3);
    CHECK(elem_str(invert(a)) == "2");
    CHECK(elem_str(pow_el(a, 4)) == "1");
    CHECK(elem_str(neg(a)) == "2");
    CHECK_THROWS_AS((void)Field::prime_field(6), SemanticError);
    CHECK_THROWS_AS((void)invert(f5->from_int(0)), SemanticError);
}

TEST_CASE("polynomial parsing and printing round trip") {
    RingPtr r = Ring::make(Field::rationals(), {"x", "y"});
    Polynomial p = P(r, "x^2*y - 3/2*x + 1");
    CHECK(p.str() == "x^2*y - 3/2*x + 1");
    CHECK(P(r, p.str()) == p);
    CHECK(P(r, "(x+y)^2") == P(r, "x^2 + 2x*y + y^2"));
    CHECK(P(r, "x - x").is_zero());
    CHECK_THROWS_AS((void)P(r, "x +"), ParseError);
    CHECK_THROWS_AS((void)P(r, "z + 1"), SemanticError);
}

TEST_CASE("derivative respects the characteristic") {
    RingPtr r2 = Ring::make(Field::prime_field(2), {"u", "v"});
    Polynomial p = P(r2, "v^2 + u");
    CHECK(p.derivative(1).is_zero());
    CHECK(p.derivative(0) == P(r2, "1"));

    RingPtr rq = Ring::make(Field::rationals(), {"x"});
    CHECK(P(rq, "x^4").derivative(0) == P(rq, "4x^3"));
}

TEST_CASE("groebner basis of (y - x^2, y^2) under lex y > x") {
    RingPtr r = Ring::make(Field::rationals(), {"x", "y"});
    // Default precedence: the last listed variable is most significant.
    MonomialOrder ord = MonomialOrder::lex(2);
    GroebnerBasis gb = buchberger(r, {P(r, "y - x^2"), P(r, "y^2")}, ord);
    REQUIRE(gb.polys.size() == 2);
    CHECK(gb.polys[0] == P(r, "x^4"));
    CHECK(gb.polys[1] == P(r, "y - x^2"));
    CHECK(normal_form(P(r, "y^2 + x^4"), gb).is_zero());
    CHECK(normal_form(P(r, "y"), gb) == P(r, "x^2"));
    CHECK(zero_dimensional(gb));
    CHECK(quotient_staircase(gb).size() == 4);
}

TEST_CASE("unit ideal and krull dimension") {
    RingPtr r = Ring::make(Field::rationals(), {"x", "y"});
    GroebnerBasis unit = buchberger(r, {P(r, "x"), P(r, "x + 1")}, MonomialOrder::grevlex(2));
    CHECK(is_unit_ideal(unit));
    CHECK_THROWS_AS((void)krull_dimension(unit), UnitIdeal);

    GroebnerBasis curve = buchberger(r, {P(r, "y^2 - x^3")}, MonomialOrder::grevlex(2));
    CHECK(krull_dimension(curve) == 1);
    CHECK(!zero_dimensional(curve));
    CHECK_THROWS_AS((void)quotient_staircase(curve), NotZeroDimensional);

    GroebnerBasis zero = buchberger(r, {}, MonomialOrder::grevlex(2));
    CHECK(krull_dimension(zero) == 2);
}

TEST_CASE("quotient field Q(i)") {
    RingPtr r = Ring::make(Field::rationals(), {"i"});
    GroebnerBasis gb = buchberger(r, {P(r, "i^2 + 1")}, MonomialOrder::lex(1));
    FieldPtr qi = Field::quotient(std::make_shared<GroebnerBasis>(gb));
    CHECK(qi->degree_over_coeff() == 2);
    CHECK(qi->characteristic() == 0);
    CHECK(!qi->finite());
    FElem i = qi->generator(0);
    CHECK(is_zero(add(mul(i, i), qi->one())));
    // 1/(1+i) = (1-i)/2
    FElem inv = invert(add(qi->one(), i));
    CHECK(equal(inv, divide(sub(qi->one(), i), qi->from_int(2))));
}

TEST_CASE("zero divisor witness in a non-maximal quotient") {
    RingPtr r = Ring::make(Field::rationals(), {"x"});
    GroebnerBasis gb = buchberger(r, {P(r, "x^2 - 1")}, MonomialOrder::lex(1));
    FieldPtr bad = Field::quotient(std::make_shared<GroebnerBasis>(gb));
    FElem e = sub(bad->generator(0), bad->one());  // x - 1 is a zero divisor
    CHECK_THROWS_AS((void)invert(e), ZeroDivisorWitness);
    try {
        (void)invert(e);
    } catch (const ZeroDivisorWitness& w) {
        CHECK(!w.witness.empty());
    }
}

TEST_CASE("finite quotient field F4") {
    RingPtr r = Ring::make(Field::prime_field(2), {"a"});
    GroebnerBasis gb = buchberger(r, {P(r, "a^2 + a + 1")}, MonomialOrder::lex(1));
    FieldPtr f4 = Field::quotient(std::make_shared<GroebnerBasis>(gb));
    CHECK(f4->finite());
    CHECK(*f4->cardinality() == 4);
    FElem a = f4->generator(0);
    CHECK(equal(pow_el(a, 3), f4->one()));
    CHECK(equal(invert(a), add(a, f4->one())));
}

TEST_CASE("fraction field of Q[t] as residue field of the generic point") {
    RingPtr r = Ring::make(Field::rationals(), {"t"});
    GroebnerBasis gb = buchberger(r, {}, MonomialOrder::lex(1));
    FieldPtr qt = Field::fraction(std::make_shared<GroebnerBasis>(gb));
    FElem t = qt->generator(0);
    FElem e = divide(qt->one(), add(t, qt->one()));  // 1/(t+1)
    CHECK(equal(mul(e, add(t, qt->one())), qt->one()));
    CHECK(!qt->finite());
    CHECK(qt->characteristic() == 0);
}

TEST_CASE("fraction field over a non-prime ideal yields a witness") {
    RingPtr r = Ring::make(Field::rationals(), {"x"});
    GroebnerBasis gb = buchberger(r, {P(r, "x^2 - x")}, MonomialOrder::lex(1));
    FieldPtr bad = Field::fraction(std::make_shared<GroebnerBasis>(gb));
    FElem x = bad->generator(0);
    FElem a = divide(bad->one(), x);                      // 1/x
    FElem b = divide(bad->one(), sub(x, bad->one()));     // 1/(x-1)
    CHECK_THROWS_AS((void)mul(a, b), ZeroDivisorWitness);
}

TEST_CASE("linear algebra over Q") {
    FieldPtr q = Field::rationals();
    Matrix m(q, 2, 3);
    // [1 2 3; 2 4 6] has rank 1, kernel dim 2
    int vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = q->from_int(vals[i][j]);
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker)
        for (size_t i = 0; i < 2; ++i) {
            FElem s = q->zero();
            for (size_t j = 0; j < 3; ++j) s = add(s, mul(m.at(i, j), v[j]));
            CHECK(is_zero(s));
        }

    Matrix a(q, 2, 2);
    a.at(0, 0) = q->from_int(1);
    a.at(0, 1) = q->from_int(2);
    a.at(1, 0) = q->from_int(3);
    a.at(1, 1) = q->from_int(4);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(is_identity(mat_mul(a, *inv)));

    std::vector<FElem> b = {q->from_int(5), q->from_int(11)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(elem_str((*x)[0]) == "1");
    CHECK(elem_str((*x)[1]) == "2");
}

TEST_CASE("span comparison") {
    FieldPtr q = Field::rationals();
    std::vector<std::vector<FElem>> a = {{q->from_int(1), q->from_int(0)},
                                         {q->from_int(1), q->from_int(1)}};
    std::vector<std::vector<FElem>> b = {{q->from_int(0), q->from_int(1)},
                                         {q->from_int(2), q->from_int(0)}};
    std::vector<std::vector<FElem>> c = {{q->from_int(1), q->from_int(1)}};
    CHECK(same_span(q, a, b));
    CHECK(!same_span(q, a, c));
    CHECK(span_rank(q, c) == 1);
    CHECK(span_rank(q, {}) == 0);
}

TEST_CASE("univariate gcd and division") {
    FieldPtr q = Field::rationals();
    UPoly x = UPoly::x(q);
    UPoly f = (x * x - UPoly::one(q)) * (x + UPoly::one(q));  // (x^2-1)(x+1)
    UPoly g = x * x - UPoly::one(q);
    CHECK(upoly_gcd(f, g) == g.monic());
    auto [quo, rem] = divmod(f, g);
    CHECK(rem.is_zero());
    CHECK(quo == x + UPoly::one(q));
}

TEST_CASE("minimal polynomial of i over Q") {
    RingPtr r = Ring::make(Field::rationals(), {"i"});
    GroebnerBasis gb = buchberger(r, {P(r, "i^2 + 1")}, MonomialOrder::lex(1));
    FieldPtr qi = Field::quotient(std::make_shared<GroebnerBasis>(gb));
    UPoly mu = minimal_polynomial(qi->generator(0));
    CHECK(mu.deg() == 2);
    CHECK(mu.str() == "t^2 + 1");
    // An element of the prime field has a linear minimal polynomial.
    UPoly nu = minimal_polynomial(add(qi->one(), qi->one()));
    CHECK(nu.deg() == 1);
}

TEST_CASE("minimal polynomial through a fraction field") {
    RingPtr r = Ring::make(Field::rationals(), {"x"});
    GroebnerBasis gb = buchberger(r, {P(r, "x^2 - 2")}, MonomialOrder::lex(1));
    FieldPtr k = Field::fraction(std::make_shared<GroebnerBasis>(gb));
    FElem e = divide(k->one(), k->generator(0));  // 1/sqrt(2)
    UPoly mu = minimal_polynomial(e);
    CHECK(mu.deg() == 2);
    CHECK(mu.str() == "t^2 - 1/2");
}

TEST_CASE("irreducibility over finite fields") {
    std::mt19937_64 rng(42);
    FieldPtr f2 = Field::prime_field(2);
    FieldPtr f3 = Field::prime_field(3);

    UPoly x2 = UPoly::x(f2);
    UPoly irred2 = x2 * x2 + x2 + UPoly::one(f2);  // t^2+t+1 irreducible over F2
    CHECK(irreducibility_check(irred2, rng, false).status == IrredStatus::Irreducible);

    UPoly red2 = x2 * x2 + UPoly::one(f2);  // (t+1)^2
    auto r2 = irreducibility_check(red2, rng, false);
    REQUIRE(r2.status == IrredStatus::Reducible);
    CHECK(divmod(red2, r2.factor).second.is_zero());

    UPoly x3 = UPoly::x(f3);
    UPoly irr3 = x3 * x3 + UPoly::one(f3);  // t^2+1 irreducible over F3
    CHECK(irreducibility_check(irr3, rng, false).status == IrredStatus::Irreducible);

    // t^2+2 = (t+1)(t+2) over F3: squarefree split, needs equal-degree step.
    UPoly split3 = x3 * x3 + UPoly::constant(f3, f3->from_int(2));
    auto r3 = irreducibility_check(split3, rng, false);
    REQUIRE(r3.status == IrredStatus::Reducible);
    CHECK(r3.factor.deg() == 1);
    CHECK(divmod(split3, r3.factor).second.is_zero());
}

TEST_CASE("irreducibility over Q") {
    std::mt19937_64 rng(42);
    FieldPtr q = Field::rationals();
    UPoly x = UPoly::x(q);

    UPoly sq = x * x - UPoly::constant(q, q->from_int(1));
    auto r = irreducibility_check(sq, rng, false);
    REQUIRE(r.status == IrredStatus::Reducible);
    CHECK(r.factor.deg() == 1);

    UPoly irr = x * x + UPoly::one(q);
    CHECK(irreducibility_check(irr, rng, false).status == IrredStatus::Irreducible);

    // x^3 - 2: no rational root, degree 3 shortcut.
    UPoly c3 = x * x * x - UPoly::constant(q, q->from_int(2));
    CHECK(irreducibility_check(c3, rng, false).status == IrredStatus::Irreducible);

    // x^4 + 1 is irreducible over Q but reducible mod every prime: Skipped.
    UPoly c4 = x * x * x * x + UPoly::one(q);
    CHECK(irreducibility_check(c4, rng, false).status == IrredStatus::Skipped);

    // x^4 + x + 1 is irreducible mod 2, certified.
    UPoly c5 = x * x * x * x + x + UPoly::one(q);
    CHECK(irreducibility_check(c5, rng, false).status == IrredStatus::Irreducible);

    CHECK(irreducibility_check(irr, rng, true).status == IrredStatus::Skipped);
}

TEST_CASE("substitution and evaluation") {
    FieldPtr q = Field::rationals();
    RingPtr r = Ring::make(q, {"x", "y"});
    Polynomial p = P(r, "x^2 + y");
    CoeffMap id = [](const FElem& c) { return c; };
    FElem v = p.evaluate({q->from_int(2), q->from_int(-1)}, id);
    CHECK(elem_str(v) == "3");

    RingPtr r1 = Ring::make(q, {"t"});
    Polynomial img = p.substitute(r1, {P(r1, "t"), P(r1, "t^2")}, id);
    CHECK(img == P(r1, "2t^2"));
}
