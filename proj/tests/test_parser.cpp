#include <catch2/catch_amalgamated.hpp>

#include <towerlab/parser.hpp>

using namespace towerlab;

namespace {
FiniteField f8() { return FiniteField(2, {1, 1, 0, 1}); }
FiniteField f9() { return FiniteField(3, {1, 0, 1}); }
}  // namespace

TEST_CASE("parses rational expressions") {
    FiniteField f = f8();
    RationalFunction r = parse_rational("(x^2+1)/x^3", f);
    CHECK(r.num() == Polynomial::from_ints(f, {1, 0, 1}));
    CHECK(r.den() == Polynomial::from_ints(f, {0, 0, 0, 1}));

    Polynomial p = parse_polynomial("y^3+y", f);
    CHECK(p == Polynomial::from_ints(f, {0, 1, 0, 1}));

    FiniteField g = f9();
    RationalFunction s = parse_rational("(t+2)^2/(2*t)", g);
    // (t^2+4t+4)/(2t) = (t^2+t+1)/(2t); monic denominator form doubles both
    CHECK(s == RationalFunction::normalized(Polynomial::from_ints(g, {2, 2, 2}),
                                            Polynomial::from_ints(g, {0, 1})));
    CHECK(s.den().is_monic());
}

TEST_CASE("constants and the generator symbol") {
    FiniteField f = f8();
    CHECK(parse_element("g^2+g", f) == f.element({0, 1, 1}));
    CHECK(parse_element("7", f) == f.one());
    RationalFunction r = parse_rational("g^2*x+g", f);
    CHECK(r.num().coeff(1) == f.element({0, 0, 1}));
    CHECK(r.num().coeff(0) == f.generator());
    CHECK_THROWS_AS(parse_element("x+1", f), spec_error);
}

TEST_CASE("variable discipline") {
    FiniteField f = f8();
    auto p = parse_expression("y^3+y", f);
    CHECK(p.variable == 'y');
    CHECK(!parse_expression("g^2+1", f).variable.has_value());
    CHECK_THROWS_AS(parse_rational("x+y", f), syntax_error);
    CHECK_THROWS_AS(parse_rational("xy", f), unknown_symbol_error);
}

TEST_CASE("syntax errors carry a position") {
    FiniteField f = f8();
    CHECK_THROWS_AS(parse_rational("x^", f), syntax_error);
    CHECK_THROWS_AS(parse_rational("(x+1", f), syntax_error);
    CHECK_THROWS_AS(parse_rational("x++1", f), syntax_error);
    CHECK_THROWS_AS(parse_rational("", f), syntax_error);
    CHECK_THROWS_AS(parse_rational("x^-2", f), syntax_error);
    try {
        parse_rational("x^d", f);
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("division by the zero expression") {
    FiniteField f = f8();
    CHECK_THROWS_AS(parse_rational("x/(x+x)", f), zero_denominator_error);
}

TEST_CASE("unary minus and binary minus") {
    FiniteField f = f9();
    CHECK(parse_rational("-x+1", f) ==
          RationalFunction::from_polynomial(Polynomial::from_ints(f, {1, 2})));
    CHECK(parse_rational("x^2/(x-1)", f) ==
          RationalFunction::normalized(Polynomial::from_ints(f, {0, 0, 1}),
                                       Polynomial::from_ints(f, {2, 1})));
}

TEST_CASE("projective values") {
    FiniteField f = f8();
    CHECK(parse_projective("inf", f).is_infinity());
    CHECK(parse_projective(" g^2+1 ", f) == ProjectiveValue::finite(f.element({1, 0, 1})));
}

TEST_CASE("step equations use x and y") {
    FiniteField f = f8();
    BivariatePolynomial h = parse_step_equation("y^2 + (1/x)*y + (x^2+1)/x^2", f);
    CHECK(h == parse_step_equation("x^2*y^2 + x*y + x^2 + 1", f));
    CHECK_THROWS_AS(parse_step_equation("y^2 + z", f), syntax_error);
}

TEST_CASE("prime modulus text") {
    CHECK(parse_prime_modulus("t^3+t+1", 2) == std::vector<long long>({1, 1, 0, 1}));
    CHECK(parse_prime_modulus("t^2+1", 3) == std::vector<long long>({1, 0, 1}));
    CHECK(parse_prime_modulus("t", 5) == std::vector<long long>({0, 1}));
}
