#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <towerlab/parser.hpp>
#include <towerlab/rational.hpp>

using namespace towerlab;

namespace {
FiniteField f2() { return FiniteField(2, {0, 1}); }
FiniteField f8() { return FiniteField(2, {1, 1, 0, 1}); }
FiniteField f9() { return FiniteField(3, {1, 0, 1}); }

RationalFunction rat(const FiniteField& f, const std::string& text) {
    return parse_rational(text, f);
}

RationalFunction random_rational(const FiniteField& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<long long> pick(0, f.cardinality() - 1);
    std::uniform_int_distribution<int> dd(0, max_deg);
    while (true) {
        std::vector<FieldElement> n, d;
        int dn = dd(rng), dden = dd(rng);
        for (int i = 0; i <= dn; ++i) n.push_back(f.element_at(pick(rng)));
        for (int i = 0; i <= dden; ++i) d.push_back(f.element_at(pick(rng)));
        Polynomial num(f, std::move(n)), den(f, std::move(d));
        if (den.is_zero()) continue;
        RationalFunction r = RationalFunction::normalized(num, den);
        if (!r.is_constant()) return r;
    }
}
}  // namespace

TEST_CASE("normalization produces the canonical form") {
    FiniteField f = FiniteField(3, {0, 1});
    // (2T^2+2)/(4T): 4 = 1 mod 3, then the denominator is already monic
    RationalFunction r = RationalFunction::normalized(
        Polynomial::from_ints(f, {2, 0, 2}), Polynomial::from_ints(f, {0, 4}));
    CHECK(r.num() == Polynomial::from_ints(f, {2, 0, 2}));
    CHECK(r.den() == Polynomial::from_ints(f, {0, 1}));

    // common factor T cancels
    RationalFunction s = RationalFunction::normalized(
        Polynomial::from_ints(f, {0, 0, 1}), Polynomial::from_ints(f, {0, 1}));
    CHECK(s.num() == Polynomial::from_ints(f, {0, 1}));
    CHECK(s.den().is_one());

    // idempotence
    RationalFunction t = RationalFunction::normalized(r.num(), r.den());
    CHECK(t == r);

    CHECK_THROWS_AS(
        RationalFunction::normalized(Polynomial::from_ints(f, {1}), Polynomial(f)),
        zero_denominator_error);
}

TEST_CASE("canonical form holds after arithmetic") {
    std::mt19937 rng(424242);
    FiniteField f = f9();
    for (int i = 0; i < 100; ++i) {
        RationalFunction a = random_rational(f, 3, rng);
        RationalFunction b = random_rational(f, 3, rng);
        for (RationalFunction r : {a + b, a * b, a - b}) {
            if (r.is_zero()) {
                CHECK(r.den().is_one());
                continue;
            }
            CHECK(r.den().is_monic());
            CHECK(poly_gcd(r.num(), r.den()).is_one());
        }
    }
}

TEST_CASE("composition fixtures") {
    FiniteField f = f9();
    // T^2 after 2T after (T^2+1)/(2T) gives (T^2+1)^2/T^2
    RationalFunction b = rat(f, "(t^2+1)/(2*t)");
    RationalFunction ft = rat(f, "2*t");
    RationalFunction at = rat(f, "t^2");
    RationalFunction comp = rat_compose(at, rat_compose(ft, b));
    CHECK(comp == rat(f, "(t^2+1)^2/t^2"));

    // identity outer
    CHECK(rat_compose(rat(f, "t"), b) == b);

    FiniteField g = f2();
    RationalFunction lhs = rat_compose(
        rat(g, "t^3+t"), rat_compose(rat(g, "(t+1)/t"), rat(g, "(t^2+t+1)/t")));
    CHECK(lhs == rat(g, "(t^4+t^2)/(t^6+t^5+t^3+t+1)"));
}

TEST_CASE("degree follows the max convention") {
    FiniteField f = f9();
    CHECK(rat_degree(rat(f, "(t^2+1)/(2*t)")) == 2);
    CHECK(rat_degree(rat(f, "1")) == 0);
    FiniteField g = f2();
    CHECK(rat_degree(rat(g, "(t+1)/t^3")) == 3);
}

TEST_CASE("degree of a composition is the product of degrees") {
    std::mt19937 rng(777);
    for (FiniteField f : {f8(), f9()}) {
        for (int i = 0; i < 150; ++i) {
            RationalFunction r = random_rational(f, 4, rng);
            RationalFunction s = random_rational(f, 4, rng);
            RationalFunction c = rat_compose(r, s);
            CHECK(rat_degree(c) == rat_degree(r) * rat_degree(s));
        }
    }
}

TEST_CASE("projective evaluation") {
    FiniteField f = f9();
    RationalFunction b = rat(f, "(t^2+1)/(2*t)");
    CHECK(rat_eval(b, ProjectiveValue::finite(f.zero())).is_infinity());

    FiniteField g = f8();
    RationalFunction c = rat(g, "(t^2+t+1)/t");
    CHECK(rat_eval(c, ProjectiveValue::infinity(g)).is_infinity());
    RationalFunction d = rat(g, "t/(t^2+t+1)");
    ProjectiveValue v = rat_eval(d, ProjectiveValue::infinity(g));
    REQUIRE(!v.is_infinity());
    CHECK(v.value().is_zero());
    // tied degrees use leading coefficients
    RationalFunction e = rat(f, "(2*t^2+1)/(t^2+t)");
    ProjectiveValue w = rat_eval(e, ProjectiveValue::infinity(f));
    REQUIRE(!w.is_infinity());
    CHECK(w.value() == f.from_integer(2));
}

TEST_CASE("evaluation commutes with composition on all of P^1") {
    std::mt19937 rng(31337);
    for (FiniteField f : {f8(), f9()}) {
        std::vector<ProjectiveValue> points;
        for (const auto& x : f.enumerate()) points.push_back(ProjectiveValue::finite(x));
        points.push_back(ProjectiveValue::infinity(f));
        for (int i = 0; i < 40; ++i) {
            RationalFunction r = random_rational(f, 3, rng);
            RationalFunction s = random_rational(f, 3, rng);
            RationalFunction c = rat_compose(r, s);
            for (const auto& x : points) CHECK(rat_eval(c, x) == rat_eval(r, rat_eval(s, x)));
        }
    }
}

TEST_CASE("valuation and residue at a center") {
    FiniteField f = f9();
    RationalFunction b = rat(f, "(t^2+1)/(2*t)");
    ProjectiveValue zero = ProjectiveValue::finite(f.zero());
    CHECK(b.valuation_at(zero) == -1);
    ProjectiveValue inf = ProjectiveValue::infinity(f);
    CHECK(b.valuation_at(inf) == -1);
    CHECK(b.residue_at(inf) == f.from_integer(2));  // (1/2)^{-1} = 2

    // zeros of t^2+1 sit at the square roots of -1
    FieldElement i = f.generator();
    CHECK(b.valuation_at(ProjectiveValue::finite(i)) == 1);
}

TEST_CASE("rational printing round-trips through the parser") {
    FiniteField f = f8();
    for (const char* text :
         {"(t^2+1)/t^3", "t^3+t", "(t^2+t+1)/(t^2+t)", "1/(t^2+t+1)", "g^2*t+g"}) {
        RationalFunction r = rat(f, text);
        CHECK(parse_rational(r.str("t"), f) == r);
    }
}
