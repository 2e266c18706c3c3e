#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <towerlab/gf.hpp>

using namespace towerlab;

namespace {
FiniteField f8() { return FiniteField(2, {1, 1, 0, 1}); }   // t^3+t+1
FiniteField f9() { return FiniteField(3, {1, 0, 1}); }      // t^2+1
}  // namespace

TEST_CASE("field construction accepts irreducible moduli") {
    FiniteField f = f8();
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 3);
    CHECK(f.cardinality() == 8);

    FiniteField f2(2, {0, 1});  // degree-1 modulus, the prime field
    CHECK(f2.cardinality() == 2);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(FiniteField(4, {1, 1}), not_prime_error);
    CHECK_THROWS_AS(FiniteField(1, {1, 1}), not_prime_error);
    try {
        FiniteField(2, {0, 0, 1});  // t^2 = t*t
        FAIL("expected reducible_modulus_error");
    } catch (const reducible_modulus_error& e) {
        CHECK(e.factor == "t");
    }
    CHECK_THROWS_AS(FiniteField(2, {1, 1, 1, 1}), reducible_modulus_error);  // (t+1)(t^2+1)
}

TEST_CASE("arithmetic in F_8") {
    FiniteField f = f8();
    FieldElement a = f.generator();
    FieldElement a2p1 = f.element({1, 0, 1});  // g^2+1
    CHECK((a * a2p1).is_one());               // g*(g^2+1) = g^3+g = 1
    CHECK(a.pow(7).is_one());                 // multiplicative order divides q-1
    CHECK(a.pow(0).is_one());
    CHECK((a + a).is_zero());
}

TEST_CASE("arithmetic in F_9") {
    FiniteField f = f9();
    FieldElement two = f.from_integer(2);
    CHECK((two * two).is_one());  // 4 = 1 mod 3
    FieldElement t = f.generator();
    CHECK(t * t == f.from_integer(-1));  // modulus t^2+1
    CHECK((t / t).is_one());
    CHECK_THROWS_AS(t / f.zero(), division_by_zero_error);
}

TEST_CASE("cross-field operations are rejected") {
    FiniteField a = f8(), b = f9();
    CHECK_THROWS_AS(a.one() + b.one(), field_mismatch_error);
}

TEST_CASE("enumerate is deterministic and complete") {
    FiniteField f2(2, {0, 1});
    auto e2 = f2.enumerate();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_one());

    auto e8 = f8().enumerate();
    REQUIRE(e8.size() == 8);
    CHECK(e8[0].is_zero());
    CHECK(e8[1].is_one());
    for (std::size_t i = 0; i < e8.size(); ++i)
        for (std::size_t j = i + 1; j < e8.size(); ++j) CHECK(e8[i] != e8[j]);

    auto e9 = f9().enumerate();
    CHECK(e9.size() == 9);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(20240811);
    for (FiniteField f : {f8(), f9(), FiniteField(5, {3, 0, 1})}) {
        std::uniform_int_distribution<long long> pick(0, f.cardinality() - 1);
        for (int i = 0; i < 200; ++i) {
            FieldElement x = f.element_at(pick(rng));
            FieldElement y = f.element_at(pick(rng));
            FieldElement z = f.element_at(pick(rng));
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + (-x) == f.zero());
            if (!x.is_zero()) CHECK((x * x.inv()).is_one());
        }
    }
}

TEST_CASE("Frobenius is additive and multiplicative") {
    for (FiniteField f : {f8(), f9()}) {
        const long long p = f.characteristic();
        auto elems = f.enumerate();
        for (const auto& x : elems)
            for (const auto& y : elems) {
                CHECK((x + y).pow(p) == x.pow(p) + y.pow(p));
                CHECK((x * y).pow(p) == x.pow(p) * y.pow(p));
            }
    }
}

TEST_CASE("nonzero elements have order dividing q-1") {
    for (FiniteField f : {f8(), f9()}) {
        for (const auto& x : f.enumerate())
            if (!x.is_zero()) CHECK(x.pow(f.cardinality() - 1).is_one());
    }
}

TEST_CASE("element printing uses the generator symbol") {
    FiniteField f = f8();
    CHECK(f.zero().str() == "0");
    CHECK(f.one().str() == "1");
    CHECK(f.generator().str() == "g");
    CHECK(f.element({1, 1, 1}).str() == "g^2+g+1");
    FiniteField g9 = f9();
    CHECK(g9.element({1, 2}).str() == "2*g+1");
}
