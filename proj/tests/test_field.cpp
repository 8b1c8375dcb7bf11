#include "bettikit/errors.hpp"
#include "bettikit/field.hpp"

#include <doctest.h>

#include <random>

using namespace bettikit;

TEST_CASE("prime field arithmetic") {
    FieldSpec gf5 = FieldSpec::prime_field(5);
    auto e = [&](long long v) { return FieldElement::from_integer(gf5, v); };
    CHECK(arith(e(3), e(4), ArithOp::Mul) == e(2)); // 12 mod 5
    CHECK(e(3) + e(4) == e(2));
    CHECK(e(2) - e(4) == e(3));
    CHECK((e(3) / e(2)) * e(2) == e(3));
    CHECK((-e(0)).is_zero());
}

TEST_CASE("rational arithmetic") {
    auto half = FieldElement::from_rational(1, 2);
    auto third = FieldElement::from_rational(1, 3);
    CHECK(half + third == FieldElement::from_rational(5, 6));
    // x / x = 1 for nonzero x
    auto x = FieldElement::from_rational(-84, 30);
    CHECK(x / x == FieldElement::from_rational(1, 1));
    // lowest terms with positive denominator
    CHECK(x.rat().get_den() == 5);
    CHECK(x.rat().get_num() == -14);
}

TEST_CASE("field errors") {
    FieldSpec gf5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(FieldElement::from_integer(gf5, 1) + FieldElement::from_rational(1, 1),
                    MixedFields);
    CHECK_THROWS_AS(FieldElement::from_integer(gf5, 1) / FieldElement::zero(gf5), DivisionByZero);
    CHECK_THROWS_AS(FieldSpec::prime_field(4), BadCharacteristic);
    CHECK_THROWS_AS(FieldSpec::prime_field(2), BadCharacteristic); // odd primes only
    CHECK_THROWS_AS(FieldSpec::prime_field(1LL << 31), BadCharacteristic);
    CHECK_NOTHROW(FieldSpec::prime_field(2147483647)); // 2^31 - 1 is prime
}

TEST_CASE("square roots of minus one") {
    CHECK(sqrt_minus_one(FieldSpec::prime_field(5))->residue() == 2);
    CHECK(!sqrt_minus_one(FieldSpec::prime_field(7)).has_value());
    auto i13 = sqrt_minus_one(FieldSpec::prime_field(13));
    CHECK(i13->residue() == 5); // the representative below p/2
    CHECK((*i13 * *i13) == FieldElement::from_integer(FieldSpec::prime_field(13), -1));
    // 32003 = 3 (mod 4): the default field has no square root of -1.
    CHECK(!sqrt_minus_one(default_field()).has_value());
    FieldSpec gf101 = FieldSpec::prime_field(101);
    auto i101 = sqrt_minus_one(gf101);
    REQUIRE(i101.has_value());
    CHECK(i101->residue() == 10);
    CHECK((*i101 * *i101) == FieldElement::from_integer(gf101, -1));
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 gen(7);
    for (FieldSpec spec : {FieldSpec::prime_field(32003), FieldSpec::rationals()}) {
        auto sample = [&]() {
            if (spec.kind == FieldKind::PrimeField)
                return FieldElement::from_integer(spec, static_cast<long long>(gen() % 32003));
            return FieldElement::from_rational(static_cast<long long>(gen() % 41) - 20,
                                               1 + static_cast<long long>(gen() % 9));
        };
        for (int trial = 0; trial < 10000; ++trial) {
            FieldElement a = sample(), b = sample(), c = sample();
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == FieldElement::one(spec));
            if (spec.kind == FieldKind::Rationals) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), (a * b).rat().get_num().get_mpz_t(),
                        (a * b).rat().get_den().get_mpz_t());
                REQUIRE(g == 1);
            }
        }
    }
}
