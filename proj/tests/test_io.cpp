#include "bettikit/constructions.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/groebner.hpp"
#include "bettikit/io.hpp"

#include <doctest.h>

#include <random>

using namespace bettikit;

TEST_CASE("parsing the Gamma(2) file") {
    Ideal I = parse_ideal("ring: vars=u1,u2,v1,v2 char=0\ngens:\nu1*v1\nu1*v2\nu2*v1\nu2*v2\n");
    CHECK(ideal_equal(I, gamma(2, FieldSpec::rationals()).ideal));
}

TEST_CASE("unary minus and implicit coefficients") {
    Ideal I = parse_ideal("ring: vars=y1,y2,z1,z2 char=0\ngens:\ny1*z2 - y2*z1\n");
    REQUIRE(I.generators().size() == 1);
    CHECK(I.generators()[0].terms().size() == 2);
    for (const auto& t : I.generators()[0].terms()) {
        // the y2*z1 term carries the minus
        bool is_y2z1 = t.mon.exponent(1) == 1 && t.mon.exponent(2) == 1;
        CHECK(t.coeff == FieldElement::from_rational(is_y2z1 ? -1 : 1, 1));
    }

    Ideal J = parse_ideal("ring: vars=x1 char=0\ngens:\n-x1\n");
    CHECK(J.generators()[0].leading_term().coeff == FieldElement::from_rational(-1, 1));
}

TEST_CASE("coefficients reduce into the prime field") {
    Ideal I = parse_ideal("ring: vars=x1,x2 char=5\ngens:\nx1^3 + 2*x1*x2^2\n");
    CHECK(I.ring()->field == FieldSpec::prime_field(5));
    CHECK(I.generators()[0].terms()[1].coeff.residue() == 2);
    Ideal J = parse_ideal("ring: vars=x1,x2 char=5\ngens:\n7*x1^2\n");
    CHECK(J.generators()[0].leading_term().coeff.residue() == 2);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ideal("not a header\n"), ParseError);
    try {
        parse_ideal("ring: vars=x1,x2 char=0\ngens:\nx1*x3\n");
        FAIL("expected UnknownVariable");
    } catch (const UnknownVariable& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_ideal("ring: vars=x1 char=4\ngens:\nx1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("ring: vars=x1 char=0\ngens:\nx1 + \n"), ParseError);
    // Inhomogeneous generator lines are rejected at parse level.
    CHECK_THROWS_AS(parse_ideal("ring: vars=x1 char=0\ngens:\nx1^2 + x1\n"), ParseError);
}

TEST_CASE("printing normalizes to primitive integer generators") {
    RingPtr r = make_ring(2, "x", FieldSpec::rationals());
    Polynomial p = Polynomial::variable(r, 0).scaled(FieldElement::from_rational(-2, 3)) +
                   Polynomial::variable(r, 1).scaled(FieldElement::from_rational(1, 2));
    Ideal I(r, {p});
    std::string text = print_ideal(I);
    CHECK(text == "ring: vars=x1,x2 char=0\ngens:\n4*x1 - 3*x2\n");
    Ideal back = parse_ideal(text);
    CHECK(ideal_equal(I, back));
    CHECK(print_ideal(back) == text);
}

TEST_CASE("round trips on random ideals") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 120; ++trial) {
        FieldSpec field = trial % 3 == 0   ? FieldSpec::rationals()
                          : trial % 3 == 1 ? default_field()
                                           : FieldSpec::prime_field(13);
        int n = 2 + static_cast<int>(gen() % 3);
        RingPtr ring = make_ring(n, "x", field);
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            auto mons = monomials_of_degree(*ring, 1 + static_cast<int>(gen() % 3));
            std::vector<Term> terms;
            for (int t = 0; t < 3; ++t) {
                long long c = static_cast<long long>(gen() % 9) - 4;
                terms.push_back(
                    Term{mons[gen() % mons.size()], FieldElement::from_integer(field, c)});
            }
            Polynomial p = Polynomial::from_terms(ring, std::move(terms));
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        Ideal I(ring, std::move(gens));
        std::string once = print_ideal(I);
        Ideal back = parse_ideal(once);
        REQUIRE(print_ideal(back) == once);
        REQUIRE(ideal_equal(I, back));
    }
}

TEST_CASE("field names") {
    CHECK(parse_field_name("qq") == FieldSpec::rationals());
    CHECK(parse_field_name("gf32003") == default_field());
    CHECK(parse_field_name("GF13") == FieldSpec::prime_field(13));
    CHECK_THROWS_AS(parse_field_name("gf4"), BadCharacteristic);
    CHECK_THROWS_AS(parse_field_name("float"), BadCharacteristic);
}

TEST_CASE("JSON schemas are stable") {
    BettiTable t = betti_table(gamma(2, FieldSpec::rationals()).ideal, 4, 6);
    nlohmann::json jt = betti_table_json(t);
    CHECK(jt.contains("ring"));
    CHECK(jt.contains("entries"));
    CHECK(jt.contains("i_max"));
    CHECK(jt.contains("j_max"));
    CHECK(jt["entries"]["1,2"] == 4);

    BoundReport rep = check_theorem(gamma(2, FieldSpec::rationals()).ideal, true, "gamma2");
    nlohmann::json jr = bound_report_json(rep);
    for (const char* key : {"height", "strand", "bounds", "satisfied", "tight_indices", "attested"})
        CHECK(jr.contains(key));
    CHECK(jr["satisfied"] == true);
}

TEST_CASE("staircase text layout") {
    BettiTable t = betti_table(gamma(2, FieldSpec::rationals()).ideal, 3, 4);
    std::string text = betti_table_text(t);
    // Row 1 holds the linear strand 4 4 1.
    CHECK(text.find("1:") != std::string::npos);
    CHECK(text.find("4") != std::string::npos);
}
