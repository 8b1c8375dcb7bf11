#include "bettikit/bounds.hpp"
#include "bettikit/errors.hpp"

#include <doctest.h>

using namespace bettikit;

TEST_CASE("strand bound values") {
    CHECK(strand_bound(2, 0) == 4);
    CHECK(strand_bound(3, 0) == 9);
    CHECK(strand_bound(2, 1) == 4);
    CHECK(strand_bound(2, 2) == 1);
    CHECK(strand_bound(2, 3) == 0); // C(4,5) - 2C(2,5)
    CHECK_THROWS_AS(strand_bound(0, 0), ParameterOutOfRange);
}

TEST_CASE("strand bound never goes negative") {
    for (int h = 1; h <= 32; ++h)
        for (int i = 0; i <= 64; ++i) REQUIRE(strand_bound(h, i) >= 0);
}

TEST_CASE("remark bound") {
    // t = 0 collapses onto the final bound.
    for (int i = 0; i <= 6; ++i) {
        RemarkBound rb = remark_bound(3, 0, i);
        CHECK(rb.intermediate == rb.final);
    }
    // t = h leaves no quadric slack.
    for (int i = 0; i <= 6; ++i) CHECK(remark_bound(3, 3, i).intermediate == 0);
    // The worked value: C(5,2) + C(1,2) - 2 C(3,2) = 10 + 0 - 6 = 4 <= 9.
    RemarkBound rb = remark_bound(3, 1, 1);
    CHECK(rb.intermediate == 4);
    CHECK(rb.final == 9);
    CHECK_THROWS_AS(remark_bound(2, 3, 0), ParameterOutOfRange);
}

TEST_CASE("remark bound relaxes to the final bound, exhaustively") {
    for (int h = 1; h <= 16; ++h)
        for (int t = 0; t <= h; ++t)
            for (int i = 0; i <= 2 * h; ++i) {
                RemarkBound rb = remark_bound(h, t, i);
                REQUIRE(rb.intermediate <= rb.final);
            }
}

TEST_CASE("vandermonde identity") {
    CHECK(vandermonde_check(4, 2, 3));
    CHECK(vandermonde_check(0, 0, 0));
    for (int m = 0; m <= 8; ++m)
        for (int t = 0; t <= 8; ++t) REQUIRE(vandermonde_check(m, t, 0));
    CHECK_THROWS_AS(vandermonde_check(65, 0, 0), ParameterOutOfRange);
}

TEST_CASE("check_theorem on gamma(3) is everywhere tight") {
    BoundReport rep = check_theorem(gamma(3, FieldSpec::rationals()).ideal, true, "gamma3");
    CHECK(rep.satisfied);
    CHECK(rep.attested);
    CHECK(rep.height == 3);
    CHECK(rep.linear_forms == 0);
    CHECK(rep.tight_indices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("check_theorem flags missing attestation") {
    NamedConstruction ci = complete_intersection({2, 2}, 2, FieldSpec::rationals());
    BoundReport rep = check_theorem(ci.ideal, false, "ci22");
    CHECK(!rep.attested);
    // (x1^2, x2^2) is not radical; the report is still produced.
    CHECK(rep.height == 2);
    CHECK(rep.strand.size() == 3);
}

TEST_CASE("linear forms route through the remark bound") {
    // I = (x3, x4) + Gamma-like quadrics on x1, x2 only: take the cone point
    // ideal (x3, x4, x1x2). Height 3, one quadric.
    RingPtr r = make_ring(4, "x", FieldSpec::rationals());
    auto x = [&](int i) { return Polynomial::variable(r, i); };
    Ideal I(r, {x(2), x(3), x(0) * x(1)});
    BoundReport rep = check_theorem(I, true, "with-linear-forms");
    CHECK(rep.linear_forms == 2);
    CHECK(rep.height == 3);
    CHECK(rep.satisfied);
    for (size_t i = 0; i < rep.bounds.size(); ++i) {
        RemarkBound rb = remark_bound(rep.height, rep.linear_forms, static_cast<int>(i) + 1);
        REQUIRE(rep.bounds[i] == rb.intermediate);
    }
}

TEST_CASE("sharpness certificates") {
    for (int h = 1; h <= 2; ++h) {
        SharpnessReport rep = sharpness_certificate(h);
        CHECK(rep.equal);
        CHECK(rep.route.ok());
        for (size_t i = 0; i < rep.strand.size(); ++i)
            REQUIRE(rep.strand[i] == strand_bound(h, static_cast<int>(i)));
    }
    CHECK_THROWS_AS(sharpness_certificate(4), ParameterOutOfRange);
}
