#pragma once

#include "bettikit/ideal.hpp"

#include <optional>
#include <vector>

namespace bettikit {

// Degree bound for Buchberger runs; BETTIKIT_DEGREE_CAP overrides the
// default of 30. Any S-pair whose lcm degree exceeds the cap aborts the
// computation with DegreeCapExceeded.
int degree_cap_default();

struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> elements; // reduced, monic, descending leading monomials
    bool reduced = true;

    bool contains_unit() const;
};

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order = MonomialOrder::DegRevLex,
                         int degree_cap = -1);

// Remainder of full division: no term of the result is divisible by any
// leading monomial of G; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool ideal_member(const Polynomial& p, const GroebnerBasis& G);

// Monomial ideal of leading terms of the reduced Groebner basis.
Ideal initial_ideal(const Ideal& I, MonomialOrder order = MonomialOrder::DegRevLex);

bool ideal_equal(const Ideal& I, const Ideal& J);

// I : g via intersection with (g), each generator divided exactly by g.
Ideal colon(const Ideal& I, const Polynomial& g);

// Elimination with one auxiliary variable t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

struct DimensionInfo {
    int dim;    // dim(S/I)
    int height; // N - dim
};

// Krull dimension of S/I from the largest independent set of variables of
// the degrevlex initial ideal. UnitIdeal for improper input.
DimensionInfo dimension(const Ideal& I);
DimensionInfo dimension(const GroebnerBasis& gb);

struct CoordinateChange {
    RingPtr ring;
    std::vector<std::vector<FieldElement>> matrix; // x_i -> sum_j matrix[i][j] x_j
    unsigned long long seed = 0;
};

// Seeded invertible matrix; FieldTooSmall if the field has fewer than 2N^2
// elements.
CoordinateChange random_coordinate_change(const RingPtr& ring, unsigned long long seed);
CoordinateChange inverse(const CoordinateChange& cc);
Polynomial apply(const CoordinateChange& cc, const Polynomial& p);
Ideal apply(const CoordinateChange& cc, const Ideal& I);

// Exact quotient f / g when f is a polynomial multiple of g.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Search for a homogeneous g of degree D with colon(F, g) == target.
// Candidates carry coefficients in {0, +1, -1} on at most max_support
// monomials; the search is deterministic and may miss witnesses outside
// that space.
std::optional<Polynomial> linkage_witness(const Ideal& F, const Ideal& target, int D,
                                          int max_support = 3);

} // namespace bettikit
