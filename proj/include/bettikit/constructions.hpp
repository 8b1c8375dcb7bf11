#pragma once

#include "bettikit/ideal.hpp"
#include "bettikit/lpp.hpp"

#include <map>
#include <string>
#include <vector>

namespace bettikit {

enum class ConstructionKind { Gamma, PrimeCandidate, LppL, CompleteIntersection, StanleyReisner };

struct NamedConstruction {
    ConstructionKind kind;
    std::map<std::string, long long> params;
    Ideal ideal;
};

// Gamma(h) = (u_1,...,u_h)(v_1,...,v_h): the h^2 products, in 2h variables.
NamedConstruction gamma(int h, FieldSpec field = default_field());

// The height-h prime candidate in y_1..y_h, z_1..z_h: skew relations
// y_j z_k - y_k z_j (j < k) and symmetric relations y_j y_k + z_j z_k
// (j <= k); h^2 quadrics.
NamedConstruction prime_candidate(int h, FieldSpec field = default_field());

// Pure-power complete intersection (x_1^{d_1},...,x_h^{d_h}) in n variables.
NamedConstruction complete_intersection(const std::vector<int>& degrees, int n,
                                        FieldSpec field = default_field());

// A pure simplicial complex: equal-size facets, none contained in another.
struct PureComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> facets; // 0-based vertex sets, sorted
};

std::vector<std::vector<int>> minimal_nonfaces(const PureComplex& c);

// Squarefree monomial ideal of the minimal non-faces.
Ideal stanley_reisner(const PureComplex& c, const RingPtr& ring);

// Seeded sample of `count` distinct facets of size facet_dim+1 on n
// vertices. Infeasible when count exceeds C(n, facet_dim+1).
PureComplex random_pure_complex(int n, int facet_dim, int count, unsigned long long seed);

struct PrimeRouteReport {
    int h = 0;
    long long p = 0;
    bool ideal_match = false;   // coordinate-change image equals Gamma(h)
    bool height_ok = false;     // height equals h
    bool multiplicity_ok = false;
    int computed_height = 0;
    long long computed_multiplicity = 0;
    bool ok() const { return ideal_match && height_ok && multiplicity_ok; }
};

// Over GF(p) with p = 1 (mod 4): substitutes u_j -> y_j + i z_j,
// v_j -> y_j - i z_j into Gamma(h) and checks equality with the prime
// candidate, plus height h and multiplicity 2.
PrimeRouteReport verify_prime_route(int h, long long p);

} // namespace bettikit
