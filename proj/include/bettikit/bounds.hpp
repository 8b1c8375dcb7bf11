#pragma once

#include "bettikit/constructions.hpp"

#include <string>
#include <vector>

namespace bettikit {

// C(2h, i+2) - 2 C(h, i+2): the quadratic-strand bound for height h.
long long strand_bound(int h, int i);

struct RemarkBound {
    long long intermediate; // C(2h-t, i+1) + C(t, i+1) - 2 C(h, i+1)
    long long final;        // C(2h, i+1) - 2 C(h, i+1)
};

// The linear-forms adjustment: the strand of an ideal with t independent
// linear forms obeys the intermediate bound, which relaxes to the final one.
RemarkBound remark_bound(int h, int t, int i);

// sum_j C(m,j) C(t,k-j) == C(m+t,k), evaluated exactly.
bool vandermonde_check(int m, int t, int k);

struct BoundReport {
    std::string ideal_id;
    int height = 0;
    int linear_forms = 0;
    std::vector<long long> strand;
    std::vector<long long> bounds;
    bool satisfied = false;
    bool attested = false;
    std::vector<int> tight_indices;
};

// Computes height and the quadratic strand of I and compares against the
// bound (remark-adjusted when I contains linear forms). Radicality and
// unmixedness are caller attestations, never computed.
BoundReport check_theorem(const Ideal& I, bool assume_radical_unmixed,
                          const std::string& ideal_id = "");

struct SharpnessReport {
    int h = 0;
    std::vector<long long> strand;
    std::vector<long long> bounds;
    bool equal = false;
    PrimeRouteReport route;
    bool ok() const { return equal && route.ok(); }
};

// Equality of the prime candidate's strand (over QQ) with the bound, bundled
// with the coordinate-change route at p = 13. Desk scale: h <= 3.
SharpnessReport sharpness_certificate(int h);

} // namespace bettikit
