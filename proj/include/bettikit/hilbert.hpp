#pragma once

#include "bettikit/groebner.hpp"

#include <vector>

namespace bettikit {

struct HilbertData {
    RingPtr ring;
    std::vector<long long> hf_values; // degrees 0..d_max
    std::vector<long long> numerator; // q(z) with HS_{S/I} = q/(1-z)^N, trimmed
    int dim = 0;
    long long multiplicity = 0;
};

// Degree-d standard monomials of the degrevlex initial ideal.
long long hilbert_function(const Ideal& I, int d);
long long hilbert_function(const GroebnerBasis& gb, int d);

// Default interpolation window: 2 * (max generator degree) + N.
int default_dmax(const Ideal& I);

// Numerator of the Hilbert series over (1-z)^N, recovered by N-fold finite
// differencing of the Hilbert function. InsufficientDegree when the top
// three computed coefficients fail to vanish.
std::vector<long long> hilbert_numerator(const Ideal& I, int d_max = -1);

// q(1) after dividing (1-z)^{N-dim} out of the numerator. UnitIdeal for
// improper input.
long long multiplicity(const Ideal& I);

HilbertData hilbert_data(const Ideal& I, int d_max = -1);

} // namespace bettikit
