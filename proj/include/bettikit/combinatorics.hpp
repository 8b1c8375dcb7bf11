#pragma once

#include <gmpxx.h>

#include <vector>

namespace bettikit {

// Binomial coefficient with the conventions used throughout:
// C(a,b) = 0 whenever a < b, a < 0 or b < 0, and C(a,0) = 1 for a >= 0.
mpz_class binomial(long long a, long long b);

// Same value narrowed to long long; throws std::overflow_error if it does not fit.
long long binomial_ll(long long a, long long b);

// All k-element subsets of {0,...,n-1}, each sorted ascending, enumerated in
// colexicographic order (largest element varies slowest).
std::vector<std::vector<int>> subsets_of_size(int n, int k);

} // namespace bettikit
