#include "bettikit/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace bettikit {

mpz_class binomial(long long a, long long b) {
    if (a < 0 || b < 0 || a < b) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return result;
}

long long binomial_ll(long long a, long long b) {
    mpz_class v = binomial(a, b);
    if (!v.fits_slong_p())
        throw std::overflow_error("binomial(" + std::to_string(a) + "," + std::to_string(b) +
                                  ") does not fit in long long");
    return v.get_si();
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // Colex: recurse on the largest element.
    for (int m = k - 1; m < n; ++m) {
        for (auto& s : subsets_of_size(m, k - 1)) {
            s.push_back(m);
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace bettikit
