#include "bettikit/bounds.hpp"

#include "bettikit/betti.hpp"
#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/hilbert.hpp"

#include <stdexcept>

namespace bettikit {

long long strand_bound(int h, int i) {
    if (h < 1 || i < 0) throw ParameterOutOfRange("strand_bound needs h >= 1 and i >= 0");
    mpz_class v = binomial(2 * h, i + 2) - 2 * binomial(h, i + 2);
    if (!v.fits_slong_p()) throw std::overflow_error("strand bound does not fit in long long");
    return v.get_si();
}

RemarkBound remark_bound(int h, int t, int i) {
    if (h < 1 || t < 0 || t > h || i < 0)
        throw ParameterOutOfRange("remark_bound needs h >= 1, 0 <= t <= h, i >= 0");
    mpz_class mid = binomial(2 * h - t, i + 1) + binomial(t, i + 1) - 2 * binomial(h, i + 1);
    mpz_class fin = binomial(2 * h, i + 1) - 2 * binomial(h, i + 1);
    if (!mid.fits_slong_p() || !fin.fits_slong_p())
        throw std::overflow_error("remark bound does not fit in long long");
    return RemarkBound{mid.get_si(), fin.get_si()};
}

bool vandermonde_check(int m, int t, int k) {
    if (m < 0 || t < 0 || k < 0 || m > 64 || t > 64 || k > 64)
        throw ParameterOutOfRange("vandermonde_check inputs must lie in [0, 64]");
    mpz_class sum = 0;
    for (int j = 0; j <= k; ++j) sum += binomial(m, j) * binomial(t, k - j);
    return sum == binomial(m + t, k);
}

BoundReport check_theorem(const Ideal& I, bool assume_radical_unmixed,
                          const std::string& ideal_id) {
    BoundReport report;
    report.ideal_id = ideal_id;
    report.attested = assume_radical_unmixed;
    GroebnerBasis gb = buchberger(I);
    report.height = dimension(gb).height;
    report.linear_forms =
        static_cast<int>(I.ring()->num_vars - hilbert_function(gb, 1));
    report.strand = quadratic_strand(I);
    report.bounds.reserve(report.strand.size());
    for (size_t i = 0; i < report.strand.size(); ++i) {
        long long b = report.linear_forms == 0
                          ? strand_bound(report.height, static_cast<int>(i))
                          : remark_bound(report.height, report.linear_forms,
                                         static_cast<int>(i) + 1)
                                .intermediate;
        report.bounds.push_back(b);
    }
    report.satisfied = true;
    for (size_t i = 0; i < report.strand.size(); ++i) {
        if (report.strand[i] > report.bounds[i]) report.satisfied = false;
        if (report.strand[i] == report.bounds[i])
            report.tight_indices.push_back(static_cast<int>(i));
    }
    return report;
}

SharpnessReport sharpness_certificate(int h) {
    if (h < 1 || h > 3) throw ParameterOutOfRange("sharpness certificate is desk-scale: h <= 3");
    SharpnessReport report;
    report.h = h;
    NamedConstruction candidate = prime_candidate(h, FieldSpec::rationals());
    report.strand = quadratic_strand(candidate.ideal);
    for (int i = 0; i + 2 <= 2 * h; ++i) report.bounds.push_back(strand_bound(h, i));
    report.equal = report.strand == report.bounds;
    report.route = verify_prime_route(h, 13);
    return report;
}

} // namespace bettikit
