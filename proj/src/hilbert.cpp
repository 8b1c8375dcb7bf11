#include "bettikit/hilbert.hpp"

#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    leads.reserve(gb.elements.size());
    for (const auto& g : gb.elements) leads.push_back(g.leading_monomial());
    return leads;
}

bool is_standard(const Monomial& m, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.divides(m)) return false;
    return true;
}

} // namespace

long long hilbert_function(const GroebnerBasis& gb, int d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    auto leads = leading_monomials(gb);
    long long count = 0;
    for (const auto& m : monomials_of_degree(*gb.ideal.ring(), d))
        if (is_standard(m, leads)) ++count;
    return count;
}

long long hilbert_function(const Ideal& I, int d) {
    return hilbert_function(buchberger(I), d);
}

int default_dmax(const Ideal& I) {
    return 2 * I.max_generator_degree() + I.ring()->num_vars;
}

namespace {

std::vector<long long> numerator_from_hf(const std::vector<long long>& hf, int n) {
    // q_k = sum_i (-1)^i C(n,i) HF(k-i): applying (1-z)^n to the series.
    const int d_max = static_cast<int>(hf.size()) - 1;
    std::vector<long long> q(hf.size(), 0);
    for (int k = 0; k <= d_max; ++k) {
        long long v = 0;
        for (int i = 0; i <= std::min(k, n); ++i) {
            long long c = binomial_ll(n, i);
            v += (i % 2 == 0 ? 1 : -1) * c * hf[static_cast<size_t>(k - i)];
        }
        q[static_cast<size_t>(k)] = v;
    }
    return q;
}

} // namespace

std::vector<long long> hilbert_numerator(const Ideal& I, int d_max) {
    const bool adaptive = d_max < 0;
    if (adaptive) d_max = default_dmax(I);
    const int n = I.ring()->num_vars;
    if (d_max < 2) d_max = 2;
    GroebnerBasis gb = buchberger(I);
    std::vector<long long> hf;
    for (int round = 0;; ++round) {
        for (int d = static_cast<int>(hf.size()); d <= d_max; ++d)
            hf.push_back(hilbert_function(gb, d));
        std::vector<long long> q = numerator_from_hf(hf, n);
        bool stable = true;
        for (int k = d_max - 2; k <= d_max; ++k)
            if (q[static_cast<size_t>(k)] != 0) stable = false;
        if (stable) {
            while (!q.empty() && q.back() == 0) q.pop_back();
            return q;
        }
        // A caller-supplied window is a hard contract; the default grows
        // until the three-zero tail appears.
        if (!adaptive || round >= 4)
            throw InsufficientDegree("numerator has not stabilized by degree " +
                                     std::to_string(d_max) + "; raise d_max");
        d_max += n + 2 + d_max / 2;
    }
}

long long multiplicity(const Ideal& I) {
    GroebnerBasis gb = buchberger(I);
    DimensionInfo di = dimension(gb); // UnitIdeal for improper input
    std::vector<long long> q = hilbert_numerator(I);
    // Divide out (1-z)^{N - dim}; each factor must divide exactly.
    for (int step = 0; step < di.height; ++step) {
        long long at_one = 0;
        for (long long c : q) at_one += c;
        if (at_one != 0)
            throw Error("Hilbert numerator is not divisible by (1-z)^height; "
                        "dimension and Hilbert data disagree");
        // q = (1-z) r  =>  r_k = q_k + r_{k-1}.
        std::vector<long long> r;
        if (q.size() > 1) {
            r.resize(q.size() - 1, 0);
            long long prev = 0;
            for (size_t k = 0; k + 1 < q.size(); ++k) {
                prev += q[k];
                r[k] = prev;
            }
        }
        q = std::move(r);
    }
    long long e = 0;
    for (long long c : q) e += c;
    if (e < 1) throw Error("multiplicity came out below 1; engine invariant violated");
    return e;
}

HilbertData hilbert_data(const Ideal& I, int d_max) {
    if (d_max < 0) d_max = default_dmax(I);
    HilbertData out;
    out.ring = I.ring();
    GroebnerBasis gb = buchberger(I);
    for (int d = 0; d <= d_max; ++d) out.hf_values.push_back(hilbert_function(gb, d));
    out.numerator = hilbert_numerator(I, d_max);
    out.dim = dimension(gb).dim;
    out.multiplicity = multiplicity(I);
    return out;
}

} // namespace bettikit
