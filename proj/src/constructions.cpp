#include "bettikit/constructions.hpp"

#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/groebner.hpp"
#include "bettikit/hilbert.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace bettikit {

NamedConstruction gamma(int h, FieldSpec field) {
    if (h < 1) throw ParameterOutOfRange("gamma needs h >= 1");
    std::vector<std::string> names;
    for (int j = 1; j <= h; ++j) names.push_back("u" + std::to_string(j));
    for (int j = 1; j <= h; ++j) names.push_back("v" + std::to_string(j));
    RingPtr ring = make_ring(std::move(names), field);
    std::vector<Polynomial> gens;
    for (int j = 0; j < h; ++j)
        for (int k = 0; k < h; ++k) {
            Monomial m = Monomial::variable(2 * h, j) * Monomial::variable(2 * h, h + k);
            gens.push_back(Polynomial::monomial(ring, std::move(m)));
        }
    return NamedConstruction{ConstructionKind::Gamma, {{"h", h}}, Ideal(ring, std::move(gens))};
}

NamedConstruction prime_candidate(int h, FieldSpec field) {
    if (h < 1) throw ParameterOutOfRange("prime_candidate needs h >= 1");
    std::vector<std::string> names;
    for (int j = 1; j <= h; ++j) names.push_back("y" + std::to_string(j));
    for (int j = 1; j <= h; ++j) names.push_back("z" + std::to_string(j));
    RingPtr ring = make_ring(std::move(names), field);
    auto y = [&](int j) { return Polynomial::variable(ring, j); };
    auto z = [&](int j) { return Polynomial::variable(ring, h + j); };
    std::vector<Polynomial> gens;
    for (int j = 0; j < h; ++j)
        for (int k = j + 1; k < h; ++k) gens.push_back((y(j) * z(k) - y(k) * z(j)).primitive());
    for (int j = 0; j < h; ++j)
        for (int k = j; k < h; ++k) gens.push_back((y(j) * y(k) + z(j) * z(k)).primitive());
    return NamedConstruction{ConstructionKind::PrimeCandidate, {{"h", h}},
                             Ideal(ring, std::move(gens))};
}

NamedConstruction complete_intersection(const std::vector<int>& degrees, int n, FieldSpec field) {
    if (degrees.empty() || n < static_cast<int>(degrees.size()))
        throw ParameterOutOfRange("complete intersection needs at most n degrees");
    for (int d : degrees)
        if (d < 1) throw ParameterOutOfRange("complete intersection degrees must be positive");
    RingPtr ring = make_ring(n, "x", field);
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < degrees.size(); ++i)
        gens.push_back(Polynomial::monomial(
            ring, Monomial::variable(n, static_cast<int>(i), degrees[i])));
    NamedConstruction out{ConstructionKind::CompleteIntersection, {}, Ideal(ring, std::move(gens))};
    out.params["n"] = n;
    out.params["h"] = static_cast<long long>(degrees.size());
    return out;
}

std::vector<std::vector<int>> minimal_nonfaces(const PureComplex& c) {
    const int n = c.vertex_count;
    if (n < 1 || n > 24) throw ParameterOutOfRange("vertex count out of range");
    auto is_face = [&](uint32_t mask) {
        for (const auto& f : c.facets) {
            uint32_t fm = 0;
            for (int v : f) fm |= 1u << v;
            if ((mask & ~fm) == 0) return true;
        }
        return mask == 0;
    };
    size_t facet_size = c.facets.empty() ? 0 : c.facets.front().size();
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= static_cast<int>(facet_size) + 1 && size <= n; ++size) {
        for (const auto& subset : subsets_of_size(n, size)) {
            uint32_t mask = 0;
            for (int v : subset) mask |= 1u << v;
            if (is_face(mask)) continue;
            bool minimal = true;
            for (int v : subset)
                if (!is_face(mask & ~(1u << v))) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back(subset);
        }
    }
    return out;
}

Ideal stanley_reisner(const PureComplex& c, const RingPtr& ring) {
    if (ring->num_vars != c.vertex_count)
        throw DimensionMismatch("ring has " + std::to_string(ring->num_vars) +
                                " variables for " + std::to_string(c.vertex_count) + " vertices");
    std::vector<Polynomial> gens;
    for (const auto& nf : minimal_nonfaces(c)) {
        std::vector<uint16_t> e(static_cast<size_t>(c.vertex_count), 0);
        for (int v : nf) e[static_cast<size_t>(v)] = 1;
        gens.push_back(Polynomial::monomial(ring, Monomial(std::move(e))));
    }
    return Ideal(ring, std::move(gens));
}

PureComplex random_pure_complex(int n, int facet_dim, int count, unsigned long long seed) {
    const int k = facet_dim + 1;
    if (n < 1 || k < 1 || k > n || count < 1) throw Infeasible("degenerate complex parameters");
    mpz_class total = binomial(n, k);
    if (total < count) throw Infeasible("asked for more facets than exist");
    std::vector<std::vector<int>> all = subsets_of_size(n, k);
    std::mt19937_64 gen(seed);
    for (size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[gen() % i]);
    all.resize(static_cast<size_t>(count));
    std::sort(all.begin(), all.end());
    return PureComplex{n, std::move(all)};
}

PrimeRouteReport verify_prime_route(int h, long long p) {
    if (h < 1 || h > 4) throw ParameterOutOfRange("verify_prime_route is desk-scale: 1 <= h <= 4");
    FieldSpec field = FieldSpec::prime_field(p);
    auto iota = sqrt_minus_one(field);
    if (!iota) throw NoSqrtMinusOne("-1 has no square root mod " + std::to_string(p));

    NamedConstruction candidate = prime_candidate(h, field);
    const RingPtr& ring = candidate.ideal.ring(); // y_1..y_h, z_1..z_h
    FieldElement i_elem = *iota;

    // u_j -> y_j + i z_j, v_j -> y_j - i z_j applied to the Gamma(h) products.
    auto y = [&](int j) { return Polynomial::variable(ring, j); };
    auto z = [&](int j) { return Polynomial::variable(ring, h + j); };
    std::vector<Polynomial> image_gens;
    for (int j = 0; j < h; ++j)
        for (int k = 0; k < h; ++k) {
            Polynomial u_j = y(j) + z(j).scaled(i_elem);
            Polynomial v_k = y(k) - z(k).scaled(i_elem);
            image_gens.push_back(u_j * v_k);
        }
    Ideal image(ring, std::move(image_gens));

    PrimeRouteReport report;
    report.h = h;
    report.p = p;
    report.ideal_match = ideal_equal(image, candidate.ideal);
    DimensionInfo di = dimension(candidate.ideal);
    report.computed_height = di.height;
    report.height_ok = di.height == h;
    report.computed_multiplicity = multiplicity(candidate.ideal);
    report.multiplicity_ok = report.computed_multiplicity == 2;
    return report;
}

} // namespace bettikit
