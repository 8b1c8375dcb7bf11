#include "bettikit/ideal.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw MixedRings("generator lives in a different ring");
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
        gens_.push_back(std::move(g));
    }
}

bool Ideal::is_monomial_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

int Ideal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

Ideal change_field(const Ideal& I, const FieldSpec& field) {
    if (I.ring()->field == field) return I;
    RingPtr target = make_ring(I.ring()->var_names, field);
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(change_field(g, field));
    return Ideal(std::move(target), std::move(gens));
}

} // namespace bettikit
