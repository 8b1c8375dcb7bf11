#pragma once

#include "bettikit/polynomial.hpp"

#include <vector>

namespace bettikit {

// A homogeneous ideal given by generators. Zero generators are dropped;
// inhomogeneous or foreign-ring generators are rejected.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_monomial_ideal() const;
    int max_generator_degree() const; // 0 when there are no generators

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

Ideal change_field(const Ideal& I, const FieldSpec& field);

} // namespace bettikit
