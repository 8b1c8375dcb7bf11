#pragma once

#include "bettikit/field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bettikit {

// A standard-graded polynomial ring: deg(x_i) = 1, and x_1 > x_2 > ... > x_N
// in every monomial order. Shared immutably between polynomials.
struct RingDescriptor {
    int num_vars = 0;
    std::vector<std::string> var_names;
    FieldSpec field;

    // Index of a variable name, or -1.
    int var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<std::string> var_names, FieldSpec field);
// Variables prefix1, ..., prefixN.
RingPtr make_ring(int num_vars, const std::string& prefix, FieldSpec field);

bool same_ring(const RingPtr& a, const RingPtr& b);
// Same variables, possibly different coefficient field.
bool same_variables(const RingPtr& a, const RingPtr& b);

} // namespace bettikit
