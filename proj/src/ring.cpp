#include "bettikit/ring.hpp"

#include <set>
#include <stdexcept>

namespace bettikit {

int RingDescriptor::var_index(const std::string& name) const {
    for (int i = 0; i < num_vars; ++i)
        if (var_names[static_cast<size_t>(i)] == name) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> var_names, FieldSpec field) {
    if (var_names.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
    std::set<std::string> seen(var_names.begin(), var_names.end());
    if (seen.size() != var_names.size()) throw std::invalid_argument("variable names must be distinct");
    auto r = std::make_shared<RingDescriptor>();
    r->num_vars = static_cast<int>(var_names.size());
    r->var_names = std::move(var_names);
    r->field = field;
    return r;
}

RingPtr make_ring(int num_vars, const std::string& prefix, FieldSpec field) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(num_vars));
    for (int i = 1; i <= num_vars; ++i) names.push_back(prefix + std::to_string(i));
    return make_ring(std::move(names), field);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->num_vars == b->num_vars && a->field == b->field && a->var_names == b->var_names;
}

bool same_variables(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->num_vars == b->num_vars && a->var_names == b->var_names;
}

} // namespace bettikit
