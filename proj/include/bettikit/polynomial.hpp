#pragma once

#include "bettikit/monomial.hpp"
#include "bettikit/ring.hpp"

#include <string>
#include <vector>

namespace bettikit {

struct Term {
    Monomial mon;
    FieldElement coeff;
};

// A sparse polynomial: nonzero terms, strictly descending in the active
// monomial order, no duplicate monomials.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::DegRevLex)
        : ring_(std::move(ring)), order_(order) {}

    // Combines duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::DegRevLex);
    static Polynomial monomial(RingPtr ring, Monomial m, FieldElement c,
                               MonomialOrder order = MonomialOrder::DegRevLex);
    static Polynomial monomial(RingPtr ring, Monomial m,
                               MonomialOrder order = MonomialOrder::DegRevLex); // coefficient 1
    static Polynomial variable(RingPtr ring, int index,
                               MonomialOrder order = MonomialOrder::DegRevLex);
    static Polynomial constant(RingPtr ring, FieldElement c,
                               MonomialOrder order = MonomialOrder::DegRevLex);

    const RingPtr& ring() const { return ring_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mon; }

    Polynomial with_order(MonomialOrder order) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
    Polynomial monic() const;
    // Over QQ: scale to coprime integer coefficients with positive leading
    // coefficient. Over GF(p): monic. Canonical generator representative.
    Polynomial primitive() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

// All C(N+d-1, d) monomials of degree d, descending in the given order.
std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d,
                                          MonomialOrder order = MonomialOrder::DegRevLex);

// Reinterprets coefficients over a different field. Integers map onto any
// field; a rational maps into GF(p) when its denominator is prime to p.
Polynomial change_field(const Polynomial& p, const FieldSpec& field);

} // namespace bettikit
