#pragma once

#include "bettikit/betti.hpp"
#include "bettikit/ideal.hpp"

#include <limits>
#include <vector>

namespace bettikit {

// The exponent bound vector a = (a_1,...,a_N), entries in Z>=2 or infinity,
// non-decreasing. J(a) = (x_i^{a_i} : a_i finite).
class PowerVector {
public:
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    explicit PowerVector(std::vector<int> bounds);

    int size() const { return static_cast<int>(bounds_.size()); }
    int bound(int i) const { return bounds_[static_cast<size_t>(i)]; }
    bool is_finite(int i) const { return bounds_[static_cast<size_t>(i)] != kInfinity; }
    // Bounds are sorted, so the finite ones are a prefix.
    int finite_count() const;
    std::vector<int> finite_bounds() const;

    bool in_ja(const Monomial& v) const;

private:
    std::vector<int> bounds_;
};

struct LppIdeal {
    RingPtr ring;
    PowerVector powers;
    std::vector<Monomial> lex_part; // minimal generators outside J(a)
    Ideal combined;                 // J(a) + lex part
};

LppIdeal make_lpp_ideal(RingPtr ring, PowerVector powers, std::vector<Monomial> lex_part);

// True iff I contains J(a) and, degreewise, the monomials of I outside J(a)
// are lex-initial among all monomials outside J(a). NotMonomial for
// non-monomial input.
bool is_lpp(const Ideal& I, const PowerVector& a);

// k(v): first position (1-based, in the descending-support writing of v)
// whose exponent is below its variable bound minus one; t+1 when every
// exponent is maximal. InJA when v lies in J(a).
int murai_k(const Monomial& v, const PowerVector& a);

// A_i(v) = sum_{l=1}^{k(v)} C(i_l - 1, i - l) under the zero conventions.
long long murai_A(const Monomial& v, int i, const PowerVector& a);

// Murai's formula for beta_{i,i+j}(S/I), j the strand offset: the A_i sum
// over degree-(j+1) monomials of I outside J(a), minus the C(N,i)-A_{i+1}
// sum one degree down, plus the Koszul term of J(a).
long long murai_betti(const LppIdeal& I, int i, int j);

// L(a,h) = (x_1^a,...,x_h^a) + (u) + (v_1,...,v_h) in N variables.
LppIdeal construct_L(int a, int h, int N, FieldSpec field = default_field());

// The closed form of the L(a,h) Betti numbers for strand offsets j <= D,
// D = (a-1)h. ParameterOutOfRange outside the stated range.
long long prop_closed_form(int a, int h, int i, int j);

} // namespace bettikit
