#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bettikit {

enum class FieldKind { Rationals, PrimeField };

// The coefficient field: the rationals, or GF(p) for an odd prime p < 2^31.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long long characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(long long p); // throws BadCharacteristic

    bool operator==(const FieldSpec&) const = default;
    std::string name() const; // "QQ" or "GF(p)"
};

// GF(32003) is the default working field; QQ is used for certification runs.
FieldSpec default_field();

enum class ArithOp { Add, Sub, Mul, Div };

// An immutable element of a FieldSpec. Rationals are kept in lowest terms
// with positive denominator; prime-field residues live in [0, p-1].
class FieldElement {
public:
    FieldElement() : spec_(FieldSpec::rationals()) {}

    static FieldElement zero(const FieldSpec& spec);
    static FieldElement one(const FieldSpec& spec);
    static FieldElement from_integer(const FieldSpec& spec, long long n);
    static FieldElement from_rational(long long num, long long den); // over QQ
    static FieldElement from_mpq(mpq_class v);                       // over QQ
    static FieldElement from_residue(const FieldSpec& spec, long long r);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // DivisionByZero
    FieldElement operator-() const;
    FieldElement inverse() const; // DivisionByZero

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    long long residue() const { return res_; }    // PrimeField payload
    const mpq_class& rat() const { return rat_; } // Rationals payload

    std::string str() const;

private:
    FieldSpec spec_;
    long long res_ = 0;
    mpq_class rat_;
};

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

// A square root of -1 in GF(p), when p = 1 (mod 4); the representative
// in [0, p/2) is returned. Absent when p = 3 (mod 4).
std::optional<FieldElement> sqrt_minus_one(const FieldSpec& spec);

bool is_prime_u31(long long n);

} // namespace bettikit
