#include "bettikit/field.hpp"

#include "bettikit/errors.hpp"

#include <stdexcept>

namespace bettikit {

namespace {

long long mod_pos(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

long long mul_mod(long long a, long long b, long long p) {
    // p < 2^31, operands in [0, p): the product fits in 62 bits.
    return (a * b) % p;
}

long long pow_mod(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base = mod_pos(base, p);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long p) {
    // Extended Euclid; a in [1, p).
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DivisionByZero("element has no inverse modulo " + std::to_string(p));
    return mod_pos(t, p);
}

} // namespace

bool is_prime_u31(long long n) {
    if (n < 2) return false;
    for (long long d : {2, 3, 5, 7, 11, 13}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // Deterministic Miller-Rabin for n < 3,215,031,751 with bases 2, 3, 5, 7.
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (long long a : {2, 3, 5, 7}) {
        long long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(long long p) {
    if (p < 3 || p >= (1LL << 31) || !is_prime_u31(p) || p % 2 == 0)
        throw BadCharacteristic("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
    return kind == FieldKind::Rationals ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

FieldSpec default_field() { return FieldSpec::prime_field(32003); }

FieldElement FieldElement::zero(const FieldSpec& spec) { return from_integer(spec, 0); }

FieldElement FieldElement::one(const FieldSpec& spec) { return from_integer(spec, 1); }

FieldElement FieldElement::from_integer(const FieldSpec& spec, long long n) {
    FieldElement e;
    e.spec_ = spec;
    if (spec.kind == FieldKind::PrimeField)
        e.res_ = mod_pos(n, spec.characteristic);
    else
        e.rat_ = mpq_class(static_cast<long>(n));
    return e;
}

FieldElement FieldElement::from_rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    FieldElement e;
    e.spec_ = FieldSpec::rationals();
    e.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    e.rat_.canonicalize();
    return e;
}

FieldElement FieldElement::from_mpq(mpq_class v) {
    FieldElement e;
    e.spec_ = FieldSpec::rationals();
    v.canonicalize();
    e.rat_ = std::move(v);
    return e;
}

FieldElement FieldElement::from_residue(const FieldSpec& spec, long long r) {
    if (spec.kind != FieldKind::PrimeField) throw MixedFields("from_residue needs a prime field");
    return from_integer(spec, r);
}

bool FieldElement::is_zero() const {
    return spec_.kind == FieldKind::PrimeField ? res_ == 0 : rat_ == 0;
}

bool FieldElement::is_one() const {
    return spec_.kind == FieldKind::PrimeField ? res_ == 1 : rat_ == 1;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec() == b.spec()))
        throw MixedFields("cannot combine " + a.spec().name() + " with " + b.spec().name());
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    FieldElement e;
    e.spec_ = spec_;
    if (spec_.kind == FieldKind::PrimeField)
        e.res_ = mod_pos(res_ + o.res_, spec_.characteristic);
    else
        e.rat_ = rat_ + o.rat_;
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    FieldElement e;
    e.spec_ = spec_;
    if (spec_.kind == FieldKind::PrimeField)
        e.res_ = mod_pos(res_ - o.res_, spec_.characteristic);
    else
        e.rat_ = rat_ - o.rat_;
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    FieldElement e;
    e.spec_ = spec_;
    if (spec_.kind == FieldKind::PrimeField)
        e.res_ = mul_mod(res_, o.res_, spec_.characteristic);
    else
        e.rat_ = rat_ * o.rat_;
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(*this, o);
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    FieldElement e;
    e.spec_ = spec_;
    if (spec_.kind == FieldKind::PrimeField)
        e.res_ = res_ == 0 ? 0 : spec_.characteristic - res_;
    else
        e.rat_ = -rat_;
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement e;
    e.spec_ = spec_;
    if (spec_.kind == FieldKind::PrimeField)
        e.res_ = inv_mod(res_, spec_.characteristic);
    else
        e.rat_ = 1 / rat_;
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) return false;
    return spec_.kind == FieldKind::PrimeField ? res_ == o.res_ : rat_ == o.rat_;
}

std::string FieldElement::str() const {
    return spec_.kind == FieldKind::PrimeField ? std::to_string(res_) : rat_.get_str();
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

std::optional<FieldElement> sqrt_minus_one(const FieldSpec& spec) {
    if (spec.kind != FieldKind::PrimeField)
        throw std::logic_error("sqrt_minus_one needs a prime field");
    long long p = spec.characteristic;
    if (p % 4 != 1) return std::nullopt;
    // i = n^((p-1)/4) for the least quadratic non-residue n.
    long long n = 2;
    while (pow_mod(n, (p - 1) / 2, p) != p - 1) ++n;
    long long i = pow_mod(n, (p - 1) / 4, p);
    if (i > p - i) i = p - i;
    return FieldElement::from_integer(spec, i);
}

} // namespace bettikit
