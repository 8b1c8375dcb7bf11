#include "bettikit/polynomial.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bettikit {

namespace {

void check_rings(const Polynomial& p, const Polynomial& q) {
    if (!same_ring(p.ring(), q.ring())) throw MixedRings();
}

struct TermCmpDesc {
    MonomialOrder order;
    bool operator()(const Term& a, const Term& b) const {
        return compare(a.mon, b.mon, order) == std::strong_ordering::greater;
    }
};

} // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
    for (const Term& t : terms) {
        if (t.mon.num_vars() != ring->num_vars) throw MixedRings("term monomial has wrong arity");
        if (!(t.coeff.spec() == ring->field)) throw MixedFields("term coefficient in wrong field");
    }
    std::sort(terms.begin(), terms.end(), TermCmpDesc{order});
    Polynomial p(std::move(ring), order);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon)
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, FieldElement c, MonomialOrder order) {
    return from_terms(std::move(ring), {Term{std::move(m), std::move(c)}}, order);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, MonomialOrder order) {
    FieldElement one = FieldElement::one(ring->field);
    return monomial(std::move(ring), std::move(m), one, order);
}

Polynomial Polynomial::variable(RingPtr ring, int index, MonomialOrder order) {
    Monomial m = Monomial::variable(ring->num_vars, index);
    return monomial(std::move(ring), std::move(m), order);
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c, MonomialOrder order) {
    Monomial one(ring->num_vars);
    return from_terms(std::move(ring), {Term{one, std::move(c)}}, order);
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mon.degree();
    for (const Term& t : terms_)
        if (t.mon.degree() != d) return false;
    return true;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(ring_, terms_, order);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_rings(*this, o);
    const Polynomial& q = o.order_ == order_ ? o : o.with_order(order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        auto c = compare(terms_[i].mon, q.terms_[j].mon, order_);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + q.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, -t.coeff});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_rings(*this, o);
    const Polynomial& q = o.order_ == order_ ? o : o.with_order(order_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * q.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : q.terms_) acc.push_back(Term{a.mon * b.mon, a.coeff * b.coeff});
    return from_terms(ring_, std::move(acc), order_);
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (!(c.spec() == ring_->field)) throw MixedFields();
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    // Multiplying every term by the same monomial preserves the order.
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    if (ring_->field.kind == FieldKind::PrimeField) return monic();
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Term& t : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rat().get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rat().get_num().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coeff.rat() < 0) scale = -scale;
    return scaled(FieldElement::from_mpq(scale));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    const Polynomial& q = o.order_ == order_ ? o : o.with_order(order_);
    if (terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != q.terms_[i].mon || terms_[i].coeff != q.terms_[i].coeff) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.coeff.str();
        bool negative = !c.empty() && c[0] == '-';
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) c = c.substr(1);
        bool coeff_is_one = (c == "1");
        if (!coeff_is_one || t.mon.is_one()) {
            out << c;
            if (!t.mon.is_one()) out << "*";
        }
        bool first_factor = true;
        for (int i = 0; i < t.mon.num_vars(); ++i) {
            int e = t.mon.exponent(i);
            if (e == 0) continue;
            if (!first_factor) out << "*";
            first_factor = false;
            out << ring_->var_names[static_cast<size_t>(i)];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    throw std::logic_error("unreachable");
}

namespace {
void enumerate_exponents(int var, int remaining, std::vector<uint16_t>& exps,
                         std::vector<Monomial>& out) {
    int n = static_cast<int>(exps.size());
    if (var == n - 1) {
        exps[static_cast<size_t>(var)] = static_cast<uint16_t>(remaining);
        out.push_back(Monomial(exps));
        exps[static_cast<size_t>(var)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[static_cast<size_t>(var)] = static_cast<uint16_t>(e);
        enumerate_exponents(var + 1, remaining - e, exps, out);
    }
    exps[static_cast<size_t>(var)] = 0;
}
} // namespace

std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d, MonomialOrder order) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> out;
    std::vector<uint16_t> exps(static_cast<size_t>(ring.num_vars), 0);
    enumerate_exponents(0, d, exps, out);
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
        return compare(a, b, order) == std::strong_ordering::greater;
    });
    return out;
}

Polynomial change_field(const Polynomial& p, const FieldSpec& field) {
    if (p.ring()->field == field) return p;
    RingPtr target = make_ring(p.ring()->var_names, field);
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        FieldElement c;
        if (p.ring()->field.kind == FieldKind::Rationals && field.kind == FieldKind::PrimeField) {
            const mpq_class& q = t.coeff.rat();
            long long pr = field.characteristic;
            mpz_class den_mod = q.get_den() % static_cast<long>(pr);
            if (den_mod == 0)
                throw BadCharacteristic("coefficient denominator divisible by " + std::to_string(pr));
            mpz_class num_mod = q.get_num() % static_cast<long>(pr);
            c = FieldElement::from_integer(field, num_mod.get_si()) /
                FieldElement::from_integer(field, den_mod.get_si());
        } else if (p.ring()->field.kind == FieldKind::PrimeField && field.kind == FieldKind::Rationals) {
            c = FieldElement::from_integer(field, t.coeff.residue());
        } else {
            // prime -> prime: lift the residue as an integer.
            c = FieldElement::from_integer(field, t.coeff.residue());
        }
        terms.push_back(Term{t.mon, std::move(c)});
    }
    return Polynomial::from_terms(std::move(target), std::move(terms), p.order());
}

} // namespace bettikit
