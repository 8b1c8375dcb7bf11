#include "bettikit/monomial.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

Monomial::Monomial(std::vector<uint16_t> exps) : exps_(std::move(exps)) {
    for (uint16_t e : exps_) degree_ += e;
}

Monomial Monomial::variable(int num_vars, int index, int power) {
    if (index < 0 || index >= num_vars) throw std::out_of_range("variable index");
    Monomial m(num_vars);
    m.exps_[static_cast<size_t>(index)] = static_cast<uint16_t>(power);
    m.degree_ = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (num_vars() != other.num_vars()) throw MixedRings("monomials in different rings");
    if (degree_ > other.degree_) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    if (num_vars() != other.num_vars()) throw MixedRings("monomials in different rings");
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (num_vars() != other.num_vars()) throw MixedRings("monomials in different rings");
    Monomial m(num_vars());
    for (size_t i = 0; i < exps_.size(); ++i) {
        unsigned s = static_cast<unsigned>(exps_[i]) + other.exps_[i];
        if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
        m.exps_[i] = static_cast<uint16_t>(s);
    }
    m.degree_ = degree_ + other.degree_;
    return m;
}

Monomial Monomial::divide_exact(const Monomial& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial m(num_vars());
    for (size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] = static_cast<uint16_t>(exps_[i] - other.exps_[i]);
    m.degree_ = degree_ - other.degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw MixedRings("monomials in different rings");
    Monomial m(a.num_vars());
    int deg = 0;
    for (size_t i = 0; i < a.exps_.size(); ++i) {
        m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += m.exps_[i];
    }
    m.degree_ = deg;
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw MixedRings("monomials in different rings");
    Monomial m(a.num_vars());
    int deg = 0;
    for (size_t i = 0; i < a.exps_.size(); ++i) {
        m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        deg += m.exps_[i];
    }
    m.degree_ = deg;
    return m;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < num_vars(); ++i)
        if (exps_[static_cast<size_t>(i)] > 0) s.push_back(i);
    return s;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.num_vars() != b.num_vars()) throw MixedRings("monomials in different rings");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (order == MonomialOrder::Lex) {
        // x_1 > x_2 > ...: the first differing exponent decides.
        for (size_t i = 0; i < ea.size(); ++i)
            if (ea[i] != eb[i]) return ea[i] <=> eb[i];
        return std::strong_ordering::equal;
    }
    // DegRevLex: total degree first, then the last differing exponent decides
    // with the *smaller* exponent winning.
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return eb[i] <=> ea[i];
    return std::strong_ordering::equal;
}

size_t MonomialHash::operator()(const Monomial& m) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (uint16_t e : m.exponents()) h = h * 1099511628211ULL + e + 1;
    return h;
}

} // namespace bettikit
