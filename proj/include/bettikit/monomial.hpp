#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bettikit {

// A monomial in a fixed number of variables; the degree is cached.
// Exponents are 16-bit: every construction in scope stays far below that.
class Monomial {
public:
    explicit Monomial(int num_vars) : exps_(static_cast<size_t>(num_vars), 0) {}
    explicit Monomial(std::vector<uint16_t> exps);
    static Monomial variable(int num_vars, int index, int power = 1);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    uint16_t exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<uint16_t>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const; // overflow-checked
    Monomial divide_exact(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    // Variable indices carrying a positive exponent, ascending.
    std::vector<int> support() const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<uint16_t> exps_;
    int degree_ = 0;
};

// Both orders refine x_1 > x_2 > ... > x_N.
enum class MonomialOrder { Lex, DegRevLex };

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

} // namespace bettikit
