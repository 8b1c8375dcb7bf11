#include "bettikit/lpp.hpp"

#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

PowerVector::PowerVector(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw ParameterOutOfRange("power vector must be nonempty");
    int prev = 2;
    for (int b : bounds_) {
        if (b < 2) throw ParameterOutOfRange("power vector entries must be at least 2");
        if (b < prev) throw ParameterOutOfRange("power vector must be non-decreasing");
        prev = b;
    }
}

int PowerVector::finite_count() const {
    int c = 0;
    while (c < size() && is_finite(c)) ++c;
    return c;
}

std::vector<int> PowerVector::finite_bounds() const {
    return {bounds_.begin(), bounds_.begin() + finite_count()};
}

bool PowerVector::in_ja(const Monomial& v) const {
    if (v.num_vars() != size()) throw MixedRings("monomial arity does not match power vector");
    for (int i = 0; i < finite_count(); ++i)
        if (v.exponent(i) >= bound(i)) return true;
    return false;
}

LppIdeal make_lpp_ideal(RingPtr ring, PowerVector powers, std::vector<Monomial> lex_part) {
    if (ring->num_vars != powers.size())
        throw MixedRings("power vector length does not match the ring");
    std::vector<Polynomial> gens;
    for (int i = 0; i < powers.finite_count(); ++i)
        gens.push_back(Polynomial::monomial(ring, Monomial::variable(ring->num_vars, i, powers.bound(i))));
    for (const auto& m : lex_part) {
        if (powers.in_ja(m)) throw InJA("lex part generator lies in J(a)");
        gens.push_back(Polynomial::monomial(ring, m));
    }
    Ideal combined(ring, std::move(gens));
    return LppIdeal{std::move(ring), std::move(powers), std::move(lex_part), std::move(combined)};
}

namespace {

bool monomial_in(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

std::vector<Monomial> monomial_generators(const Ideal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (!g.is_monomial()) throw NotMonomial();
        gens.push_back(g.leading_monomial());
    }
    return gens;
}

} // namespace

bool is_lpp(const Ideal& I, const PowerVector& a) {
    if (I.ring()->num_vars != a.size())
        throw MixedRings("power vector length does not match the ring");
    std::vector<Monomial> gens = monomial_generators(I);
    // J(a) must be contained in I.
    for (int i = 0; i < a.finite_count(); ++i)
        if (!monomial_in(Monomial::variable(a.size(), i, a.bound(i)), gens)) return false;
    // Degreewise: membership outside J(a) must be upward-closed in lex.
    int d_top = I.max_generator_degree() + 1;
    for (int d = 1; d <= d_top; ++d) {
        bool outside_seen = false; // a monomial outside J(a) and outside I
        for (const auto& m : monomials_of_degree(*I.ring(), d, MonomialOrder::Lex)) {
            if (a.in_ja(m)) continue;
            bool in_ideal = monomial_in(m, gens);
            if (!in_ideal) outside_seen = true;
            if (in_ideal && outside_seen) return false; // a gap below a member
        }
    }
    return true;
}

int murai_k(const Monomial& v, const PowerVector& a) {
    if (a.in_ja(v)) throw InJA();
    // Support written descending: i_1 > i_2 > ... > i_t.
    std::vector<int> support = v.support();
    std::reverse(support.begin(), support.end());
    const int t = static_cast<int>(support.size());
    for (int l = 0; l < t; ++l) {
        int var = support[static_cast<size_t>(l)];
        long long cap = a.is_finite(var) ? a.bound(var) - 1 : PowerVector::kInfinity;
        if (v.exponent(var) < cap) return l + 1;
    }
    return t + 1;
}

long long murai_A(const Monomial& v, int i, const PowerVector& a) {
    const int k = murai_k(v, a);
    std::vector<int> support = v.support();
    std::reverse(support.begin(), support.end());
    const int t = static_cast<int>(support.size());
    long long sum = 0;
    for (int l = 1; l <= k; ++l) {
        // i_l is the 1-based index of the l-th support variable; i_{t+1} := 0.
        long long var_index = l <= t ? support[static_cast<size_t>(l - 1)] + 1 : 0;
        sum += binomial_ll(var_index - 1, i - l);
    }
    return sum;
}

long long murai_betti(const LppIdeal& I, int i, int j) {
    if (i < 0 || j < 0) return 0;
    const int n = I.ring->num_vars;
    std::vector<Monomial> gens = monomial_generators(I.combined);
    auto outside_ja_in_ideal = [&](int degree) {
        std::vector<Monomial> out;
        for (const auto& m : monomials_of_degree(*I.ring, degree))
            if (!I.powers.in_ja(m) && monomial_in(m, gens)) out.push_back(m);
        return out;
    };
    long long sum = 0;
    for (const auto& u : outside_ja_in_ideal(j + 1)) sum += murai_A(u, i, I.powers);
    long long cni = binomial_ll(n, i);
    for (const auto& u : outside_ja_in_ideal(j)) sum -= cni - murai_A(u, i + 1, I.powers);
    std::vector<int> fb = I.powers.finite_bounds();
    long long ci_term = fb.empty() ? ((i == 0 && j == 0) ? 1 : 0) : ci_betti(fb, i, i + j);
    return sum + ci_term;
}

LppIdeal construct_L(int a, int h, int N, FieldSpec field) {
    if (a <= 2 || h <= 1) throw ParameterOutOfRange("construct_L needs a > 2 and h > 1");
    if (N < 2 * h) throw ParameterOutOfRange("construct_L needs at least 2h variables");
    RingPtr ring = make_ring(N, "x", field);
    std::vector<int> bounds(static_cast<size_t>(N), PowerVector::kInfinity);
    for (int i = 0; i < h; ++i) bounds[static_cast<size_t>(i)] = a;
    PowerVector powers(std::move(bounds));

    auto mono = [N](std::vector<std::pair<int, int>> var_exps) {
        std::vector<uint16_t> e(static_cast<size_t>(N), 0);
        for (auto [v, x] : var_exps)
            e[static_cast<size_t>(v)] = static_cast<uint16_t>(e[static_cast<size_t>(v)] + x);
        return Monomial(std::move(e));
    };
    std::vector<Monomial> lex_part;
    // u = (x_1 ... x_h)^{a-1}
    {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < h; ++v) e.emplace_back(v, a - 1);
        lex_part.push_back(mono(std::move(e)));
    }
    // v_j = (x_1 ... x_{h-1})^{a-1} x_h^{a-2} x_{h+1} x_{h+j}, j = 1..h
    for (int jj = 1; jj <= h; ++jj) {
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v + 1 < h; ++v) e.emplace_back(v, a - 1);
        e.emplace_back(h - 1, a - 2);
        e.emplace_back(h, 1);
        e.emplace_back(h + jj - 1, 1);
        lex_part.push_back(mono(std::move(e)));
    }
    return make_lpp_ideal(std::move(ring), std::move(powers), std::move(lex_part));
}

long long prop_closed_form(int a, int h, int i, int j) {
    if (a <= 2 || h <= 1) throw ParameterOutOfRange("closed form needs a > 2 and h > 1");
    const int D = (a - 1) * h;
    if (i < 0 || j < 0 || j > D)
        throw ParameterOutOfRange("closed form is stated for 0 <= j <= D only");
    if (j < D - 1) {
        // Pure CI range: nonzero only on the Koszul diagonal j = i(a-1).
        return static_cast<long long>(j) == static_cast<long long>(i) * (a - 1)
                   ? binomial_ll(h, i)
                   : 0;
    }
    if (j == D - 1) return i > h ? 0 : binomial_ll(h, i - 1);
    return binomial_ll(2 * h, i) - binomial_ll(h, i);
}

} // namespace bettikit
