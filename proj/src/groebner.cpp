#include "bettikit/groebner.hpp"

#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace bettikit {

int degree_cap_default() {
    if (const char* env = std::getenv("BETTIKIT_DEGREE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 30;
}

bool GroebnerBasis::contains_unit() const {
    for (const auto& g : elements)
        if (!g.is_zero() && g.leading_monomial().is_one()) return true;
    return false;
}

namespace {

// Division by a list of polynomials sharing one order; the remainder has no
// term divisible by any leading monomial of the divisors.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis, MonomialOrder order) {
    Polynomial remainder(p.ring(), order);
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.mon)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Monomial q = lt.mon.divide_exact(reducer->leading_monomial());
            FieldElement c = lt.coeff / reducer->leading_term().coeff;
            p = p - reducer->times_monomial(q, c);
        } else {
            remainder = remainder + Polynomial::monomial(p.ring(), lt.mon, lt.coeff, order);
            p = p - Polynomial::monomial(p.ring(), lt.mon, lt.coeff, order);
        }
    }
    return remainder;
}

Polynomial spair(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = l.divide_exact(f.leading_monomial());
    Monomial mg = l.divide_exact(g.leading_monomial());
    FieldElement one = FieldElement::one(f.ring()->field);
    return f.times_monomial(mf, one / f.leading_term().coeff) -
           g.times_monomial(mg, one / g.leading_term().coeff);
}

struct Pair {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairCmp {
    MonomialOrder order;
    // Normal strategy: smallest lcm degree first, then the order on lcms,
    // then indices, so the trace is deterministic.
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        auto c = compare(a.lcm, b.lcm, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger with the product and chain criteria on a raw generator list.
// Inputs need not be homogeneous (the elimination route is not).
std::vector<Polynomial> buchberger_core(const RingPtr& ring, std::vector<Polynomial> gens,
                                        MonomialOrder order, int cap) {
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        Polynomial h = g.with_order(order).primitive();
        if (!h.is_zero()) basis.push_back(std::move(h));
    }

    std::set<Pair, PairCmp> queue{PairCmp{order}};
    std::set<std::pair<int, int>> handled;
    auto push_pairs_with = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[static_cast<size_t>(i)].leading_monomial(),
                                       basis[static_cast<size_t>(j)].leading_monomial());
            queue.insert(Pair{l.degree(), std::move(l), i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        handled.insert({p.i, p.j});
        if (p.deg > cap)
            throw DegreeCapExceeded("S-pair degree " + std::to_string(p.deg) +
                                    " exceeds the cap of " + std::to_string(cap));
        const Polynomial& f = basis[static_cast<size_t>(p.i)];
        const Polynomial& g = basis[static_cast<size_t>(p.j)];
        // Product criterion.
        if (f.leading_monomial().coprime(g.leading_monomial())) continue;
        // Chain criterion: some k with lm(k) | lcm(i,j) and both pairs done.
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[static_cast<size_t>(k)].leading_monomial().divides(p.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (handled.count(key(p.i, k)) && handled.count(key(p.j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial r = reduce_full(spair(f, g), basis, order).primitive();
        if (r.is_zero()) continue;
        basis.push_back(std::move(r));
        push_pairs_with(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < basis.size() && !dominated; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            if (lj.divides(li) && (li != lj || j < i)) dominated = true;
        }
        if (!dominated) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the rest, then normalize.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial lead = Polynomial::monomial(ring, minimal[i].leading_monomial(),
                                               minimal[i].leading_term().coeff, order);
        Polynomial tail = reduce_full(minimal[i] - lead, others, order);
        reduced.push_back((lead + tail).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) ==
               std::strong_ordering::greater;
    });
    return reduced;
}

} // namespace

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order, int degree_cap) {
    int cap = degree_cap > 0 ? degree_cap : degree_cap_default();
    GroebnerBasis gb{I, order, buchberger_core(I.ring(), I.generators(), order, cap), true};
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    if (!same_ring(p.ring(), G.ideal.ring())) throw MixedRings();
    return reduce_full(p.with_order(G.order), G.elements, G.order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw MixedRings();
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
    return spair(f, g.with_order(f.order()));
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& G) {
    return normal_form(p, G).is_zero();
}

Ideal initial_ideal(const Ideal& I, MonomialOrder order) {
    GroebnerBasis gb = buchberger(I, order);
    std::vector<Polynomial> lead;
    lead.reserve(gb.elements.size());
    for (const auto& g : gb.elements)
        lead.push_back(Polynomial::monomial(I.ring(), g.leading_monomial()));
    return Ideal(I.ring(), std::move(lead));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw MixedRings();
    GroebnerBasis gi = buchberger(I);
    for (const auto& g : J.generators())
        if (!ideal_member(g, gi)) return false;
    GroebnerBasis gj = buchberger(J);
    for (const auto& g : I.generators())
        if (!ideal_member(g, gj)) return false;
    return true;
}

namespace {

// Embed a polynomial of K[x_1..x_N] into K[t, x_1..x_N].
Polynomial embed_shift(const Polynomial& p, const RingPtr& aux) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        std::vector<uint16_t> e(static_cast<size_t>(aux->num_vars), 0);
        for (int i = 0; i < p.ring()->num_vars; ++i)
            e[static_cast<size_t>(i + 1)] = t.mon.exponent(i);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(aux, std::move(terms), MonomialOrder::Lex);
}

Polynomial contract_shift(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        std::vector<uint16_t> e(static_cast<size_t>(base->num_vars), 0);
        for (int i = 0; i < base->num_vars; ++i)
            e[static_cast<size_t>(i)] = t.mon.exponent(i + 1);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms), MonomialOrder::DegRevLex);
}

// Generators of I ∩ J as the t-free part of a lex basis of t*I + (1-t)*J.
// Lex with t greatest is an elimination order for t.
std::vector<Polynomial> intersect_core(const Ideal& I, const Ideal& J) {
    const RingPtr& ring = I.ring();
    std::vector<std::string> aux_names;
    aux_names.reserve(static_cast<size_t>(ring->num_vars) + 1);
    aux_names.push_back("#t");
    for (const auto& n : ring->var_names) aux_names.push_back(n);
    RingPtr aux = make_ring(std::move(aux_names), ring->field);

    Polynomial t = Polynomial::variable(aux, 0, MonomialOrder::Lex);
    Polynomial one_minus_t =
        Polynomial::constant(aux, FieldElement::one(ring->field), MonomialOrder::Lex) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * embed_shift(f, aux));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed_shift(g, aux));

    auto gb = buchberger_core(aux, std::move(gens), MonomialOrder::Lex, degree_cap_default());
    std::vector<Polynomial> result;
    for (const auto& g : gb) {
        // Under lex with t first, a t-free leading monomial forces the whole
        // element to be t-free.
        if (g.leading_monomial().exponent(0) == 0) result.push_back(contract_shift(g, ring));
    }
    return result;
}

// Split inhomogeneous elimination output into homogeneous components; every
// component of an element of a homogeneous ideal stays in the ideal.
std::vector<Polynomial> homogeneous_components(const Polynomial& p) {
    std::map<int, std::vector<Term>> by_degree;
    for (const Term& t : p.terms()) by_degree[t.mon.degree()].push_back(t);
    std::vector<Polynomial> out;
    for (auto& [d, terms] : by_degree)
        out.push_back(Polynomial::from_terms(p.ring(), std::move(terms), p.order()));
    return out;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw MixedRings();
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring());
    std::vector<Polynomial> gens;
    for (const auto& g : intersect_core(I, J))
        for (auto& c : homogeneous_components(g)) gens.push_back(std::move(c));
    // Canonical generators: the reduced degrevlex basis of the result.
    return Ideal(I.ring(), buchberger(Ideal(I.ring(), std::move(gens))).elements);
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw MixedRings();
    if (g.is_zero()) throw DivisionByZero("exact division by zero");
    MonomialOrder order = f.order();
    Polynomial r = f;
    Polynomial q(f.ring(), order);
    const Polynomial gg = g.with_order(order);
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!gg.leading_monomial().divides(lt.mon)) return std::nullopt;
        Monomial m = lt.mon.divide_exact(gg.leading_monomial());
        FieldElement c = lt.coeff / gg.leading_term().coeff;
        q = q + Polynomial::monomial(f.ring(), m, c, order);
        r = r - gg.times_monomial(m, c);
    }
    return q;
}

Ideal colon(const Ideal& I, const Polynomial& g) {
    if (!same_ring(I.ring(), g.ring())) throw MixedRings();
    if (g.is_zero()) throw ZeroDivisor();
    if (g.leading_monomial().is_one()) {
        // A unit: I : g = I; return the canonical basis.
        return Ideal(I.ring(), buchberger(I).elements);
    }
    Ideal gI(I.ring(), {g});
    Ideal meet = intersect(I, gI);
    std::vector<Polynomial> gens;
    for (const auto& f : meet.generators()) {
        auto q = divide_exact(f, g);
        if (!q)
            throw std::logic_error("intersection with (g) produced a non-multiple of g");
        gens.push_back(std::move(*q));
    }
    return Ideal(I.ring(), buchberger(Ideal(I.ring(), std::move(gens))).elements);
}

DimensionInfo dimension(const GroebnerBasis& gb) {
    const int n = gb.ideal.ring()->num_vars;
    if (gb.contains_unit()) throw UnitIdeal("dimension of the unit ideal");
    if (n > 24) throw std::invalid_argument("dimension search supports at most 24 variables");
    std::vector<uint32_t> lead_masks;
    for (const auto& g : gb.elements) {
        uint32_t m = 0;
        for (int v : g.leading_monomial().support()) m |= (1u << v);
        lead_masks.push_back(m);
    }
    // W independent  <=>  no leading monomial supported inside W.
    int best = 0;
    for (uint32_t w = 0; w < (1u << n); ++w) {
        bool independent = true;
        for (uint32_t lm : lead_masks) {
            if ((lm & ~w) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(w));
    }
    return DimensionInfo{best, n - best};
}

DimensionInfo dimension(const Ideal& I) { return dimension(buchberger(I)); }

namespace {

// Gauss-Jordan inverse over the coefficient field; nullopt when singular.
std::optional<std::vector<std::vector<FieldElement>>> invert_matrix(
    std::vector<std::vector<FieldElement>> m, const FieldSpec& field) {
    const size_t n = m.size();
    std::vector<std::vector<FieldElement>> inv(n);
    for (size_t i = 0; i < n; ++i) {
        inv[i].assign(n, FieldElement::zero(field));
        inv[i][i] = FieldElement::one(field);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        FieldElement inv_p = m[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * inv_p;
            inv[col][j] = inv[col][j] * inv_p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            FieldElement f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] = m[row][j] - f * m[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

CoordinateChange random_coordinate_change(const RingPtr& ring, unsigned long long seed) {
    const int n = ring->num_vars;
    const long long needed = 2LL * n * n;
    if (ring->field.kind == FieldKind::PrimeField && ring->field.characteristic < needed)
        throw FieldTooSmall("field with " + std::to_string(ring->field.characteristic) +
                            " elements is below the genericity headroom of " + std::to_string(needed));
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<FieldElement>> m(static_cast<size_t>(n));
        for (auto& row : m) {
            row.reserve(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                long long v;
                if (ring->field.kind == FieldKind::PrimeField)
                    v = static_cast<long long>(gen() % static_cast<unsigned long long>(
                                                           ring->field.characteristic));
                else
                    v = static_cast<long long>(gen() % static_cast<unsigned long long>(needed + 1)) -
                        needed / 2;
                row.push_back(FieldElement::from_integer(ring->field, v));
            }
        }
        if (invert_matrix(m, ring->field)) return CoordinateChange{ring, std::move(m), seed};
    }
    throw Error("no invertible matrix found after 1000 draws");
}

CoordinateChange inverse(const CoordinateChange& cc) {
    auto inv = invert_matrix(cc.matrix, cc.ring->field);
    if (!inv) throw std::logic_error("coordinate change matrix is singular");
    return CoordinateChange{cc.ring, std::move(*inv), cc.seed};
}

Polynomial apply(const CoordinateChange& cc, const Polynomial& p) {
    if (!same_ring(cc.ring, p.ring())) throw MixedRings();
    const int n = cc.ring->num_vars;
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < n; ++j)
            if (!cc.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
                terms.push_back(Term{Monomial::variable(n, j),
                                     cc.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]});
        images.push_back(Polynomial::from_terms(cc.ring, std::move(terms), p.order()));
    }
    Polynomial out(p.ring(), p.order());
    for (const Term& t : p.terms()) {
        Polynomial prod = Polynomial::constant(p.ring(), t.coeff, p.order());
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < t.mon.exponent(i); ++e) prod = prod * images[static_cast<size_t>(i)];
        out = out + prod;
    }
    return out;
}

Ideal apply(const CoordinateChange& cc, const Ideal& I) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(apply(cc, g));
    return Ideal(I.ring(), std::move(gens));
}

std::optional<Polynomial> linkage_witness(const Ideal& F, const Ideal& target, int D,
                                          int max_support) {
    if (!same_ring(F.ring(), target.ring())) throw MixedRings();
    if (D < 0) throw std::invalid_argument("witness degree must be non-negative");
    GroebnerBasis gb_target = buchberger(target);
    for (const auto& f : F.generators())
        if (!ideal_member(f, gb_target)) throw NotContained();
    if (dimension(F).height != static_cast<int>(F.generators().size()))
        throw NotRegularSequence();

    GroebnerBasis gb_f = buchberger(F);
    const RingPtr& ring = F.ring();
    std::vector<Monomial> mons = monomials_of_degree(*ring, D);
    const int m = static_cast<int>(mons.size());
    FieldElement one = FieldElement::one(ring->field);

    auto try_candidate = [&](const Polynomial& g) -> bool {
        if (g.is_zero()) return false;
        // Cheap necessary test: target ⊆ F : g.
        for (const auto& t : target.generators())
            if (!ideal_member(t * g, gb_f)) return false;
        return ideal_equal(colon(F, g), target);
    };

    // Supports in increasing size; signs with the first coefficient fixed
    // to +1, '+' explored before '-'.
    for (int support = 1; support <= max_support && support <= m; ++support) {
        for (const auto& subset : subsets_of_size(m, support)) {
            for (unsigned signs = 0; signs < (1u << (support - 1)); ++signs) {
                std::vector<Term> terms;
                terms.reserve(static_cast<size_t>(support));
                for (int k = 0; k < support; ++k) {
                    FieldElement c = one;
                    if (k > 0 && (signs >> (k - 1)) & 1u) c = -one;
                    terms.push_back(Term{mons[static_cast<size_t>(subset[static_cast<size_t>(k)])], c});
                }
                Polynomial g = Polynomial::from_terms(ring, std::move(terms));
                if (try_candidate(g)) return g;
            }
        }
    }
    return std::nullopt;
}

} // namespace bettikit
