#include "bettikit/verify.hpp"

#include "bettikit/bounds.hpp"
#include "bettikit/combinatorics.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/hilbert.hpp"
#include "bettikit/io.hpp"
#include "bettikit/lpp.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

namespace bettikit {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::ostringstream msg;
    bool any = false;
    template <class T> Failure& operator<<(const T& v) {
        msg << v;
        any = true;
        return *this;
    }
};

std::string join(const std::vector<long long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// --- random inputs for the property suites (all seeded, reproducible) ---

long long rng_below(std::mt19937_64& gen, long long n) {
    return static_cast<long long>(gen() % static_cast<unsigned long long>(n));
}

Polynomial random_homogeneous(std::mt19937_64& gen, const RingPtr& ring, int degree, int max_terms) {
    const auto mons = monomials_of_degree(*ring, degree);
    std::vector<Term> terms;
    int want = 1 + static_cast<int>(rng_below(gen, max_terms));
    for (int t = 0; t < want; ++t) {
        const Monomial& m = mons[static_cast<size_t>(rng_below(gen, static_cast<long long>(mons.size())))];
        long long c = rng_below(gen, 7) - 3;
        if (c == 0) c = 1;
        terms.push_back(Term{m, FieldElement::from_integer(ring->field, c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Ideal random_ideal(std::mt19937_64& gen, FieldSpec field, int max_vars = 4) {
    int n = 2 + static_cast<int>(rng_below(gen, max_vars - 1));
    RingPtr ring = make_ring(n, "x", field);
    int count = 1 + static_cast<int>(rng_below(gen, 3));
    std::vector<Polynomial> gens;
    for (int k = 0; k < count; ++k) {
        int d = 1 + static_cast<int>(rng_below(gen, 3));
        Polynomial p = random_homogeneous(gen, ring, d, 3);
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) gens.push_back(Polynomial::variable(ring, 0));
    return Ideal(ring, std::move(gens));
}

// Deterministic corpus of pure complexes; criterion 6 pins seed 42.
struct CorpusEntry {
    std::string id;
    PureComplex complex;
    Ideal ideal;
};

std::vector<CorpusEntry> build_corpus(int count, unsigned long long master_seed, FieldSpec field) {
    std::vector<CorpusEntry> corpus;
    corpus.reserve(static_cast<size_t>(count));
    for (int idx = 0; idx < count; ++idx) {
        std::mt19937_64 gen(master_seed * 1000003ULL + static_cast<unsigned long long>(idx));
        int n = 4 + static_cast<int>(rng_below(gen, 5)); // 4..8 vertices
        int fd_max = std::min(3, n - 2);
        int facet_dim = 1 + static_cast<int>(rng_below(gen, fd_max));
        long long total = binomial_ll(n, facet_dim + 1);
        int facets = 2 + static_cast<int>(rng_below(gen, std::min<long long>(total - 1, 6)));
        PureComplex c = random_pure_complex(n, facet_dim, facets, gen());
        RingPtr ring = make_ring(n, "x", field);
        Ideal ideal = stanley_reisner(c, ring);
        corpus.push_back(CorpusEntry{"sr-" + std::to_string(idx), std::move(c), std::move(ideal)});
    }
    return corpus;
}

// --- the eight criteria ---

CheckResult criterion_gamma_sharpness(VerifyLevel level) {
    Failure fail;
    int h_max = level == VerifyLevel::Full ? 4 : 2;
    std::string detail;
    for (FieldSpec field : {default_field(), FieldSpec::rationals()}) {
        for (int h = 1; h <= h_max; ++h) {
            std::vector<long long> strand = quadratic_strand(gamma(h, field).ideal);
            std::vector<long long> expected;
            for (int i = 0; i + 2 <= 2 * h; ++i) expected.push_back(strand_bound(h, i));
            if (strand != expected)
                fail << "gamma(" << h << ") over " << field.name() << ": strand " << join(strand)
                     << " != " << join(expected) << "; ";
            else if (field.kind == FieldKind::Rationals)
                detail += "h=" + std::to_string(h) + ":" + join(strand) + " ";
        }
    }
    return CheckResult{"gamma-sharpness", !fail.any, fail.any ? fail.msg.str() : detail, 0};
}

CheckResult criterion_prime_sharpness(VerifyLevel level) {
    Failure fail;
    int h_max = level == VerifyLevel::Full ? 3 : 2;
    std::string detail;
    for (int h = 1; h <= h_max; ++h) {
        SharpnessReport rep = sharpness_certificate(h);
        if (!rep.equal)
            fail << "prime(" << h << ") strand " << join(rep.strand) << " != bounds "
                 << join(rep.bounds) << "; ";
        if (!rep.route.ok())
            fail << "prime route h=" << h << ": match=" << rep.route.ideal_match
                 << " height=" << rep.route.computed_height
                 << " mult=" << rep.route.computed_multiplicity << "; ";
        if (rep.ok()) detail += "h=" + std::to_string(h) + ":" + join(rep.strand) + " ";
    }
    return CheckResult{"prime-sharpness", !fail.any, fail.any ? fail.msg.str() : detail, 0};
}

CheckResult criterion_murai_oracle(VerifyLevel level) {
    Failure fail;
    std::vector<std::pair<int, int>> engine_pairs =
        level == VerifyLevel::Full ? std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}
                                   : std::vector<std::pair<int, int>>{{3, 2}};
    long long cells = 0;
    for (auto [a, h] : engine_pairs) {
        const int N = 2 * h;
        const int D = (a - 1) * h;
        LppIdeal L = construct_L(a, h, N);
        if (!is_lpp(L.combined, L.powers)) fail << "L(" << a << "," << h << ") is not a-LPP; ";
        BettiTable table = betti_table(L.combined, N, N + D + 1);
        for (int i = 0; i <= N; ++i) {
            for (int j = 0; j <= D + 1; ++j) {
                long long murai = murai_betti(L, i, j);
                long long koszul = i + j <= table.j_max ? table.at(i, i + j) : 0;
                if (murai != koszul)
                    fail << "L(" << a << "," << h << ") (i=" << i << ",j=" << j << "): murai "
                         << murai << " != koszul " << koszul << "; ";
                if (j <= D) {
                    long long closed = prop_closed_form(a, h, i, j);
                    if (murai != closed)
                        fail << "L(" << a << "," << h << ") (i=" << i << ",j=" << j << "): murai "
                             << murai << " != closed form " << closed << "; ";
                }
                ++cells;
            }
        }
    }
    // The closed form against the formula alone, across the wider grid.
    std::vector<std::pair<int, int>> formula_pairs;
    for (int a : {3, 4, 5})
        for (int h : {2, 3})
            if (level == VerifyLevel::Full || (h == 2 && a <= 4)) formula_pairs.emplace_back(a, h);
    for (auto [a, h] : formula_pairs) {
        const int D = (a - 1) * h;
        LppIdeal L = construct_L(a, h, 2 * h);
        for (int i = 0; i <= 2 * h + 2; ++i)
            for (int j = 0; j <= D; ++j) {
                if (murai_betti(L, i, j) != prop_closed_form(a, h, i, j))
                    fail << "closed form mismatch at L(" << a << "," << h << ") i=" << i
                         << " j=" << j << "; ";
                ++cells;
            }
    }
    return CheckResult{"murai-oracle", !fail.any,
                       fail.any ? fail.msg.str() : std::to_string(cells) + " cells agree", 0};
}

CheckResult criterion_lemma_aci(VerifyLevel) {
    Failure fail;
    NamedConstruction G2 = gamma(2, FieldSpec::rationals());
    const RingPtr& ring = G2.ideal.ring();
    Ideal F(ring, {G2.ideal.generators()[0], G2.ideal.generators()[3]}); // u1v1, u2v2
    auto witness = linkage_witness(F, G2.ideal, 2);
    std::string detail;
    if (!witness) {
        fail << "no degree-2 linkage witness found for Gamma(2); ";
    } else {
        LemmaAciReport rep = lemma_aci_check(F, *witness);
        if (!rep.ok) {
            for (const auto& c : rep.cells)
                if (!c.ok)
                    fail << "cell (" << c.i << "," << c.j << "): " << c.lhs << " vs " << c.rhs
                         << "; ";
        } else {
            long long checked = 0, skipped = 0;
            for (const auto& c : rep.cells) (c.skipped ? skipped : checked) += 1;
            detail = "witness " + witness->str() + "; " + std::to_string(checked) +
                     " cells verified, " + std::to_string(skipped) + " outside the exact range";
        }
    }
    // Degenerate one-step case: F = (u1^2), g = v1, I = (u1^2).
    RingPtr r2 = make_ring({"u1", "v1"}, FieldSpec::rationals());
    Polynomial u = Polynomial::variable(r2, 0), v = Polynomial::variable(r2, 1);
    LemmaAciReport rep1 = lemma_aci_check(Ideal(r2, {u * u}), v);
    if (!rep1.ok) fail << "h=1 degenerate case failed; ";
    return CheckResult{"lemma-aci", !fail.any, fail.any ? fail.msg.str() : detail, 0};
}

std::vector<long long> euler_polynomial(const BettiTable& t) {
    std::vector<long long> p(static_cast<size_t>(t.j_max) + 1, 0);
    for (const auto& [cell, v] : t.entries)
        p[static_cast<size_t>(cell.second)] += cell.first % 2 == 0 ? v : -v;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// (1-z)^h scaled; used for the closed-form Gamma numerator 2(1-z)^h - (1-z)^{2h}.
std::vector<long long> one_minus_z_pow(int h, long long scale) {
    std::vector<long long> p(static_cast<size_t>(h) + 1, 0);
    for (int k = 0; k <= h; ++k)
        p[static_cast<size_t>(k)] = (k % 2 == 0 ? scale : -scale) * binomial_ll(h, k);
    return p;
}

CheckResult criterion_hilbert(VerifyLevel level) {
    Failure fail;
    int h_max = level == VerifyLevel::Full ? 4 : 2;
    for (int h = 1; h <= h_max; ++h) {
        std::vector<long long> q = hilbert_numerator(gamma(h).ideal);
        std::vector<long long> expected = one_minus_z_pow(h, 2);
        std::vector<long long> sub = one_minus_z_pow(2 * h, 1);
        expected.resize(sub.size(), 0);
        for (size_t k = 0; k < sub.size(); ++k) expected[k] -= sub[k];
        while (!expected.empty() && expected.back() == 0) expected.pop_back();
        if (q != expected)
            fail << "gamma(" << h << ") numerator " << join(q) << " != closed form "
                 << join(expected) << "; ";
    }
    // Euler characteristic against the numerator for the named constructions.
    struct NamedIdeal {
        std::string id;
        Ideal ideal;
    };
    std::vector<NamedIdeal> named;
    for (int h = 1; h <= h_max; ++h) named.push_back({"gamma" + std::to_string(h), gamma(h).ideal});
    for (int h = 1; h <= std::min(3, h_max); ++h) {
        named.push_back({"prime" + std::to_string(h), prime_candidate(h).ideal});
        if (h <= 2)
            named.push_back({"primeQ" + std::to_string(h),
                             prime_candidate(h, FieldSpec::rationals()).ideal});
    }
    named.push_back({"ci22", complete_intersection({2, 2}, 2).ideal});
    named.push_back({"ci234", complete_intersection({2, 3, 4}, 3).ideal});
    named.push_back({"L32", construct_L(3, 2, 4).combined});
    named.push_back({"L32Q", construct_L(3, 2, 4, FieldSpec::rationals()).combined});
    if (level == VerifyLevel::Full) {
        named.push_back({"prime3Q", prime_candidate(3, FieldSpec::rationals()).ideal});
        named.push_back({"L33", construct_L(3, 3, 6).combined});
        RingPtr r4 = make_ring(4, "x", default_field());
        named.push_back({"sr-disjoint", stanley_reisner(PureComplex{4, {{0, 1}, {2, 3}}}, r4)});
        named.push_back(
            {"sr-boundary", stanley_reisner(PureComplex{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}}, r4)});
    }
    for (const auto& [id, ideal] : named) {
        std::vector<long long> q = hilbert_numerator(ideal);
        // The table window must reach past the numerator degree; a spare
        // zero row guards against cells beyond it.
        int j_max = std::max(ideal.ring()->num_vars + ideal.max_generator_degree(),
                             static_cast<int>(q.size()));
        BettiTable t = betti_table(ideal, ideal.ring()->num_vars, j_max);
        std::vector<long long> euler = euler_polynomial(t);
        if (euler != q)
            fail << id << ": Euler " << join(euler) << " != numerator " << join(q) << "; ";
    }
    return CheckResult{"hilbert-consistency", !fail.any,
                       fail.any ? fail.msg.str()
                                : std::to_string(named.size()) + " Euler identities exact",
                       0};
}

CheckResult criterion_corpus(VerifyLevel level) {
    Failure fail;
    int count = level == VerifyLevel::Full ? 100 : 20;
    auto corpus = build_corpus(count, 42, default_field());
    int tight = 0, index = 0;
    for (const auto& entry : corpus) {
        BoundReport rep = check_theorem(entry.ideal, true, entry.id);
        if (!rep.satisfied) {
            fail << entry.id << " violates the bound: strand " << join(rep.strand) << " bounds "
                 << join(rep.bounds) << "; ";
        }
        if (!rep.strand.empty() &&
            rep.tight_indices.size() == rep.strand.size())
            ++tight;
        if (index++ < 10) {
            // Cross-module guard on the first few: the Euler polynomial of
            // the full table must reproduce the Hilbert numerator.
            std::vector<long long> q = hilbert_numerator(entry.ideal);
            int j_max = std::max(entry.ideal.ring()->num_vars +
                                     entry.ideal.max_generator_degree(),
                                 static_cast<int>(q.size()));
            BettiTable t = betti_table(entry.ideal, entry.ideal.ring()->num_vars, j_max);
            if (euler_polynomial(t) != q)
                fail << entry.id << " fails the Euler identity; ";
        }
    }
    return CheckResult{"theorem-corpus", !fail.any,
                       fail.any ? fail.msg.str()
                                : std::to_string(count) + " ideals satisfied (" +
                                      std::to_string(tight) + " everywhere-tight)",
                       0};
}

CheckResult criterion_remark(VerifyLevel level) {
    Failure fail;
    int h_max = level == VerifyLevel::Full ? 16 : 8;
    long long checks = 0;
    for (int h = 1; h <= h_max; ++h)
        for (int t = 0; t <= h; ++t)
            for (int i = 0; i <= 2 * h; ++i) {
                RemarkBound rb = remark_bound(h, t, i);
                if (rb.intermediate > rb.final)
                    fail << "remark(" << h << "," << t << "," << i << "): " << rb.intermediate
                         << " > " << rb.final << "; ";
                ++checks;
            }
    int k_max = level == VerifyLevel::Full ? 12 : 8;
    for (int m = 0; m <= k_max; ++m)
        for (int t = 0; t <= k_max; ++t)
            for (int k = 0; k <= k_max; ++k) {
                if (!vandermonde_check(m, t, k))
                    fail << "vandermonde(" << m << "," << t << "," << k << ") failed; ";
                ++checks;
            }
    return CheckResult{"remark-bounds", !fail.any,
                       fail.any ? fail.msg.str() : std::to_string(checks) + " inequalities exact",
                       0};
}

CheckResult criterion_properties(VerifyLevel level) {
    Failure fail;
    const int cases = level == VerifyLevel::Full ? 500 : 60;

    // Buchberger criterion: every S-pair of the returned basis reduces to 0,
    // and the input generators lie in the basis's ideal.
    {
        std::mt19937_64 gen(1001);
        for (int c = 0; c < cases && !fail.any; ++c) {
            FieldSpec field = c % 3 == 0 ? FieldSpec::rationals() : default_field();
            Ideal I = random_ideal(gen, field);
            GroebnerBasis gb = buchberger(I);
            for (const auto& g : I.generators())
                if (!ideal_member(g, gb)) fail << "case " << c << ": generator not in basis; ";
            for (size_t a = 0; a < gb.elements.size(); ++a)
                for (size_t b = a + 1; b < gb.elements.size(); ++b)
                    if (!normal_form(s_polynomial(gb.elements[a], gb.elements[b]), gb).is_zero())
                        fail << "case " << c << ": S-pair does not reduce to zero; ";
        }
    }
    // Colon soundness: g * (I : g) <= I and I <= I : g.
    {
        std::mt19937_64 gen(2002);
        for (int c = 0; c < cases && !fail.any; ++c) {
            Ideal I = random_ideal(gen, default_field(), 3);
            const RingPtr& ring = I.ring();
            Polynomial g = random_homogeneous(gen, ring, 1 + static_cast<int>(rng_below(gen, 2)), 2);
            if (g.is_zero()) g = Polynomial::variable(ring, 0);
            Ideal quotient = colon(I, g);
            GroebnerBasis gbI = buchberger(I);
            for (const auto& q : quotient.generators())
                if (!ideal_member(q * g, gbI)) fail << "case " << c << ": g*(I:g) escapes I; ";
            GroebnerBasis gbQ = buchberger(quotient);
            for (const auto& f : I.generators())
                if (!ideal_member(f, gbQ)) fail << "case " << c << ": I escapes I:g; ";
        }
    }
    // d^2 = 0 on every assembled strand (the engine asserts it internally)
    // and homology dimensions are non-negative.
    {
        std::mt19937_64 gen(3003);
        for (int c = 0; c < cases && !fail.any; ++c) {
            Ideal I = random_ideal(gen, default_field(), 3);
            int n = I.ring()->num_vars;
            int i = static_cast<int>(rng_below(gen, n + 1));
            int j = i + static_cast<int>(rng_below(gen, 4));
            try {
                if (betti_number(I, i, j) < 0) fail << "case " << c << ": negative Betti number; ";
            } catch (const std::logic_error& e) {
                fail << "case " << c << ": " << e.what() << "; ";
            }
        }
    }
    // Dimension is order-independent.
    {
        std::mt19937_64 gen(4004);
        for (int c = 0; c < cases && !fail.any; ++c) {
            Ideal I = random_ideal(gen, default_field(), 3);
            DimensionInfo via_revlex = dimension(I);
            DimensionInfo via_lex = dimension(initial_ideal(I, MonomialOrder::Lex));
            if (via_revlex.dim != via_lex.dim)
                fail << "case " << c << ": dim " << via_revlex.dim << " (degrevlex) vs "
                     << via_lex.dim << " (lex); ";
        }
    }
    // Print/parse round trip is the identity on the printed form.
    {
        std::mt19937_64 gen(5005);
        for (int c = 0; c < cases && !fail.any; ++c) {
            FieldSpec field = c % 3 == 0   ? FieldSpec::rationals()
                              : c % 3 == 1 ? default_field()
                                           : FieldSpec::prime_field(13);
            Ideal I = random_ideal(gen, field);
            std::string once = print_ideal(I);
            Ideal back = parse_ideal(once);
            if (print_ideal(back) != once) fail << "case " << c << ": print is not a fixed point; ";
            if (!ideal_equal(I, back)) fail << "case " << c << ": parsed ideal differs; ";
        }
    }
    return CheckResult{"property-suites", !fail.any,
                       fail.any ? fail.msg.str()
                                : "5 properties x " + std::to_string(cases) + " cases",
                       0};
}

} // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress) {
    using Criterion = CheckResult (*)(VerifyLevel);
    const std::pair<const char*, Criterion> criteria[] = {
        {"gamma-sharpness", criterion_gamma_sharpness},
        {"prime-sharpness", criterion_prime_sharpness},
        {"murai-oracle", criterion_murai_oracle},
        {"lemma-aci", criterion_lemma_aci},
        {"hilbert-consistency", criterion_hilbert},
        {"theorem-corpus", criterion_corpus},
        {"remark-bounds", criterion_remark},
        {"property-suites", criterion_properties},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, c] : criteria) {
        auto t0 = Clock::now();
        CheckResult r;
        try {
            r = c(level);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.name = name;
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (progress)
            (*progress) << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds
                        << "s): " << r.detail << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace bettikit
