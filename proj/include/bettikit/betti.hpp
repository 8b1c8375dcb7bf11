#pragma once

#include "bettikit/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace bettikit {

// Graded Betti numbers of S/I over a window; absent cells in the window are
// zero. Queries outside the computed window throw.
struct BettiTable {
    RingPtr ring;
    std::map<std::pair<int, int>, long long> entries; // nonzero cells
    int i_max = 0, j_max = 0;

    long long at(int i, int j) const;
    // [beta_{i, i+offset}] for i = 0.. while i+offset <= j_max.
    std::vector<long long> strand(int offset) const;
    bool operator==(const BettiTable& o) const {
        return entries == o.entries && i_max == o.i_max && j_max == o.j_max;
    }
};

// beta_{i,j}(S/I): homology of the Koszul complex on the variables tensored
// with S/I, in homological index i and internal degree j.
long long betti_number(const Ideal& I, int i, int j);

// Window defaults: i_max = N, j_max = N + max generator degree.
BettiTable betti_table(const Ideal& I, int i_max = -1, int j_max = -1);

// [beta_{i,i+2}(I)] for i = 0..2h-2, via beta_{i,j}(I) = beta_{i+1,j}(S/I).
std::vector<long long> quadratic_strand(const Ideal& I);

// Koszul closed form for a complete intersection of the given degrees:
// beta_{i,j}(S/f) = #{size-i subsets of the degrees summing to j}.
long long ci_betti(const std::vector<int>& degrees, int i, int j);

struct LemmaAciCell {
    int i, j;
    long long lhs, rhs;
    bool correction; // the (h-1, h) cell carrying the -1
    bool skipped;    // outside the exact range: the Koszul term of F interferes
    bool ok;
};

struct LemmaAciReport {
    int h = 0, D = 0;
    bool ok = false;
    std::vector<LemmaAciCell> cells; // mismatching cells listed first
};

// Checks beta_{i,j}(S/I) = beta_{i+1,j+D}(S/a) off (h-1,h) and the -1
// correction there, for I = F : g and a = F + (g). Cells where
// Tor(S/F)_{j+D} itself is nonzero (possible when the smallest degree does
// not exceed h) carry no information from the long exact sequence and are
// reported as skipped rather than compared.
LemmaAciReport lemma_aci_check(const Ideal& F, const Polynomial& g);

// Same table over QQ and over GF(p); throws CharacteristicSensitive with a
// description of the first differing cell when they disagree.
BettiTable betti_table_char_checked(const Ideal& I, long long p, int i_max = -1, int j_max = -1);

} // namespace bettikit
