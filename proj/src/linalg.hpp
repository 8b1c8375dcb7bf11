#pragma once

// Exact rank kernels for the Koszul strand matrices. Assembly is by triplet
// lists; elimination densifies (GF(p), small QQ blocks) or runs row-sparse
// (larger QQ matrices).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace bettikit::linalg {

struct TripletsQ {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, mpq_class>> entries;
};

struct TripletsP {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, long long>> entries; // residues in [0, p)
};

inline long long rank_mod_p(const TripletsP& m, long long p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<long long>> a(static_cast<size_t>(m.rows),
                                          std::vector<long long>(static_cast<size_t>(m.cols), 0));
    for (const auto& [r, c, v] : m.entries) {
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            ((a[static_cast<size_t>(r)][static_cast<size_t>(c)] + v) % p + p) % p;
    }
    auto inv_mod = [p](long long x) {
        long long t = 0, nt = 1, r = p, nr = x;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return (t % p + p) % p;
    };
    long long rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(row)]);
        long long ip = inv_mod(a[static_cast<size_t>(row)][static_cast<size_t>(col)]);
        for (int r = row + 1; r < m.rows; ++r) {
            long long f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            long long scale = (f * ip) % p;
            for (int c = col; c < m.cols; ++c) {
                long long v = a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                              scale * a[static_cast<size_t>(row)][static_cast<size_t>(c)] % p;
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] = (v % p + p) % p;
            }
        }
        ++rank;
        ++row;
    }
    return rank;
}

// Fraction-free Bareiss on a dense integer matrix; exact, no rationals.
inline long long rank_bareiss(std::vector<std::vector<mpz_class>>& a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    mpz_class prev = 1;
    long long rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(row)]);
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class v = a[static_cast<size_t>(row)][static_cast<size_t>(col)] *
                                  a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                              a[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                                  a[static_cast<size_t>(row)][static_cast<size_t>(c)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(v);
            }
            a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        ++rank;
        ++row;
    }
    return rank;
}

// Row-sparse exact elimination over QQ; pivot rows chosen shortest-first to
// limit fill.
inline long long rank_sparse_q(int rows, int cols,
                               std::vector<std::vector<std::pair<int, mpq_class>>> rowdata) {
    (void)cols;
    long long rank = 0;
    std::vector<bool> done(static_cast<size_t>(rows), false);
    while (true) {
        int best = -1;
        size_t best_nnz = 0;
        for (int r = 0; r < rows; ++r) {
            if (done[static_cast<size_t>(r)] || rowdata[static_cast<size_t>(r)].empty()) continue;
            size_t nnz = rowdata[static_cast<size_t>(r)].size();
            if (best < 0 || nnz < best_nnz ||
                (nnz == best_nnz &&
                 rowdata[static_cast<size_t>(r)].front().first <
                     rowdata[static_cast<size_t>(best)].front().first)) {
                best = r;
                best_nnz = nnz;
            }
        }
        if (best < 0) break;
        done[static_cast<size_t>(best)] = true;
        ++rank;
        const auto pivot_row = rowdata[static_cast<size_t>(best)];
        const int pcol = pivot_row.front().first;
        const mpq_class& pval = pivot_row.front().second;
        for (int r = 0; r < rows; ++r) {
            if (done[static_cast<size_t>(r)]) continue;
            auto& row = rowdata[static_cast<size_t>(r)];
            auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != pcol) continue;
            mpq_class factor = it->second / pval;
            std::vector<std::pair<int, mpq_class>> merged;
            merged.reserve(row.size() + pivot_row.size());
            size_t i = 0, j = 0;
            while (i < row.size() && j < pivot_row.size()) {
                if (row[i].first < pivot_row[j].first) {
                    merged.push_back(std::move(row[i++]));
                } else if (row[i].first > pivot_row[j].first) {
                    merged.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
                    ++j;
                } else {
                    mpq_class v = row[i].second - factor * pivot_row[j].second;
                    if (v != 0) merged.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            while (i < row.size()) merged.push_back(std::move(row[i++]));
            for (; j < pivot_row.size(); ++j)
                merged.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
            row = std::move(merged);
        }
        rowdata[static_cast<size_t>(best)].clear();
    }
    return rank;
}

inline long long rank_exact_q(const TripletsQ& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::map<int, mpq_class>> rowacc(static_cast<size_t>(m.rows));
    for (const auto& [r, c, v] : m.entries) {
        auto& cell = rowacc[static_cast<size_t>(r)][c];
        cell += v;
        if (cell == 0) rowacc[static_cast<size_t>(r)].erase(c);
    }
    if (std::min(m.rows, m.cols) <= 200) {
        // Dense fraction-free route: clear denominators per row.
        std::vector<std::vector<mpz_class>> a(static_cast<size_t>(m.rows),
                                              std::vector<mpz_class>(static_cast<size_t>(m.cols), 0));
        for (int r = 0; r < m.rows; ++r) {
            mpz_class den = 1;
            for (const auto& [c, v] : rowacc[static_cast<size_t>(r)])
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
            for (const auto& [c, v] : rowacc[static_cast<size_t>(r)]) {
                mpq_class scaled = v * mpq_class(den);
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] = scaled.get_num();
            }
        }
        return rank_bareiss(a);
    }
    std::vector<std::vector<std::pair<int, mpq_class>>> rows(static_cast<size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r)
        rows[static_cast<size_t>(r)].assign(rowacc[static_cast<size_t>(r)].begin(),
                                            rowacc[static_cast<size_t>(r)].end());
    return rank_sparse_q(m.rows, m.cols, std::move(rows));
}

} // namespace bettikit::linalg
