#include "fol/linalg.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fol {

void SparseVec::make_primitive() {
    if (nz.empty()) return;
    Int g(0);
    for (const auto& [c, v] : nz) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    bool flip = nz.front().second < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& [c, v] : nz) v /= g;
}

int32_t SparseVec::lead_from(int32_t split) const {
    for (const auto& [c, v] : nz)
        if (c >= split) return c;
    return -1;
}

bool SparseVec::zero_below(int32_t split) const {
    return nz.empty() || nz.front().first >= split;
}

SparseVec sparse_from_rat(const std::vector<std::pair<int32_t, Rat>>& entries) {
    Int den(1);
    for (const auto& [c, q] : entries) den = lcm(den, q.get_den());
    SparseVec v;
    v.nz.reserve(entries.size());
    for (const auto& [c, q] : entries) {
        Int x = q.get_num() * (den / q.get_den());
        if (x != 0) v.nz.emplace_back(c, std::move(x));
    }
    std::sort(v.nz.begin(), v.nz.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.make_primitive();
    return v;
}

SparseVec row_combine(const SparseVec& r, const SparseVec& p, const Int& a, const Int& b) {
    SparseVec out;
    out.nz.reserve(r.nz.size() + p.nz.size());
    size_t i = 0, j = 0;
    while (i < r.nz.size() && j < p.nz.size()) {
        int32_t cr = r.nz[i].first, cp = p.nz[j].first;
        if (cr == cp) {
            Int v = a * r.nz[i].second - b * p.nz[j].second;
            if (v != 0) out.nz.emplace_back(cr, std::move(v));
            ++i, ++j;
        } else if (cr < cp) {
            out.nz.emplace_back(cr, a * r.nz[i].second);
            ++i;
        } else {
            out.nz.emplace_back(cp, -(b * p.nz[j].second));
            ++j;
        }
    }
    for (; i < r.nz.size(); ++i) out.nz.emplace_back(r.nz[i].first, a * r.nz[i].second);
    for (; j < p.nz.size(); ++j) out.nz.emplace_back(p.nz[j].first, -(b * p.nz[j].second));
    out.make_primitive();
    return out;
}

static std::atomic<bool> g_parallel{true};
void set_parallel_elimination(bool on) { g_parallel.store(on); }
bool parallel_elimination() { return g_parallel.load(); }

// Eliminates the pivot's leading column from row (no-op when absent).
static SparseVec eliminate(const SparseVec& row, const SparseVec& pivot) {
    int32_t pc = pivot.nz.front().first;
    auto it = std::lower_bound(row.nz.begin(), row.nz.end(), pc,
                               [](const auto& e, int32_t c) { return e.first < c; });
    if (it == row.nz.end() || it->first != pc) return row;
    const Int& pv = pivot.nz.front().second;
    const Int& rv = it->second;
    Int g = gcd(pv, rv);
    return row_combine(row, pivot, pv / g, rv / g);
}

Echelon echelonize(std::vector<SparseVec> rows, int32_t main_cols, bool parallel,
                   bool reduced) {
    Echelon E;
    E.main_cols = main_cols;
    std::vector<SparseVec> active;
    active.reserve(rows.size());
    for (auto& r : rows) {
        r.make_primitive();
        if (r.empty()) continue;
        active.push_back(std::move(r));
    }

    while (true) {
        // next pivot column: minimal leading main column among active rows
        int32_t best = -1;
        for (const auto& r : active) {
            if (r.empty() || r.nz.front().first >= main_cols) continue;
            if (best < 0 || r.nz.front().first < best) best = r.nz.front().first;
        }
        if (best < 0) break;

        // first row with that leading column becomes the pivot
        size_t pidx = active.size();
        for (size_t i = 0; i < active.size(); ++i) {
            if (!active[i].empty() && active[i].nz.front().first == best) {
                pidx = i;
                break;
            }
        }
        SparseVec pivot = std::move(active[pidx]);
        active.erase(active.begin() + static_cast<long>(pidx));

        // clear that column from every remaining row (data-parallel: each
        // update touches one row and reads the shared pivot)
        const long m = static_cast<long>(active.size());
        if (parallel && m >= 16) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
            for (long i = 0; i < m; ++i)
                active[static_cast<size_t>(i)] =
                    eliminate(active[static_cast<size_t>(i)], pivot);
        } else {
            for (long i = 0; i < m; ++i)
                active[static_cast<size_t>(i)] =
                    eliminate(active[static_cast<size_t>(i)], pivot);
        }

        E.pivot_of_col[best] = E.rows.size();
        E.rows.push_back(std::move(pivot));

        // collect finished rows (main part exhausted)
        std::vector<SparseVec> still;
        still.reserve(active.size());
        for (auto& r : active) {
            if (r.empty()) continue;
            if (r.nz.front().first >= main_cols) {
                E.relations.push_back(std::move(r));
            } else {
                still.push_back(std::move(r));
            }
        }
        active = std::move(still);
    }
    for (auto& r : active)
        if (!r.empty()) E.relations.push_back(std::move(r));

    if (reduced) {
        // back-substitution: canonical reduced echelon (rows are already
        // sorted by leading column because pivots were taken minimal-first)
        for (size_t i = E.rows.size(); i-- > 0;) {
            for (size_t j = i + 1; j < E.rows.size(); ++j)
                E.rows[i] = eliminate(E.rows[i], E.rows[j]);
        }
        E.pivot_of_col.clear();
        for (size_t i = 0; i < E.rows.size(); ++i)
            E.pivot_of_col[E.rows[i].nz.front().first] = i;
    }
    return E;
}

SparseVec Echelon::reduce(SparseVec v) const {
    v.make_primitive();
    // eliminate pivot-column entries smallest-first; combinations only add
    // entries at larger columns, so this terminates
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [c, val] : v.nz) {
            if (c >= main_cols) break;
            auto it = pivot_of_col.find(c);
            if (it == pivot_of_col.end()) continue;
            const auto& piv = rows[it->second];
            Int g = gcd(piv.nz.front().second, val);
            v = row_combine(v, piv, piv.nz.front().second / g, val / g);
            changed = true;
            break;
        }
    }
    return v;
}

bool Echelon::contains(const SparseVec& v) const {
    SparseVec r = reduce(v);
    return r.zero_below(main_cols);
}

long rank_of(const std::vector<SparseVec>& vectors, int32_t cols) {
    return echelonize(vectors, cols, parallel_elimination(), false).rank();
}

std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& columns, int32_t cols) {
    // feed each column as a row augmented with a unit tracking entry; rows
    // whose main part dies encode relations among the original columns
    std::vector<SparseVec> rows = columns;
    for (size_t j = 0; j < rows.size(); ++j)
        rows[j].nz.emplace_back(cols + static_cast<int32_t>(j), Int(1));
    Echelon E = echelonize(std::move(rows), cols, parallel_elimination(), false);
    // canonicalize the relation space
    std::vector<SparseVec> rel;
    rel.reserve(E.relations.size());
    for (auto& r : E.relations) {
        SparseVec s;
        for (auto& [c, v] : r.nz) s.nz.emplace_back(c - cols, std::move(v));
        rel.push_back(std::move(s));
    }
    Echelon R = echelonize(std::move(rel), static_cast<int32_t>(columns.size()),
                           parallel_elimination(), true);
    return std::move(R.rows);
}

std::vector<SparseVec> rowspace_basis(const std::vector<SparseVec>& vectors, int32_t cols) {
    Echelon E = echelonize(vectors, cols, parallel_elimination(), true);
    return std::move(E.rows);
}

std::vector<size_t> completing_indices(const std::vector<SparseVec>& base,
                                       const std::vector<SparseVec>& ext, int32_t cols) {
    Echelon E = echelonize(base, cols, parallel_elimination(), false);
    std::vector<size_t> out;
    for (size_t i = 0; i < ext.size(); ++i) {
        SparseVec r = E.reduce(ext[i]);
        if (r.zero_below(cols)) continue;
        out.push_back(i);
        // insert as a new pivot
        E.pivot_of_col[r.nz.front().first] = E.rows.size();
        E.rows.push_back(std::move(r));
    }
    return out;
}

} // namespace fol
