#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fol/rational.hpp"

namespace fol {

/// Sparse vector over the integers: (column, coefficient) pairs sorted by
/// column.  Rows are kept primitive (content 1, leading coefficient > 0)
/// throughout the elimination, which keeps entries small without rationals.
struct SparseVec {
    std::vector<std::pair<int32_t, Int>> nz;

    bool empty() const { return nz.empty(); }
    int32_t lead() const { return nz.front().first; }
    void make_primitive();
    /// First entry with column >= split, or -1 when all entries are below.
    int32_t lead_from(int32_t split) const;
    bool zero_below(int32_t split) const; // no entries with column < split
};

SparseVec sparse_from_rat(const std::vector<std::pair<int32_t, Rat>>& entries);

/// r := a*r - b*p (then primitivized).
SparseVec row_combine(const SparseVec& r, const SparseVec& p, const Int& a, const Int& b);

/// Echelonized row collection.  Pivot columns are restricted to
/// [0, main_cols); the augmented columns only record combinations.
struct Echelon {
    int32_t main_cols = 0;
    std::vector<SparseVec> rows;            // pivot rows, sorted by leading column
    std::vector<SparseVec> relations;       // rows whose main part vanished (aug parts)
    std::map<int32_t, size_t> pivot_of_col; // leading column -> row index

    long rank() const { return static_cast<long>(rows.size()); }
    /// Reduces v against the pivot rows; the result has no entries in pivot
    /// columns.  Membership in the row space <=> main part reduces to zero.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const;
};

/// Gaussian elimination over Z with cross-multiplication row updates.
///
/// The parallel flag switches the inner per-pivot row updates to the OpenMP
/// kernel; both paths produce bit-identical output (each row update depends
/// only on the pivot row).  `reduced` back-substitutes to the canonical
/// reduced echelon form (unique for primitive rows with positive leading
/// coefficients).
Echelon echelonize(std::vector<SparseVec> rows, int32_t main_cols, bool parallel = false,
                   bool reduced = true);

/// Toggles the default for the whole process (used by the benchmark and the
/// slice computations; tests pin it explicitly).
void set_parallel_elimination(bool on);
bool parallel_elimination();

// ---- convenience wrappers -------------------------------------------------

/// Rank of the span of the given vectors.
long rank_of(const std::vector<SparseVec>& vectors, int32_t cols);

/// Kernel of the linear map whose columns are given: returns a canonical
/// basis of the relation space sum_j c_j col_j = 0 as dense-ish sparse
/// vectors in the column index space [0, #columns).
std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& columns, int32_t cols);

/// Row-space basis in canonical reduced echelon form.
std::vector<SparseVec> rowspace_basis(const std::vector<SparseVec>& vectors, int32_t cols);

/// Indices of `ext` rows that enlarge the span of `base` (greedy, in order),
/// i.e. a completion of a basis of span(base) to span(base + ext).
std::vector<size_t> completing_indices(const std::vector<SparseVec>& base,
                                       const std::vector<SparseVec>& ext, int32_t cols);

} // namespace fol
