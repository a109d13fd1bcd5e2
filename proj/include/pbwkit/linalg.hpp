#pragma once

#include "pbwkit/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pbwkit {

using Col = std::uint32_t;

struct Entry {
    Col col;
    Scalar val;
    friend bool operator==(const Entry& a, const Entry& b) { return a.col == b.col && a.val == b.val; }
};

// Sparse vector with strictly increasing column indices and no zero entries.
using SparseVec = std::vector<Entry>;

Scalar coeff(const SparseVec& v, Col c);
// x + a*y
SparseVec add_scaled(const SparseVec& x, const Scalar& a, const SparseVec& y);
void scale(SparseVec& v, const Scalar& a);
// Sorts the entries, merges repeated columns and drops zeros.
SparseVec canonicalize(std::vector<Entry> terms);

// Incrementally maintained reduced row echelon form. Columns are compared by
// index, so the pivot of a row is its smallest column. Every row has pivot
// coefficient 1 and vanishes on the pivot columns of all other rows.
class Echelon {
public:
    explicit Echelon(std::size_t ncols = 0);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    // Rows in insertion order; row i has pivot rows()[i][0].col.
    const std::vector<SparseVec>& rows() const { return rows_; }
    std::vector<SparseVec> sorted_rows() const;
    int pivot_row(Col c) const { return pivot_row_[c]; }
    bool is_pivot(Col c) const { return pivot_row_[c] >= 0; }
    std::vector<Col> pivots() const;
    std::vector<Col> non_pivots() const;

    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool insert(const SparseVec& v);
    // Coefficients of v in terms of rows(); v must lie in the row space.
    std::vector<std::pair<std::size_t, Scalar>> coordinates(const SparseVec& v) const;

private:
    std::size_t ncols_;
    std::vector<SparseVec> rows_;
    std::vector<int> pivot_row_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
};

// Row-space matrix. `order` lists the columns by elimination priority; an
// empty order means increasing column index.
struct SparseMatrix {
    std::size_t ncols = 0;
    std::vector<SparseVec> rows;
    std::vector<Col> order;

    std::size_t nrows() const { return rows.size(); }
};

SparseMatrix rref(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
// Basis of { v : m v^T = 0 }.
SparseMatrix kernel(const SparseMatrix& m);
// Basis of { y : y m = 0 } (coefficient vectors over the rows of m).
SparseMatrix left_kernel(const SparseMatrix& m);
SparseMatrix transpose(const SparseMatrix& m);

// Row-space operations; the results are in reduced echelon form.
SparseMatrix subspace_sum(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix subspace_intersection(const SparseMatrix& a, const SparseMatrix& b);
bool subspace_contains(const SparseMatrix& big, const SparseMatrix& small);
// c with c + a = b and c ∩ a = 0, spanned by the reductions of b modulo a.
// Throws COMPLEMENT_NOT_SUBSPACE unless a ⊆ b.
SparseMatrix subspace_complement(const SparseMatrix& a, const SparseMatrix& b);

} // namespace pbwkit
