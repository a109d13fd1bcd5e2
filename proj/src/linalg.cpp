#include "pbwkit/linalg.hpp"

#include "pbwkit/error.hpp"

#include <algorithm>

namespace pbwkit {

Scalar coeff(const SparseVec& v, Col c) {
    auto it = std::lower_bound(v.begin(), v.end(), c, [](const Entry& e, Col x) { return e.col < x; });
    if (it != v.end() && it->col == c) return it->val;
    return Scalar();
}

SparseVec add_scaled(const SparseVec& x, const Scalar& a, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].col < x[i].col) {
            Scalar v = a * y[j].val;
            if (!v.is_zero()) out.push_back({y[j].col, std::move(v)});
            ++j;
        } else {
            Scalar v = x[i].val + a * y[j].val;
            if (!v.is_zero()) out.push_back({x[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void scale(SparseVec& v, const Scalar& a) {
    if (a.is_zero()) {
        v.clear();
        return;
    }
    for (auto& e : v) e.val *= a;
}

SparseVec canonicalize(std::vector<Entry> terms) {
    std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    SparseVec out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().col == t.col) {
            out.back().val += t.val;
        } else {
            if (!out.empty() && out.back().val.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().val.is_zero()) out.pop_back();
    return out;
}

Echelon::Echelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1), col_rows_(ncols) {}

std::vector<SparseVec> Echelon::sorted_rows() const {
    std::vector<SparseVec> out = rows_;
    std::sort(out.begin(), out.end(), [](const SparseVec& a, const SparseVec& b) { return a[0].col < b[0].col; });
    return out;
}

std::vector<Col> Echelon::pivots() const {
    std::vector<Col> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[0].col);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Col> Echelon::non_pivots() const {
    std::vector<Col> out;
    for (Col c = 0; c < ncols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    bool touches = false;
    for (const auto& e : v)
        if (pivot_row_[e.col] >= 0) {
            touches = true;
            break;
        }
    if (!touches) return v;
    std::vector<Entry> terms;
    for (const auto& e : v) {
        int r = pivot_row_[e.col];
        if (r < 0) {
            terms.push_back(e);
            continue;
        }
        const SparseVec& row = rows_[r];
        for (std::size_t k = 1; k < row.size(); ++k) terms.push_back({row[k].col, -e.val * row[k].val});
    }
    return canonicalize(std::move(terms));
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Col p = r[0].col;
    Scalar inv = r[0].val.inverse();
    if (!inv.is_one()) scale(r, inv);

    auto& holders = col_rows_[p];
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    for (std::uint32_t i : holders) {
        SparseVec& row = rows_[i];
        Scalar c = coeff(row, p);
        if (c.is_zero()) continue;
        SparseVec updated = add_scaled(row, -c, r);
        // register row i under the tail columns of r it did not have before
        std::size_t a = 0;
        for (std::size_t k = 1; k < r.size(); ++k) {
            while (a < row.size() && row[a].col < r[k].col) ++a;
            if (a == row.size() || row[a].col != r[k].col) col_rows_[r[k].col].push_back(i);
        }
        row = std::move(updated);
    }
    std::vector<std::uint32_t>().swap(holders);

    std::uint32_t idx = std::uint32_t(rows_.size());
    for (std::size_t k = 1; k < r.size(); ++k) col_rows_[r[k].col].push_back(idx);
    pivot_row_[p] = int(idx);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::pair<std::size_t, Scalar>> Echelon::coordinates(const SparseVec& v) const {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (const auto& e : v) {
        int r = pivot_row_[e.col];
        if (r >= 0) out.emplace_back(std::size_t(r), e.val);
    }
    return out;
}

namespace {

std::vector<Col> position_map(const SparseMatrix& m) {
    std::vector<Col> pos(m.ncols);
    if (m.order.empty()) {
        for (Col c = 0; c < m.ncols; ++c) pos[c] = c;
    } else {
        if (m.order.size() != m.ncols) throw Error(ErrorCode::DomainMismatch, "column order has wrong length");
        for (Col k = 0; k < m.ncols; ++k) pos[m.order[k]] = k;
    }
    return pos;
}

SparseVec relabel(const SparseVec& v, const std::vector<Col>& map) {
    std::vector<Entry> t;
    t.reserve(v.size());
    for (const auto& e : v) {
        if (e.col >= map.size()) throw Error(ErrorCode::DomainMismatch, "column index out of range");
        t.push_back({map[e.col], e.val});
    }
    return canonicalize(std::move(t));
}

// Echelon of the rows of m in elimination-position coordinates.
Echelon positional_echelon(const SparseMatrix& m, const std::vector<Col>& pos) {
    Echelon ech(m.ncols);
    for (const auto& r : m.rows) ech.insert(relabel(r, pos));
    return ech;
}

std::vector<Col> inverse_map(const std::vector<Col>& pos) {
    std::vector<Col> inv(pos.size());
    for (Col c = 0; c < pos.size(); ++c) inv[pos[c]] = c;
    return inv;
}

SparseMatrix from_echelon(const Echelon& ech, const SparseMatrix& like, const std::vector<Col>& pos) {
    SparseMatrix out;
    out.ncols = like.ncols;
    out.order = like.order;
    auto inv = inverse_map(pos);
    for (const auto& r : ech.sorted_rows()) out.rows.push_back(relabel(r, inv));
    return out;
}

void same_domain(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.ncols != b.ncols) throw Error(ErrorCode::DomainMismatch, "subspaces of different ambient dimension");
}

} // namespace

SparseMatrix rref(const SparseMatrix& m) {
    auto pos = position_map(m);
    return from_echelon(positional_echelon(m, pos), m, pos);
}

std::size_t rank(const SparseMatrix& m) { return positional_echelon(m, position_map(m)).rank(); }

SparseMatrix kernel(const SparseMatrix& m) {
    auto pos = position_map(m);
    auto inv = inverse_map(pos);
    Echelon ech = positional_echelon(m, pos);
    SparseMatrix out;
    out.ncols = m.ncols;
    out.order = m.order;
    // columns of each free position, gathered from the echelon rows
    std::vector<std::vector<std::pair<Col, Scalar>>> by_free(m.ncols);
    for (const auto& row : ech.rows())
        for (std::size_t k = 1; k < row.size(); ++k) by_free[row[k].col].push_back({row[0].col, row[k].val});
    for (Col f = 0; f < m.ncols; ++f) {
        if (ech.is_pivot(f)) continue;
        std::vector<Entry> t;
        t.push_back({f, Scalar(1)});
        for (auto& [p, v] : by_free[f]) t.push_back({p, -v});
        out.rows.push_back(relabel(canonicalize(std::move(t)), inv));
    }
    return rref(out);
}

SparseMatrix transpose(const SparseMatrix& m) {
    SparseMatrix t;
    t.ncols = m.nrows();
    std::vector<std::vector<Entry>> cols(m.ncols);
    for (Col i = 0; i < m.nrows(); ++i)
        for (const auto& e : m.rows[i]) cols[e.col].push_back({i, e.val});
    for (auto& c : cols) t.rows.push_back(SparseVec(std::move(c)));
    return t;
}

SparseMatrix left_kernel(const SparseMatrix& m) {
    SparseMatrix t = transpose(m);
    return kernel(t);
}

SparseMatrix subspace_sum(const SparseMatrix& a, const SparseMatrix& b) {
    same_domain(a, b);
    SparseMatrix s = a;
    s.rows.insert(s.rows.end(), b.rows.begin(), b.rows.end());
    return rref(s);
}

SparseMatrix subspace_intersection(const SparseMatrix& a, const SparseMatrix& b) {
    same_domain(a, b);
    auto pos = position_map(a);
    const Col n = Col(a.ncols);
    Echelon ech(2 * std::size_t(n));
    for (const auto& r : a.rows) {
        SparseVec p = relabel(r, pos);
        SparseVec both = p;
        for (const auto& e : p) both.push_back({e.col + n, e.val});
        ech.insert(both);
    }
    for (const auto& r : b.rows) ech.insert(relabel(r, pos));
    SparseMatrix out;
    out.ncols = a.ncols;
    out.order = a.order;
    auto inv = inverse_map(pos);
    for (const auto& row : ech.rows()) {
        if (row[0].col < n) continue;
        std::vector<Entry> t;
        for (const auto& e : row) t.push_back({inv[e.col - n], e.val});
        out.rows.push_back(canonicalize(std::move(t)));
    }
    return rref(out);
}

bool subspace_contains(const SparseMatrix& big, const SparseMatrix& small) {
    same_domain(big, small);
    auto pos = position_map(big);
    Echelon ech = positional_echelon(big, pos);
    for (const auto& r : small.rows)
        if (!ech.contains(relabel(r, pos))) return false;
    return true;
}

SparseMatrix subspace_complement(const SparseMatrix& a, const SparseMatrix& b) {
    same_domain(a, b);
    auto pos = position_map(b);
    Echelon eb = positional_echelon(b, pos);
    Echelon ea(a.ncols);
    for (const auto& r : a.rows) {
        SparseVec p = relabel(r, pos);
        if (!eb.contains(p)) throw Error(ErrorCode::ComplementNotSubspace, "first argument is not contained in the second");
        ea.insert(p);
    }
    Echelon c(a.ncols);
    for (const auto& r : eb.sorted_rows()) c.insert(ea.reduce(r));
    return from_echelon(c, b, pos);
}

} // namespace pbwkit
