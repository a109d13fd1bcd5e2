#pragma once
// Brute-force reference computations for the tests. Dense Gaussian elimination
// over mpq_class, written independently of the library's sparse echelon code.

#include "pbwkit/free_algebra.hpp"
#include "pbwkit/linalg.hpp"

#include <gmpxx.h>
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense to_dense(const std::vector<pbwkit::SparseVec>& rows, std::size_t ncols) {
    Dense d(rows.size(), std::vector<mpq_class>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& e : rows[i]) d[i][e.col] = e.val.to_mpq();
    return d;
}

// Row-reduces in place and returns the rank; rows beyond the rank are zero.
inline std::size_t dense_eliminate(Dense& m) {
    if (m.empty()) return 0;
    std::size_t nc = m[0].size(), r = 0;
    for (std::size_t c = 0; c < nc && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (std::size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return r;
}

inline std::size_t dense_rank(Dense m) { return dense_eliminate(m); }

inline bool dense_in_span(const Dense& span, const std::vector<mpq_class>& v) {
    Dense a = span;
    std::size_t r = dense_rank(a);
    a.push_back(v);
    return dense_rank(a) == r;
}

// T^{<=top} with longer words in earlier columns, words of one length in base-g order.
class Filtered {
public:
    Filtered(std::size_t g, int top) : g_(g), top_(top), off_(top + 2, 0) {
        std::size_t acc = 0, pw = 1;
        std::vector<std::size_t> len(top + 1);
        for (int d = 0; d <= top; ++d, pw *= g) len[d] = pw;
        for (int d = top; d >= 0; --d) {
            off_[d] = acc;
            acc += len[d];
        }
        ncols_ = acc;
    }
    std::size_t ncols() const { return ncols_; }
    int top() const { return top_; }
    // First column of degree d; columns from here on have degree <= d.
    std::size_t start(int d) const { return off_[d]; }
    std::size_t col(const pbwkit::Word& w) const {
        std::size_t i = 0;
        for (auto a : w) i = i * g_ + a;
        return off_[w.size()] + i;
    }
    std::vector<mpq_class> vec(const pbwkit::Element& e) const {
        std::vector<mpq_class> v(ncols_);
        for (const auto& [w, c] : e.terms()) v[col(w)] = c.to_mpq();
        return v;
    }
    // Number of rows of the reduced form whose pivot has degree <= d.
    std::size_t dim_upto(const Dense& reduced, int d) const {
        std::size_t n = 0;
        for (const auto& row : reduced) {
            std::size_t p = 0;
            while (row[p] == 0) ++p;
            if (p >= off_[d]) ++n;
        }
        return n;
    }
    std::vector<pbwkit::Element> elements_upto(const Dense& reduced, int d) const {
        std::vector<pbwkit::Element> out;
        for (const auto& row : reduced) {
            std::size_t p = 0;
            while (row[p] == 0) ++p;
            if (p < off_[d]) continue;
            pbwkit::Element e;
            for (int len = 0; len <= top_; ++len)
                for (std::size_t i = 0, n = len_count(len); i < n; ++i)
                    if (row[off_[len] + i] != 0)
                        e.add_term(pbwkit::word_at(i, len, g_), pbwkit::Scalar::from_mpq(row[off_[len] + i]));
            out.push_back(e);
        }
        return out;
    }

private:
    std::size_t len_count(int len) const {
        std::size_t n = 1;
        for (int i = 0; i < len; ++i) n *= g_;
        return n;
    }
    std::size_t g_;
    int top_;
    std::vector<std::size_t> off_;
    std::size_t ncols_ = 0;
};

inline std::vector<pbwkit::Word> all_words(std::size_t g, int len) {
    std::vector<pbwkit::Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<pbwkit::Word> next;
        for (const auto& w : out)
            for (std::size_t a = 0; a < g; ++a) {
                auto v = w;
                v.push_back(pbwkit::Letter(a));
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

// P_n = span{u b v : b in P with |u| + |v| + deg b <= n}, reduced, inside T^{<=top}.
inline Dense ladder_level(std::size_t g, const std::vector<pbwkit::Element>& P, int n, const Filtered& f) {
    int top = f.top();
    for (const auto& p : P) top = std::max(top, p.degree());
    Filtered whole(g, top);
    Dense span;
    for (const auto& p : P) span.push_back(whole.vec(p));
    dense_eliminate(span);
    Dense rows;
    for (const auto& b : whole.elements_upto(span, n)) {
        int d = b.degree();
        for (int i = 0; i + d <= n; ++i)
            for (int j = 0; i + j + d <= n; ++j)
                for (const auto& u : all_words(g, i))
                    for (const auto& v : all_words(g, j))
                        rows.push_back(f.vec(pbwkit::Element::word(u) * b * pbwkit::Element::word(v)));
    }
    dense_eliminate(rows);
    return rows;
}

// (J_k): P_{k+1} ∩ T^{<=k} ⊆ P_k, decided by dimensions.
inline bool jacobi_holds(std::size_t g, const std::vector<pbwkit::Element>& P, int k) {
    Filtered f(g, k + 1);
    Dense next = ladder_level(g, P, k + 1, f);
    Dense cur = ladder_level(g, P, k, f);
    return f.dim_upto(next, k) == cur.size();
}

// Graded pieces of k[x, z]/(gens); monomial x^a z^(n-a) sits at column a.
struct Commutative2 {
    using Poly = std::map<std::pair<int, int>, mpq_class>;
    std::vector<Poly> gens;

    std::size_t ideal_dim(int n) const { return dense_rank(ideal(n)); }
    std::size_t quotient_dim(int n) const { return std::size_t(n + 1) - ideal_dim(n); }
    // dim ker(z·: D^n -> D^{n+1}) for D = k[x, z]/(gens).
    std::size_t annihilator_dim(int n) const {
        Dense m = ideal(n + 1);
        std::size_t base = dense_rank(m);
        for (int a = 0; a <= n; ++a) {
            std::vector<mpq_class> v(std::size_t(n + 2));
            v[std::size_t(a)] = 1;
            m.push_back(v);
        }
        std::size_t image = dense_rank(m) - base;
        return std::size_t(n + 1) - image - ideal_dim(n);
    }

private:
    Dense ideal(int n) const {
        Dense rows;
        for (const auto& f : gens) {
            int d = f.begin()->first.first + f.begin()->first.second;
            if (d > n) continue;
            for (int i = 0; i <= n - d; ++i) {
                std::vector<mpq_class> v(std::size_t(n + 1));
                for (const auto& [m, c] : f) v[std::size_t(m.first + i)] += c;
                rows.push_back(v);
            }
        }
        if (rows.empty()) rows.push_back(std::vector<mpq_class>(std::size_t(n + 1)));
        return rows;
    }
};

} // namespace oracle
