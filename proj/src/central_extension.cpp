#include "pbwkit/central_extension.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit {

std::uint64_t ZMonomials::offset(int n, int len) const {
    std::uint64_t o = 0;
    for (int l = len + 1; l <= n; ++l) o += checked_pow(g_, l);
    return o;
}

std::uint64_t ZMonomials::dim(int n) const { return offset(n, -1); }

Col ZMonomials::col(const Word& w, int n) const {
    if (int(w.size()) > n) throw Error(ErrorCode::DomainMismatch, "word longer than the degree");
    return Col(offset(n, int(w.size())) + word_index(w, g_));
}

Word ZMonomials::word(Col m, int n) const {
    std::uint64_t o = 0;
    for (int len = n; len >= 0; --len) {
        std::uint64_t size = checked_pow(g_, len);
        if (m < o + size) return word_at(m - o, len, g_);
        o += size;
    }
    throw Error(ErrorCode::DomainMismatch, "monomial index out of range");
}

Col ZMonomials::left(std::size_t letter, Col m, int n) const {
    Word w = word(m, n);
    if (letter == g_) return col(w, n + 1);
    return col(concat(Word{Letter(letter)}, w), n + 1);
}

Col ZMonomials::right(Col m, int n, std::size_t letter) const {
    Word w = word(m, n);
    if (letter == g_) return col(w, n + 1);
    w.push_back(Letter(letter));
    return col(w, n + 1);
}

SparseVec ZMonomials::vector(const HomogenizedElement& h) const {
    std::vector<Entry> t;
    for (const auto& [w, c] : h.body().terms()) t.push_back({col(w, h.degree()), c});
    return canonicalize(std::move(t));
}

HomogenizedElement ZMonomials::element(const SparseVec& v, int n) const {
    HomogenizedElement h(n);
    for (const auto& e : v) h.add_term(word(e.col, n), e.val);
    return h;
}

CentralExtension::CentralExtension(std::size_t g, const FilteredMap& alpha, const GradedSubspace& r)
    : g_(g), basis_(std::make_shared<ZMonomials>(g)) {
    std::map<int, std::vector<SparseVec>> gens;
    for (const auto& b : r.basis()) {
        HomogenizedElement h = alpha.apply_z(b);
        gens[h.degree()].push_back(basis_->vector(h));
        pz_.push_back(std::move(h));
    }
    q_ = std::make_unique<GradedQuotient>(basis_, std::move(gens));
}

CentralExtension CentralExtension::of(std::size_t g, const std::vector<Element>& p) {
    FilteredSubspace s = FilteredSubspace::span(g, p);
    return CentralExtension(g, extract_alpha(s), rp_of(s));
}

SparseMatrix CentralExtension::z_matrix(int n) {
    SparseMatrix m;
    m.ncols = q_->quotient_dim(n + 1);
    const std::size_t rows = q_->quotient_dim(n);
    for (std::size_t i = 0; i < rows; ++i) m.rows.push_back(q_->left_action(g_, i, n));
    return m;
}

std::size_t CentralExtension::annihilator_dim(int n) {
    SparseMatrix m = z_matrix(n);
    return m.nrows() - rank(m);
}

std::vector<HomogenizedElement> CentralExtension::annihilator_basis(int n) {
    std::vector<HomogenizedElement> out;
    for (const auto& combo : left_kernel(z_matrix(n)).rows)
        out.push_back(basis_->element(q_->lift(combo, n), n));
    return out;
}

ReesCheck rees_identity(CentralExtension& d, PresentedRing& a, int upto) {
    ReesCheck out;
    for (int n = 0; n <= upto; ++n) {
        out.d.push_back(d.dim(n));
        out.a.push_back(a.hilbert(n));
    }
    for (int n = 1; n <= upto; ++n)
        if (out.d[std::size_t(n)] != out.a[std::size_t(n)] + out.d[std::size_t(n) - 1]) {
            out.holds = false;
            out.first_failure = n;
            break;
        }
    return out;
}

} // namespace pbwkit
