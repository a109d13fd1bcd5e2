#include "pbwkit/graded_ring.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit {

GradedSubspace GradedSubspace::span(std::size_t g, const std::vector<Element>& homogeneous) {
    GradedSubspace s(g);
    for (const auto& e : homogeneous) s.add(e);
    return s;
}

bool GradedSubspace::add(const Element& e) {
    if (e.is_zero()) return false;
    if (!e.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "graded subspaces take homogeneous elements");
    return add_vector(e.degree(), homogeneous_vector(e, e.degree(), g_));
}

bool GradedSubspace::add_vector(int n, const SparseVec& v) {
    if (v.empty()) return false;
    auto it = parts_.find(n);
    if (it == parts_.end()) {
        std::uint64_t cols = checked_pow(g_, n);
        require_columns(cols, "T^" + std::to_string(n));
        it = parts_.emplace(n, Echelon(cols)).first;
    }
    return it->second.insert(v);
}

std::size_t GradedSubspace::dim(int n) const {
    auto it = parts_.find(n);
    return it == parts_.end() ? 0 : it->second.rank();
}

std::size_t GradedSubspace::total_dim() const {
    std::size_t t = 0;
    for (const auto& [n, e] : parts_) t += e.rank();
    return t;
}

bool GradedSubspace::contains(const Element& e) const {
    if (e.is_zero()) return true;
    if (!e.is_homogeneous()) {
        for (int n = e.low_degree(); n <= e.degree(); ++n)
            if (!contains(e.component(n))) return false;
        return true;
    }
    auto it = parts_.find(e.degree());
    if (it == parts_.end()) return false;
    return it->second.contains(homogeneous_vector(e, e.degree(), g_));
}

std::vector<int> GradedSubspace::degrees() const {
    std::vector<int> out;
    for (const auto& [n, e] : parts_)
        if (e.rank()) out.push_back(n);
    return out;
}

int GradedSubspace::min_degree() const {
    auto d = degrees();
    return d.empty() ? -1 : d.front();
}

int GradedSubspace::max_degree() const {
    auto d = degrees();
    return d.empty() ? -1 : d.back();
}

std::vector<Element> GradedSubspace::basis(int n) const {
    std::vector<Element> out;
    auto it = parts_.find(n);
    if (it == parts_.end()) return out;
    for (const auto& r : it->second.sorted_rows()) out.push_back(from_homogeneous_vector(r, n, g_));
    return out;
}

std::vector<Element> GradedSubspace::basis() const {
    std::vector<Element> out;
    for (int n : degrees())
        for (auto& e : basis(n)) out.push_back(std::move(e));
    return out;
}

const Echelon* GradedSubspace::part(int n) const {
    auto it = parts_.find(n);
    return it == parts_.end() ? nullptr : &it->second;
}

GradedQuotient::GradedQuotient(std::shared_ptr<const MonomialBasis> basis, std::map<int, std::vector<SparseVec>> generators)
    : basis_(std::move(basis)), gens_(std::move(generators)) {}

void GradedQuotient::extend_to(int n) {
    while (int(ideals_.size()) <= n) {
        const int d = int(ideals_.size());
        const std::uint64_t cols = basis_->dim(d);
        require_columns(cols, "degree " + std::to_string(d) + " component");
        Echelon ech(cols);
        if (d > 0) {
            const Echelon& prev = ideals_[std::size_t(d) - 1];
            const std::size_t L = basis_->letters();
            std::vector<Entry> t;
            for (std::size_t a = 0; a < L; ++a) {
                for (const auto& r : prev.rows()) {
                    t.clear();
                    for (const auto& e : r) t.push_back({basis_->right(e.col, d - 1, a), e.val});
                    ech.insert(canonicalize(t));
                }
            }
            for (std::size_t a = 0; a < L; ++a) {
                if (basis_->central(a)) continue;
                for (const auto& r : prev.rows()) {
                    t.clear();
                    for (const auto& e : r) t.push_back({basis_->left(a, e.col, d - 1), e.val});
                    ech.insert(canonicalize(t));
                }
            }
        }
        auto g = gens_.find(d);
        if (g != gens_.end())
            for (const auto& v : g->second) ech.insert(v);
        std::vector<Col> normal;
        std::vector<int> pos(cols, -1);
        for (Col c = 0; c < cols; ++c)
            if (!ech.is_pivot(c)) {
                pos[c] = int(normal.size());
                normal.push_back(c);
            }
        ideals_.push_back(std::move(ech));
        normal_.push_back(std::move(normal));
        position_.push_back(std::move(pos));
    }
}

const Echelon& GradedQuotient::ideal(int n) {
    extend_to(n);
    return ideals_[std::size_t(n)];
}

std::size_t GradedQuotient::quotient_dim(int n) {
    extend_to(n);
    return normal_[std::size_t(n)].size();
}

const std::vector<Col>& GradedQuotient::normal_monomials(int n) {
    extend_to(n);
    return normal_[std::size_t(n)];
}

int GradedQuotient::normal_position(int n, Col m) {
    extend_to(n);
    return position_[std::size_t(n)][m];
}

SparseVec GradedQuotient::normal_form(const SparseVec& v, int n) {
    extend_to(n);
    SparseVec r = ideals_[std::size_t(n)].reduce(v);
    const auto& pos = position_[std::size_t(n)];
    for (auto& e : r) e.col = Col(pos[e.col]);
    return r;
}

SparseVec GradedQuotient::normal_form_monomial(Col m, int n) {
    extend_to(n);
    const Echelon& ech = ideals_[std::size_t(n)];
    const auto& pos = position_[std::size_t(n)];
    int r = ech.pivot_row(m);
    if (r < 0) return SparseVec{{Col(pos[m]), Scalar(1)}};
    const SparseVec& row = ech.rows()[std::size_t(r)];
    SparseVec out;
    out.reserve(row.size() - 1);
    for (std::size_t k = 1; k < row.size(); ++k) out.push_back({Col(pos[row[k].col]), -row[k].val});
    return out;
}

SparseVec GradedQuotient::lift(const SparseVec& coords, int n) {
    extend_to(n);
    const auto& normal = normal_[std::size_t(n)];
    SparseVec out;
    for (const auto& e : coords) out.push_back({normal[e.col], e.val});
    return out;
}

SparseVec GradedQuotient::left_action(std::size_t letter, std::size_t pos, int n) {
    Col m = normal_monomials(n)[pos];
    return normal_form_monomial(basis_->left(letter, m, n), n + 1);
}

SparseVec GradedQuotient::right_action(std::size_t pos, int n, std::size_t letter) {
    Col m = normal_monomials(n)[pos];
    return normal_form_monomial(basis_->right(m, n, letter), n + 1);
}

namespace {

std::map<int, std::vector<SparseVec>> generator_vectors(const GradedSubspace& s) {
    std::map<int, std::vector<SparseVec>> out;
    for (int n : s.degrees()) out[n] = s.part(n)->sorted_rows();
    return out;
}

} // namespace

PresentedRing::PresentedRing(std::size_t g, Field field, const GradedSubspace& relations)
    : g_(g), field_(field), relations_(relations) {
    if (relations.generators() != g && !relations.is_zero())
        throw Error(ErrorCode::DomainMismatch, "relations live in a free algebra on a different number of generators");
    if (relations_.min_degree() == 0) throw Error(ErrorCode::InvalidPresentation, "relations must have positive degree");
    q_ = std::make_unique<GradedQuotient>(std::make_shared<FreeMonomials>(g), generator_vectors(relations_));
}

PresentedRing::PresentedRing(std::size_t g, Field field, const std::vector<Element>& relations)
    : PresentedRing(g, field, GradedSubspace::span(g, relations)) {}

std::vector<std::size_t> PresentedRing::hilbert_upto(int n) {
    std::vector<std::size_t> h;
    for (int d = 0; d <= n; ++d) h.push_back(hilbert(d));
    return h;
}

HilbertSeries PresentedRing::hilbert_scan(int cap) {
    HilbertSeries s;
    for (int d = 0; d <= cap; ++d) {
        s.h.push_back(hilbert(d));
        if (s.h.back() == 0) {
            s.finite = true;
            s.top = d - 2;
            break;
        }
    }
    return s;
}

bool PresentedRing::ideal_contains(const Element& e) {
    if (e.is_zero()) return true;
    for (int n = e.low_degree(); n <= e.degree(); ++n) {
        Element c = e.component(n);
        if (c.is_zero()) continue;
        if (!q_->ideal(n).contains(homogeneous_vector(c, n, g_))) return false;
    }
    return true;
}

std::vector<Element> PresentedRing::ideal_basis(int n) {
    std::vector<Element> out;
    for (const auto& r : q_->ideal(n).sorted_rows()) out.push_back(from_homogeneous_vector(r, n, g_));
    return out;
}

SparseVec PresentedRing::normal_form(const Element& e) {
    if (e.is_zero()) return {};
    if (!e.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "normal_form takes a homogeneous element");
    return q_->normal_form(homogeneous_vector(e, e.degree(), g_), e.degree());
}

Element PresentedRing::normal_element(const Element& e) {
    Element out;
    if (e.is_zero()) return out;
    for (int n = e.low_degree(); n <= e.degree(); ++n) {
        Element c = e.component(n);
        if (c.is_zero()) continue;
        out += from_homogeneous_vector(q_->lift(normal_form(c), n), n, g_);
    }
    return out;
}

std::vector<Word> PresentedRing::normal_words(int n) {
    std::vector<Word> out;
    for (Col c : q_->normal_monomials(n)) out.push_back(word_at(c, n, g_));
    return out;
}

SparseVec PresentedRing::multiply(int a, std::size_t i, int b, std::size_t j) {
    Col u = q_->normal_monomials(a)[i];
    Col v = q_->normal_monomials(b)[j];
    return q_->normal_form_monomial(Col(std::uint64_t(u) * checked_pow(g_, b) + v), a + b);
}

LinearReduction eliminate_degree_one(std::size_t g, const GradedSubspace& r) {
    std::vector<Element> image(g);
    std::vector<bool> eliminated(g, false);
    if (const Echelon* one = r.part(1))
        for (const auto& row : one->rows()) {
            const std::size_t p = row[0].col;
            const Scalar inv = row[0].val.inverse();
            eliminated[p] = true;
            for (std::size_t i = 1; i < row.size(); ++i) image[p].add_term(Word{Letter(row[i].col)}, -(row[i].val * inv));
        }
    LinearReduction out;
    std::vector<Letter> renumber(g, 0);
    for (std::size_t a = 0; a < g; ++a)
        if (!eliminated[a]) {
            renumber[a] = Letter(out.kept.size());
            out.kept.push_back(a);
        }
    out.generators = out.kept.size();
    for (std::size_t a = 0; a < g; ++a) {
        if (!eliminated[a]) {
            image[a] = Element::letter(renumber[a]);
            continue;
        }
        Element e;
        for (const auto& [w, c] : image[a].terms()) e.add_term(Word{renumber[w[0]]}, c);
        image[a] = e;
    }
    out.relations = GradedSubspace(out.generators);
    for (int n : r.degrees()) {
        if (n < 2) continue;
        for (const auto& rel : r.basis(n)) {
            Element sub;
            for (const auto& [w, c] : rel.terms()) {
                Element t = Element::unit(c);
                for (Letter a : w) t = t * image[a];
                sub += t;
            }
            if (!sub.is_zero() && out.generators > 0) out.relations.add(sub);
        }
    }
    return out;
}

} // namespace pbwkit
