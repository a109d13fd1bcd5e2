#include "pbwkit/deformation.hpp"

#include "pbwkit/error.hpp"

#include <algorithm>

namespace pbwkit {

FilteredSubspace::FilteredSubspace(std::size_t g, int top) : idx_(g, top), ech_(idx_.size()) {}

FilteredSubspace FilteredSubspace::span(std::size_t g, const std::vector<Element>& elements, int top) {
    if (top < 0) {
        top = 0;
        for (const auto& e : elements) top = std::max(top, e.degree());
    }
    FilteredSubspace s(g, top);
    for (const auto& e : elements) s.add(e);
    return s;
}

bool FilteredSubspace::add(const Element& e) { return ech_.insert(idx_.vector(e)); }

bool FilteredSubspace::contains(const Element& e) const {
    if (e.degree() > top()) return false;
    return ech_.contains(idx_.vector(e));
}

std::size_t FilteredSubspace::dim_upto(int n) const {
    Col start = idx_.start_of(n);
    std::size_t k = 0;
    for (const auto& r : ech_.rows())
        if (r[0].col >= start) ++k;
    return k;
}

std::vector<Element> FilteredSubspace::basis() const {
    std::vector<Element> out;
    for (const auto& r : ech_.sorted_rows()) out.push_back(idx_.element(r));
    return out;
}

std::vector<Element> FilteredSubspace::basis_upto(int n) const {
    std::vector<Element> out;
    Col start = idx_.start_of(n);
    for (const auto& r : ech_.sorted_rows())
        if (r[0].col >= start) out.push_back(idx_.element(r));
    return out;
}

int FilteredSubspace::degree() const {
    int d = -1;
    for (const auto& r : ech_.rows()) d = std::max(d, idx_.degree_of(r[0].col));
    return d;
}

FilteredMap::Part& FilteredMap::part(int n) {
    auto it = parts_.find(n);
    if (it == parts_.end()) {
        if (n < 1) throw Error(ErrorCode::DomainMismatch, "filtered maps are defined on positive degrees");
        FilteredIndex lower(g_, n - 1);
        std::size_t cols = checked_pow(g_, n) + lower.size();
        require_columns(cols, "filtered map in degree " + std::to_string(n));
        it = parts_.emplace(n, Part{lower, Echelon(cols)}).first;
    }
    return it->second;
}

const FilteredMap::Part* FilteredMap::find(int n) const {
    auto it = parts_.find(n);
    return it == parts_.end() ? nullptr : &it->second;
}

void FilteredMap::set(const Element& r, const Element& image) {
    if (r.is_zero()) return;
    if (!r.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "filtered maps are defined on homogeneous elements");
    const int n = r.degree();
    Element tail = image - r;
    if (tail.degree() >= n) throw Error(ErrorCode::DomainMismatch, "α(r) - r must have lower degree than r");
    Part& p = part(n);
    const Col shift = Col(checked_pow(g_, n));
    SparseVec v = homogeneous_vector(r, n, g_);
    for (const auto& e : p.lower.vector(tail)) v.push_back({e.col + shift, e.val});
    SparseVec red = p.aug.reduce(v);
    if (!red.empty() && red[0].col >= shift)
        throw Error(ErrorCode::DomainMismatch, "α is not well defined on the span of the given elements");
    p.aug.insert(v);
}

GradedSubspace FilteredMap::domain() const {
    GradedSubspace d(g_);
    for (const auto& [n, p] : parts_) {
        const Col shift = Col(checked_pow(g_, n));
        for (const auto& row : p.aug.rows()) {
            SparseVec head;
            for (const auto& e : row)
                if (e.col < shift) head.push_back(e);
            d.add_vector(n, head);
        }
    }
    return d;
}

Element FilteredMap::apply_homogeneous(const Element& r) const {
    if (r.is_zero()) return r;
    const int n = r.degree();
    const Part* p = find(n);
    if (!p) throw Error(ErrorCode::DomainMismatch, "element outside the domain of α");
    const Col shift = Col(checked_pow(g_, n));
    SparseVec red = p->aug.reduce(homogeneous_vector(r, n, g_));
    Element out = r;
    SparseVec tail;
    for (const auto& e : red) {
        if (e.col < shift) throw Error(ErrorCode::DomainMismatch, "element outside the domain of α");
        tail.push_back({e.col - shift, -e.val});
    }
    out += p->lower.element(tail);
    return out;
}

Element FilteredMap::apply(const Element& r) const {
    Element out;
    if (r.is_zero()) return out;
    for (int n = r.low_degree(); n <= r.degree(); ++n) out += apply_homogeneous(r.component(n));
    return out;
}

Element FilteredMap::component(int i, const Element& r) const {
    if (r.is_zero()) return r;
    if (!r.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "α_i takes a homogeneous element");
    return apply_homogeneous(r).component(r.degree() - i);
}

HomogenizedElement FilteredMap::apply_z(const Element& r) const {
    if (!r.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "α_z takes a homogeneous element");
    return homogenize(apply_homogeneous(r), r.degree());
}

FilteredMap FilteredMap::restrict(const GradedSubspace& sub) const {
    FilteredMap out(g_);
    for (const auto& b : sub.basis()) out.set(b, apply_homogeneous(b));
    return out;
}

GradedSubspace rp_of(const FilteredSubspace& p) {
    GradedSubspace r(p.generators());
    for (const auto& row : p.echelon().rows()) r.add(p.index().element(row).leading());
    return r;
}

FilteredMap extract_alpha(const FilteredSubspace& p) {
    FilteredMap alpha(p.generators());
    for (const auto& row : p.echelon().rows()) {
        Element v = p.index().element(row);
        if (v.degree() == 0) throw Error(ErrorCode::InvalidPresentation, "P meets the scalars");
        alpha.set(v.leading(), v);
    }
    return alpha;
}

FilteredSubspace apply_alpha(const FilteredMap& alpha, const GradedSubspace& r) {
    std::vector<Element> images;
    for (const auto& b : r.basis()) images.push_back(alpha.apply(b));
    return FilteredSubspace::span(alpha.generators(), images, std::max(0, r.max_degree()));
}

Echelon tilde_ideal(PresentedRing& ring, int n) {
    const std::size_t g = ring.generators();
    Echelon out(checked_pow(g, n));
    if (n < 1) return out;
    const Echelon& prev = ring.quotient().ideal(n - 1);
    const std::uint64_t gn = checked_pow(g, n - 1);
    std::vector<Entry> t;
    for (std::size_t a = 0; a < g; ++a)
        for (const auto& r : prev.rows()) {
            t.clear();
            for (const auto& e : r) t.push_back({Col(std::uint64_t(e.col) * g + a), e.val});
            out.insert(canonicalize(t));
            t.clear();
            for (const auto& e : r) t.push_back({Col(a * gn + e.col), e.val});
            out.insert(canonicalize(t));
        }
    return out;
}

namespace {

SparseMatrix as_matrix(const Echelon& e) {
    SparseMatrix m;
    m.ncols = e.ncols();
    m.rows = e.sorted_rows();
    return m;
}

} // namespace

GradedSubspace minimize_relations(const GradedSubspace& r) {
    const std::size_t g = r.generators();
    GradedSubspace out(g);
    if (r.is_zero()) return out;
    PresentedRing ring(g, Field::rational(), r);
    for (int n : r.degrees()) {
        SparseMatrix rn = as_matrix(*r.part(n));
        SparseMatrix inter = subspace_intersection(rn, as_matrix(tilde_ideal(ring, n)));
        for (const auto& v : subspace_complement(inter, rn).rows) out.add_vector(n, v);
    }
    return out;
}

bool is_bimodule_of_relations(const GradedSubspace& r) {
    if (r.is_zero()) return true;
    PresentedRing ring(r.generators(), Field::rational(), r);
    for (int n : r.degrees()) {
        SparseMatrix inter = subspace_intersection(as_matrix(*r.part(n)), as_matrix(tilde_ideal(ring, n)));
        if (inter.nrows()) return false;
    }
    return true;
}

JacobiLadder::JacobiLadder(std::size_t g, const std::vector<Element>& p, int upto) : upto_(upto), top_(g, 0) {
    if (upto < 0) throw Error(ErrorCode::DomainMismatch, "negative ladder bound");
    int top = upto + 1;
    for (const auto& e : p) top = std::max(top, e.degree());
    FilteredSubspace full = FilteredSubspace::span(g, p, top);
    const FilteredIndex& idx = full.index();

    auto seed = [&](FilteredSubspace& s, int n) {
        for (std::size_t i = 0; i < full.echelon().rank(); ++i)
            if (full.pivot_degree(i) <= n) s.add_vector(full.echelon().rows()[i]);
    };
    auto record = [&](const FilteredSubspace& s, int n) {
        std::vector<std::size_t> d;
        for (int m = 0; m <= n; ++m) d.push_back(s.dim_upto(m));
        dims_.push_back(std::move(d));
    };

    FilteredSubspace cur(g, top);
    seed(cur, 0);
    record(cur, 0);
    std::vector<Entry> t;
    for (int n = 0; n <= upto; ++n) {
        FilteredSubspace next(g, top);
        for (std::size_t a = 0; a < g; ++a)
            for (const auto& r : cur.echelon().rows()) {
                t.clear();
                for (const auto& e : r) t.push_back({idx.right(e.col, Letter(a)), e.val});
                next.add_vector(canonicalize(t));
            }
        for (std::size_t a = 0; a < g; ++a)
            for (const auto& r : cur.echelon().rows()) {
                t.clear();
                for (const auto& e : r) t.push_back({idx.left(Letter(a), e.col), e.val});
                next.add_vector(canonicalize(t));
            }
        seed(next, n + 1);

        JacobiStep step;
        step.k = n;
        const Col start = idx.start_of(n);
        for (const auto& row : next.echelon().sorted_rows()) {
            if (row[0].col < start) continue;
            SparseVec rem = cur.echelon().reduce(row);
            if (!rem.empty()) {
                step.holds = false;
                step.witness = idx.element(rem);
                break;
            }
        }
        steps_.push_back(std::move(step));
        record(next, n + 1);
        cur = std::move(next);
    }
    top_ = std::move(cur);
}

std::optional<int> JacobiLadder::first_failure(int from) const {
    for (const auto& s : steps_)
        if (s.k >= from && !s.holds) return s.k;
    return std::nullopt;
}

bool JacobiLadder::holds_through(int k) const {
    for (const auto& s : steps_)
        if (s.k <= k && !s.holds) return false;
    return true;
}

std::size_t JacobiLadder::reach_dim(int n) const { return top_.dim_upto(n); }

std::vector<std::size_t> gr_dimensions(const JacobiLadder& ladder, int upto) {
    if (upto > ladder.upto() + 1) throw Error(ErrorCode::DomainMismatch, "ladder too short for the requested degree");
    const std::size_t g = ladder.top_level().generators();
    std::vector<std::size_t> out;
    std::size_t prev_quot = 0, tn = 0;
    for (int n = 0; n <= upto; ++n) {
        tn += checked_pow(g, n);
        std::size_t quot = tn - ladder.reach_dim(n);
        out.push_back(quot - prev_quot);
        prev_quot = quot;
    }
    return out;
}

LiftResult lift_presentation(const Presentation& p) {
    LiftResult out;
    if (p.ambient_relations.empty()) {
        out.free_deformation = p.deformation;
        return out;
    }
    const std::size_t g = p.g();
    PresentedRing ambient(g, p.field, p.ambient_relations);
    for (const auto& e : p.deformation) {
        Element s = ambient.normal_element(e);
        if (!s.is_zero()) out.free_deformation.push_back(s);
    }
    FilteredSubspace lifted = FilteredSubspace::span(g, out.free_deformation);
    if (lifted.dim() && lifted.echelon().is_pivot(Col(lifted.index().size() - 1)))
        throw Error(ErrorCode::ValidationError, "the deformation meets the scalars modulo the ambient relations");
    for (const auto& k : p.ambient_relations) out.free_deformation.push_back(k);

    GradedSubspace k0 = GradedSubspace::span(g, p.ambient_relations);
    GradedSubspace r = rp_of(FilteredSubspace::span(g, out.free_deformation));
    PresentedRing ideal(g, p.field, r);
    for (int n : k0.degrees()) {
        SparseMatrix inter = subspace_intersection(as_matrix(*k0.part(n)), as_matrix(tilde_ideal(ideal, n)));
        if (inter.nrows()) {
            out.minimal = false;
            out.obstruction = from_homogeneous_vector(inter.rows[0], n, g);
            break;
        }
    }
    return out;
}

bool PureJacobiResult::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

namespace {

// x = sum_a e_a y_a (first = true) or x = sum_a y_a e_a; returns the y_a.
std::vector<Element> slices(const Element& x, std::size_t g, bool first) {
    std::vector<Element> out(g);
    for (const auto& [w, c] : x.terms()) {
        if (first) out[w.front()].add_term(Word(w.begin() + 1, w.end()), c);
        else out[w.back()].add_term(Word(w.begin(), w.end() - 1), c);
    }
    return out;
}

// (V⊗α_k - α_k⊗V)(x)
Element bracket_defect(const FilteredMap& alpha, const Element& x, std::size_t g, int k, int N) {
    Element out;
    if (k > N) return out;
    auto left = slices(x, g, true);
    auto right = slices(x, g, false);
    for (std::size_t a = 0; a < g; ++a) {
        out += Element::letter(Letter(a)) * alpha.component(k, left[a]);
        out -= alpha.component(k, right[a]) * Element::letter(Letter(a));
    }
    return out;
}

} // namespace

PureJacobiResult pure_jacobi_check(const GradedSubspace& r, const FilteredMap& alpha) {
    PureJacobiResult res;
    if (r.is_zero()) {
        res.holds = {true};
        return res;
    }
    if (!r.is_pure()) throw Error(ErrorCode::NotPure, "relations span several degrees");
    const std::size_t g = r.generators();
    const int N = r.min_degree();
    res.N = N;
    res.holds.assign(std::size_t(N) + 1, true);

    const std::uint64_t cols = checked_pow(g, N + 1);
    require_columns(cols, "T^" + std::to_string(N + 1));
    SparseMatrix rv, vr;
    rv.ncols = vr.ncols = cols;
    for (const auto& b : r.basis(N))
        for (std::size_t a = 0; a < g; ++a) {
            rv.rows.push_back(homogeneous_vector(b * Element::letter(Letter(a)), N + 1, g));
            vr.rows.push_back(homogeneous_vector(Element::letter(Letter(a)) * b, N + 1, g));
        }
    SparseMatrix X = subspace_intersection(rv, vr);
    res.x_dim = X.nrows();
    std::vector<Element> xs;
    for (const auto& v : X.rows) xs.push_back(from_homogeneous_vector(v, N + 1, g));

    // (J'_0): ρ(x) ∈ R. X0 = { x : ρ(x) ∈ R }.
    const Echelon& rn = *r.part(N);
    SparseMatrix residues;
    residues.ncols = checked_pow(g, N);
    for (const auto& x : xs) {
        Element rho = bracket_defect(alpha, x, g, 1, N);
        SparseVec red = rn.reduce(homogeneous_vector(rho, N, g));
        if (!red.empty() && res.holds[0]) {
            res.holds[0] = false;
            res.witness = x;
        }
        residues.rows.push_back(red);
    }
    std::vector<Element> x0;
    for (const auto& combo : left_kernel(residues).rows) {
        Element x;
        for (const auto& e : combo) x += e.val * xs[e.col];
        x0.push_back(x);
    }
    for (const auto& x : x0) {
        Element rho = bracket_defect(alpha, x, g, 1, N);
        for (int i = 1; i <= N; ++i) {
            Element lhs = alpha.component(i, rho) + bracket_defect(alpha, x, g, i + 1, N);
            if (!lhs.is_zero() && res.holds[std::size_t(i)]) {
                res.holds[std::size_t(i)] = false;
                if (!res.witness) res.witness = x;
            }
        }
    }
    return res;
}

} // namespace pbwkit
