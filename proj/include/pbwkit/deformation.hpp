#pragma once

#include "pbwkit/free_algebra.hpp"
#include "pbwkit/graded_ring.hpp"
#include "pbwkit/linalg.hpp"
#include "pbwkit/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbwkit {

// Subspace of T^{<=top}. The echelon basis is adapted to the filtration: the
// rows whose pivot has degree <= n span P ∩ T^{<=n}.
class FilteredSubspace {
public:
    FilteredSubspace(std::size_t g, int top);
    static FilteredSubspace span(std::size_t g, const std::vector<Element>& elements, int top = -1);

    std::size_t generators() const { return idx_.g(); }
    int top() const { return idx_.top(); }
    const FilteredIndex& index() const { return idx_; }
    const Echelon& echelon() const { return ech_; }

    bool add(const Element& e);
    bool add_vector(const SparseVec& v) { return ech_.insert(v); }
    bool contains(const Element& e) const;
    std::size_t dim() const { return ech_.rank(); }
    // dim P ∩ T^{<=n}
    std::size_t dim_upto(int n) const;
    int pivot_degree(std::size_t row) const { return idx_.degree_of(ech_.rows()[row][0].col); }
    std::vector<Element> basis() const;
    std::vector<Element> basis_upto(int n) const;
    // Highest degree reached by an element, -1 for the zero space.
    int degree() const;

private:
    FilteredIndex idx_;
    Echelon ech_;
};

// Filtered map α: R → T on a graded subspace R with α_0 the inclusion,
// stored as α(b) = b + tail(b) on the echelon basis of each R^n.
class FilteredMap {
public:
    explicit FilteredMap(std::size_t g = 0) : g_(g) {}
    // Defines α(r) = image for homogeneous r; image - r must have degree < deg r.
    void set(const Element& r, const Element& image);

    std::size_t generators() const { return g_; }
    GradedSubspace domain() const;
    Element apply(const Element& r) const;
    // α_i(r) = p^{n-i}(α(r)) for r homogeneous of degree n.
    Element component(int i, const Element& r) const;
    // α_z(r) = sum_i α_i(r) z^i
    HomogenizedElement apply_z(const Element& r) const;
    FilteredMap restrict(const GradedSubspace& sub) const;

private:
    struct Part {
        FilteredIndex lower; // T^{<=n-1}, columns offset by g^n
        Echelon aug;
    };
    std::size_t g_;
    std::map<int, Part> parts_;
    Part& part(int n);
    const Part* find(int n) const;
    Element apply_homogeneous(const Element& r) const;
};

GradedSubspace rp_of(const FilteredSubspace& p);
FilteredMap extract_alpha(const FilteredSubspace& p);
// P = α(R') for R' ⊆ domain(α).
FilteredSubspace apply_alpha(const FilteredMap& alpha, const GradedSubspace& r);

// Ĩ^n = T^1 I^(n-1) + I^(n-1) T^1 for I = <R>.
Echelon tilde_ideal(PresentedRing& ring, int n);
// Deterministic complement of R ∩ Ĩ inside R, degree by degree.
GradedSubspace minimize_relations(const GradedSubspace& r);
bool is_bimodule_of_relations(const GradedSubspace& r);

struct JacobiStep {
    int k = 0;
    bool holds = true;
    std::optional<Element> witness; // in P_{k+1} ∩ T^{<=k}, not in P_k
};

// P_0 = P ∩ T^0 and P_{n+1} = T^1 P_n + P_n T^1 + P^{<=n+1}, up to P_{upto+1},
// with the conditions (J_k): P_{k+1} ∩ T^{<=k} ⊆ P_k for k = 0..upto.
class JacobiLadder {
public:
    JacobiLadder(std::size_t g, const std::vector<Element>& p, int upto);

    int upto() const { return upto_; }
    const std::vector<JacobiStep>& steps() const { return steps_; }
    const JacobiStep& step(int k) const { return steps_.at(std::size_t(k)); }
    std::optional<int> first_failure(int from = 0) const;
    bool holds_through(int k) const;
    // dim P_n ∩ T^{<=m}; m >= n gives dim P_n.
    std::size_t level_dim(int n, int m) const { return dims_.at(std::size_t(n)).at(std::size_t(std::min(m, n))); }
    std::size_t level_dim(int n) const { return level_dim(n, n); }
    // P_{upto+1}, the last computed level.
    const FilteredSubspace& top_level() const { return top_; }
    // dim P_{upto+1} ∩ T^{<=n}.
    std::size_t reach_dim(int n) const;

private:
    int upto_;
    std::vector<std::vector<std::size_t>> dims_;
    FilteredSubspace top_;
    std::vector<JacobiStep> steps_;
};

// dim gr^n U(P) = dim U^{<=n} - dim U^{<=n-1} with ⟨P⟩ ∩ T^{<=n} replaced by
// P_m ∩ T^{<=n}, m = ladder top. The values are exact whenever P is of
// PBW-type; the caller decides whether that is known.
std::vector<std::size_t> gr_dimensions(const JacobiLadder& ladder, int upto);

struct LiftResult {
    std::vector<Element> free_deformation; // ς(P) together with the ambient relations
    bool minimal = true;                   // ambient relations meet Ĩ trivially
    std::optional<Element> obstruction;    // nonzero element of K_0 ∩ Ĩ otherwise
};

// Lifts P from T/⟨K_0⟩ to the free algebra through the normal-word section.
LiftResult lift_presentation(const Presentation& p);

struct PureJacobiResult {
    int N = 0;
    std::size_t x_dim = 0;    // dim (R⊗V) ∩ (V⊗R)
    std::vector<bool> holds;  // (J'_0) .. (J'_N)
    std::optional<Element> witness; // x ∈ (R⊗V) ∩ (V⊗R) violating the first failing condition
    bool all() const;
};

// Conditions (J'_i) for an N-pure R and α given by its components.
PureJacobiResult pure_jacobi_check(const GradedSubspace& r, const FilteredMap& alpha);

} // namespace pbwkit
