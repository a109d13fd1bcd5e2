#pragma once

#include "pbwkit/free_algebra.hpp"
#include "pbwkit/linalg.hpp"

#include <map>
#include <memory>
#include <vector>

namespace pbwkit {

// Homogeneous subspace of T, one reduced echelon basis per degree.
class GradedSubspace {
public:
    explicit GradedSubspace(std::size_t g = 0) : g_(g) {}
    static GradedSubspace span(std::size_t g, const std::vector<Element>& homogeneous);

    std::size_t generators() const { return g_; }
    // Inserts a homogeneous element; returns true if the dimension grew.
    bool add(const Element& e);
    bool add_vector(int n, const SparseVec& v);
    std::size_t dim(int n) const;
    std::size_t total_dim() const;
    bool contains(const Element& e) const;
    // Degrees with a nonzero component, increasing.
    std::vector<int> degrees() const;
    bool is_zero() const { return degrees().empty(); }
    int min_degree() const;
    int max_degree() const;
    bool is_pure() const { return degrees().size() <= 1; }
    // Reduced echelon basis of the degree n part, ordered by pivot.
    std::vector<Element> basis(int n) const;
    std::vector<Element> basis() const;
    const Echelon* part(int n) const;

private:
    std::size_t g_;
    std::map<int, Echelon> parts_;
};

// Graded algebra with a monomial basis in each degree, generated in degree 1
// by `letters()` elements acting on monomials from either side.
class MonomialBasis {
public:
    virtual ~MonomialBasis() = default;
    virtual std::size_t letters() const = 0;
    virtual std::uint64_t dim(int n) const = 0;
    virtual Col left(std::size_t letter, Col m, int n) const = 0;
    virtual Col right(Col m, int n, std::size_t letter) const = 0;
    virtual bool central(std::size_t) const { return false; }
};

class FreeMonomials : public MonomialBasis {
public:
    explicit FreeMonomials(std::size_t g) : g_(g) {}
    std::size_t letters() const override { return g_; }
    std::uint64_t dim(int n) const override { return checked_pow(g_, n); }
    Col left(std::size_t a, Col m, int n) const override { return Col(a * checked_pow(g_, n) + m); }
    Col right(Col m, int, std::size_t a) const override { return Col(std::uint64_t(m) * g_ + a); }

private:
    std::size_t g_;
};

// Quotient of a monomial algebra F by the two-sided ideal generated by a
// homogeneous set G. Degree n of the ideal follows
// I^n = F^1 I^(n-1) + I^(n-1) F^1 + G^n and is computed on demand.
class GradedQuotient {
public:
    GradedQuotient(std::shared_ptr<const MonomialBasis> basis, std::map<int, std::vector<SparseVec>> generators);

    const MonomialBasis& basis() const { return *basis_; }
    const Echelon& ideal(int n);
    std::size_t ideal_dim(int n) { return ideal(n).rank(); }
    std::size_t quotient_dim(int n);
    // Monomials outside the pivots of I^n, increasing; they form a basis of F^n / I^n.
    const std::vector<Col>& normal_monomials(int n);
    // Position of a normal monomial in normal_monomials(n), or -1.
    int normal_position(int n, Col m);
    // Coordinates in the normal basis of the class of v in degree n.
    SparseVec normal_form(const SparseVec& v, int n);
    SparseVec normal_form_monomial(Col m, int n);
    // Lifts coordinates in the normal basis back to monomial columns.
    SparseVec lift(const SparseVec& coords, int n);
    // Coordinates of letter * b and b * letter for the normal basis vector at
    // position pos of degree n.
    SparseVec left_action(std::size_t letter, std::size_t pos, int n);
    SparseVec right_action(std::size_t pos, int n, std::size_t letter);
    int computed_degree() const { return int(ideals_.size()) - 1; }

private:
    std::shared_ptr<const MonomialBasis> basis_;
    std::map<int, std::vector<SparseVec>> gens_;
    std::vector<Echelon> ideals_;
    std::vector<std::vector<Col>> normal_;
    std::vector<std::vector<int>> position_;
    void extend_to(int n);
};

// T(V)/<R> ≅ T(V/R^1)/<R'> as graded algebras. The surviving letters are
// the non-pivot letters of R^1, renumbered in order.
struct LinearReduction {
    std::size_t generators = 0;
    std::vector<std::size_t> kept;      // old letter of each new letter
    GradedSubspace relations;           // R' in degrees >= 2
};

LinearReduction eliminate_degree_one(std::size_t g, const GradedSubspace& r);

struct HilbertSeries {
    std::vector<std::size_t> h; // h[n] for n = 0..scanned
    bool finite = false;        // some h[n] vanished
    int top = -1;               // c_A = max{n - 1 : h(n) != 0} when finite
};

// A = T / <G> for homogeneous G of degree >= 1.
class PresentedRing {
public:
    PresentedRing(std::size_t g, Field field, const GradedSubspace& relations);
    PresentedRing(std::size_t g, Field field, const std::vector<Element>& relations);

    std::size_t generators() const { return g_; }
    const Field& field() const { return field_; }
    const GradedSubspace& relations() const { return relations_; }
    GradedQuotient& quotient() { return *q_; }

    std::size_t ideal_dim(int n) { return q_->ideal_dim(n); }
    std::size_t hilbert(int n) { return q_->quotient_dim(n); }
    std::vector<std::size_t> hilbert_upto(int n);
    // Scans degrees up to `cap`, stopping at the first vanishing degree.
    HilbertSeries hilbert_scan(int cap);
    bool ideal_contains(const Element& homogeneous);
    std::vector<Element> ideal_basis(int n);
    // Coordinates of the class of a homogeneous element in the normal word basis.
    SparseVec normal_form(const Element& homogeneous);
    // Section of the projection: the class of e written on normal words.
    Element normal_element(const Element& e);
    std::vector<Word> normal_words(int n);
    // Coordinates of the product of normal words at positions i (degree a) and j (degree b).
    SparseVec multiply(int a, std::size_t i, int b, std::size_t j);

private:
    std::size_t g_;
    Field field_;
    GradedSubspace relations_;
    std::unique_ptr<GradedQuotient> q_;
};

} // namespace pbwkit
