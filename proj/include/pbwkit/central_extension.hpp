#pragma once

#include "pbwkit/deformation.hpp"
#include "pbwkit/graded_ring.hpp"

#include <memory>
#include <vector>

namespace pbwkit {

// Monomials w z^e of T[z] with z central. Degree n is ordered by decreasing
// word length, then lexicographically; letter g acts as z.
class ZMonomials : public MonomialBasis {
public:
    explicit ZMonomials(std::size_t g) : g_(g) {}
    std::size_t letters() const override { return g_ + 1; }
    std::uint64_t dim(int n) const override;
    Col left(std::size_t letter, Col m, int n) const override;
    Col right(Col m, int n, std::size_t letter) const override;
    bool central(std::size_t letter) const override { return letter == g_; }

    Col col(const Word& w, int n) const;
    // Word part of the monomial at column m in degree n.
    Word word(Col m, int n) const;
    SparseVec vector(const HomogenizedElement& h) const;
    HomogenizedElement element(const SparseVec& v, int n) const;

private:
    std::size_t g_;
    std::uint64_t offset(int n, int len) const;
};

// D(P) = T[z] / ⟨P*⟩, presented by P_z = α_z(R).
class CentralExtension {
public:
    CentralExtension(std::size_t g, const FilteredMap& alpha, const GradedSubspace& r);
    // Uses R = R_P and α = extract_alpha(P).
    static CentralExtension of(std::size_t g, const std::vector<Element>& p);

    std::size_t generators() const { return g_; }
    const std::vector<HomogenizedElement>& relations() const { return pz_; }
    const ZMonomials& monomials() const { return *basis_; }
    GradedQuotient& quotient() { return *q_; }

    std::size_t dim(int n) { return q_->quotient_dim(n); }
    // Rows are z·b for the normal basis b of D^n, in coordinates of D^(n+1).
    SparseMatrix z_matrix(int n);
    std::size_t annihilator_dim(int n);
    std::vector<HomogenizedElement> annihilator_basis(int n);

private:
    std::size_t g_;
    std::shared_ptr<ZMonomials> basis_;
    std::vector<HomogenizedElement> pz_;
    std::unique_ptr<GradedQuotient> q_;
};

struct ReesCheck {
    bool holds = true;
    int first_failure = -1;        // smallest n with dim D^n != dim A^n + dim D^(n-1)
    std::vector<std::size_t> d;     // dim D^n
    std::vector<std::size_t> a;     // dim A^n
};

// dim D^n = dim A^n + dim D^(n-1) for 1 <= n <= upto, A = T/⟨R_P⟩.
ReesCheck rees_identity(CentralExtension& d, PresentedRing& a, int upto);

} // namespace pbwkit
