#pragma once

#include "pbwkit/graded_ring.hpp"

#include <string>
#include <vector>

namespace pbwkit {

// Degree slices of the resolution A⊗R → A⊗A^1 → A → k with R = A.relations().
struct Tor3Table {
    int bound = 0;
    std::vector<std::size_t> tor3;     // dim Tor_{3,m}, m = 0..bound
    std::vector<std::size_t> kernel;   // dim K_2^m
    std::vector<std::size_t> source;   // dim (A⊗R)^m
};

// Requires R to be a bimodule of relations in degrees >= 2.
Tor3Table tor3_resolution(PresentedRing& a, int bound);

// Normalized bar complex: dim Tor_{n,m} for m = 0..bound, 1 <= n <= 4.
std::vector<std::size_t> tor_bar(PresentedRing& a, int n, int bound);

enum class ComplexityCertificate {
    None,              // scanned up to the bound only
    FreeAlgebra,       // R = 0
    FiniteDimensional, // c(A) <= c_A + 2 bounds the scan
    QuadraticPbw,      // quadratic R with a PBW basis of normal words, so A is Koszul
};

const char* certificate_name(ComplexityCertificate c);

struct ComplexityOptions {
    int bound = 8;                 // internal-degree bound when no certificate applies
    int hilbert_cap = 10;          // degrees scanned to detect finite dimension
    bool quadratic_certificate = true;
};

struct Complexity {
    int c = -1;
    bool certified = false;
    ComplexityCertificate certificate = ComplexityCertificate::None;
    int bound = 0;                 // largest internal degree computed
    HilbertSeries hilbert;
    Tor3Table table;
};

// c(A) = sup{m - 1 : Tor_{3,m} != 0}, -1 when there is none.
Complexity complexity(PresentedRing& a, const ComplexityOptions& opts = {});

// For quadratic R: the degree 3 normal words (w.r.t. the echelon pivots of R)
// number exactly dim A^3.
bool has_quadratic_pbw_basis(PresentedRing& a);

// True iff every nonzero Tor_{3,m} in the table sits at m = N + 1.
bool purity_classify(const std::vector<std::size_t>& tor3, int N);

} // namespace pbwkit
