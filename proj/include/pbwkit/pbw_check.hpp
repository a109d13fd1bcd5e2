#pragma once

#include "pbwkit/central_extension.hpp"
#include "pbwkit/deformation.hpp"
#include "pbwkit/homology.hpp"
#include "pbwkit/presentation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbwkit {

enum class Verdict { PbwCertified, NotPbw, PbwUpToDegree };

const char* verdict_name(Verdict v);

struct PbwOptions {
    int upto = -1;               // Jacobi/table bound; -1 uses the presentation's max_degree
    ComplexityOptions complexity; // bound is replaced by tor_bound when the file sets it
};

struct PbwReport {
    Verdict verdict = Verdict::PbwUpToDegree;
    int upto = 0;                      // degree bound of the bounded checks

    std::vector<Element> free_deformation; // P over the free algebra after lifting
    bool lifted = false;
    bool lift_minimal = true;
    std::optional<Element> lift_obstruction;

    std::size_t relations_dim = 0;     // dim R_P
    std::size_t minimal_relations_dim = 0;
    bool degree_one_relations = false; // R_P^1 != 0

    Complexity complexity;
    JacobiLadder ladder;               // on P
    std::vector<JacobiStep> minimal_ladder; // on P' = α(R_min), k <= c
    std::optional<Element> generation_gap; // element of P outside <P'>

    std::optional<Element> witness;
    int witness_k = -1;
    std::string witness_source;        // "jacobi", "jacobi_minimal" or "generation"

    std::vector<std::size_t> hilbert;  // h_A(n), A = T/<R_P>
    std::vector<std::size_t> gr_dims;  // dim gr^n U(P), exact when certified
    std::vector<std::size_t> d_dims;   // dim D^n
    std::vector<std::size_t> ann_dims; // dim ann(z)^n
    ReesCheck rees;

    std::vector<std::string> notes;
    std::vector<std::pair<std::string, double>> timings;

    PbwReport() : ladder(1, {}, 0) {}
};

PbwReport pbw_check(const Presentation& p, const PbwOptions& opts = {});

} // namespace pbwkit
