#pragma once
// Hand-rolled random inputs shared by the property tests and the acceptance run.

#include "pbwkit/error.hpp"
#include "pbwkit/free_algebra.hpp"
#include "pbwkit/presentation.hpp"

#include <random>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline pbwkit::Scalar coefficient(Rng& rng) {
    static const int table[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-3, 2}, {3, 1}};
    const auto& c = table[uniform(rng, 0, 6)];
    return pbwkit::Scalar::ratio(c[0], c[1]);
}

inline pbwkit::Word word(Rng& rng, std::size_t g, int len) {
    pbwkit::Word w;
    for (int i = 0; i < len; ++i) w.push_back(pbwkit::Letter(uniform(rng, 0, int(g) - 1)));
    return w;
}

// Homogeneous element of degree d with up to `terms` terms, possibly zero.
inline pbwkit::Element homogeneous(Rng& rng, std::size_t g, int d, int terms) {
    pbwkit::Element e;
    for (int i = 0; i < terms; ++i) e.add_term(word(rng, g, d), coefficient(rng));
    return e;
}

// Leading part of degree d plus a random lower tail.
inline pbwkit::Element filtered(Rng& rng, std::size_t g, int d) {
    pbwkit::Element e = homogeneous(rng, g, d, uniform(rng, 1, 3));
    for (int k = 0; k < d; ++k)
        if (uniform(rng, 0, 2) == 0) e += homogeneous(rng, g, k, 1);
    return e;
}

// Commutators x_i x_j - x_j x_i deformed by random linear and constant tails:
// a mix of Lie-type data that passes or fails the Jacobi identity.
inline std::vector<pbwkit::Element> bracket(Rng& rng, std::size_t g) {
    std::vector<pbwkit::Element> out;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            auto e = pbwkit::Element::word({pbwkit::Letter(i), pbwkit::Letter(j)}) -
                     pbwkit::Element::word({pbwkit::Letter(j), pbwkit::Letter(i)});
            if (uniform(rng, 0, 1)) e += homogeneous(rng, g, 1, 1);
            if (uniform(rng, 0, 3) == 0) e += homogeneous(rng, g, 0, 1);
            out.push_back(e);
        }
    return out;
}

inline bool valid(std::size_t g, const std::vector<pbwkit::Element>& P) {
    pbwkit::Presentation p;
    for (std::size_t i = 0; i < g; ++i) p.generators.push_back(std::string(1, char('a' + i)));
    p.deformation = P;
    try {
        pbwkit::validate_presentation(p);
    } catch (const pbwkit::Error&) {
        return false;
    }
    return true;
}

// A valid deformation: at most 3 generators, at most 4 elements of degree <= 3.
inline std::vector<pbwkit::Element> deformation(Rng& rng, std::size_t& g) {
    for (;;) {
        g = std::size_t(uniform(rng, 1, 3));
        std::vector<pbwkit::Element> P;
        if (g >= 2 && uniform(rng, 0, 2) == 0) {
            P = bracket(rng, g);
            if (P.size() < 4 && uniform(rng, 0, 1)) P.push_back(filtered(rng, g, uniform(rng, 2, 3)));
        } else {
            int count = uniform(rng, 1, 4);
            for (int i = 0; i < count; ++i) P.push_back(filtered(rng, g, uniform(rng, 1, 3)));
        }
        std::erase_if(P, [](const pbwkit::Element& e) { return e.is_zero(); });
        if (!P.empty() && valid(g, P)) return P;
    }
}

// Homogeneous relations of degree 2..3 in at most `gmax` generators.
inline std::vector<pbwkit::Element> relations(Rng& rng, std::size_t g, int count) {
    std::vector<pbwkit::Element> out;
    for (int i = 0; i < count; ++i) {
        auto e = homogeneous(rng, g, uniform(rng, 2, 3), uniform(rng, 1, 3));
        if (!e.is_zero()) out.push_back(e);
    }
    return out;
}

} // namespace gen
