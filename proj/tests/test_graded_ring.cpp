#include "doctest.h"

#include "oracle.hpp"
#include "pbwkit/graded_ring.hpp"
#include "pbwkit/presentation.hpp"

#include <random>

using namespace pbwkit;

namespace {

PresentedRing ring(const std::vector<std::string>& names, std::vector<std::string> rels) {
    std::vector<Element> es;
    for (auto& r : rels) es.push_back(parse_element(r, names, Field::rational()));
    return PresentedRing(names.size(), Field::rational(), es);
}

// dim of the two-sided ideal in degree n, spanned by u r v over all words u, v.
std::size_t brute_ideal_dim(std::size_t g, const std::vector<Element>& rels, int n) {
    std::vector<pbwkit::SparseVec> rows;
    for (const auto& r : rels) {
        int d = r.degree();
        if (d > n) continue;
        for (int i = 0; i <= n - d; ++i) {
            int j = n - d - i;
            for (std::uint64_t u = 0; u < checked_pow(g, i); ++u)
                for (std::uint64_t v = 0; v < checked_pow(g, j); ++v) {
                    Element p = Element::word(word_at(u, i, g)) * r * Element::word(word_at(v, j, g));
                    rows.push_back(homogeneous_vector(p, n, g));
                }
        }
    }
    return oracle::dense_rank(oracle::to_dense(rows, checked_pow(g, n)));
}

} // namespace

TEST_CASE("normal forms") {
    auto a = ring({"x"}, {"x*x"});
    CHECK(a.normal_form(parse_element("x*x", {"x"}, Field::rational())).empty());
    auto b = ring({"x", "y"}, {"x*y - y*x"});
    auto xy = parse_element("x*y", {"x", "y"}, Field::rational());
    auto yx = parse_element("y*x", {"x", "y"}, Field::rational());
    CHECK(b.normal_form(xy) == b.normal_form(yx));
    CHECK(b.normal_form(xy).size() == 1);
    auto free = ring({"x", "y"}, {});
    auto e = parse_element("x*y - 2*y*x", {"x", "y"}, Field::rational());
    CHECK(free.normal_element(e) == e);
}

TEST_CASE("hilbert series") {
    auto a = ring({"x"}, {"x*x"});
    auto s = a.hilbert_scan(10);
    CHECK(s.finite);
    CHECK(s.top == 0);
    CHECK(s.h == std::vector<std::size_t>{1, 1, 0});

    auto b = ring({"x"}, {"x*x*x"});
    auto t = b.hilbert_scan(10);
    CHECK(t.top == 1);
    CHECK(t.h == std::vector<std::size_t>{1, 1, 1, 0});

    auto c = ring({"x", "y"}, {"x*y - y*x"});
    for (int n = 0; n <= 7; ++n) CHECK(c.hilbert(n) == std::size_t(n + 1));
    CHECK_FALSE(c.hilbert_scan(7).finite);
}

TEST_CASE("random ideals agree with the brute-force span") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t g = 1 + rng() % 2;
        std::vector<Element> rels;
        int nrel = 1 + int(rng() % 3);
        for (int k = 0; k < nrel; ++k) {
            int d = 2 + int(rng() % 2);
            Element r;
            for (int t = 0; t < 3; ++t)
                r.add_term(word_at(rng() % checked_pow(g, d), d, g), Scalar((long long)(rng() % 5) - 2));
            if (!r.is_zero()) rels.push_back(r);
        }
        PresentedRing a(g, Field::rational(), rels);
        for (int n = 0; n <= 5; ++n) {
            CHECK(a.ideal_dim(n) == brute_ideal_dim(g, rels, n));
            CHECK(a.ideal_dim(n) + a.hilbert(n) == checked_pow(g, n));
        }
        // normal forms are additive and kill the ideal
        for (int n = 2; n <= 4; ++n)
            for (const auto& b : a.ideal_basis(n)) CHECK(a.normal_form(b).empty());
    }
}
