#include "doctest.h"

#include "generators.hpp"
#include "pbwkit/deformation.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/homology.hpp"

#include <functional>

using namespace pbwkit;

namespace {

using Dims = std::vector<std::size_t>;

PresentedRing ring(const std::vector<std::string>& names, std::initializer_list<const char*> rels) {
    std::vector<Element> es;
    for (auto r : rels) es.push_back(parse_element(r, names, Field::rational()));
    return PresentedRing(names.size(), Field::rational(), es);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::ValidationError;
}

} // namespace

TEST_CASE("Tor_3 of small algebras") {
    auto free = ring({"x", "y"}, {});
    CHECK(tor3_resolution(free, 5).tor3 == Dims(6, 0));
    CHECK(complexity(free).c == -1);
    CHECK(complexity(free).certified);
    for (int n = 2; n <= 4; ++n) CHECK(tor_bar(free, n, 4) == Dims(5, 0));

    auto x2 = ring({"x"}, {"x*x"});
    CHECK(tor3_resolution(x2, 6).tor3 == Dims{0, 0, 0, 1, 0, 0, 0});

    auto x3 = ring({"x"}, {"x*x*x"});
    auto t = tor3_resolution(x3, 6).tor3;
    CHECK(t[4] == 1);
    CHECK(t == tor_bar(x3, 3, 6));
}

TEST_CASE("complexity of k<x>/(x^n)") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Element> rel{Element::word(Word(std::size_t(n), 0))};
        PresentedRing a(1, Field::rational(), rel);
        auto c = complexity(a);
        CHECK(c.c == n);
        CHECK(c.certified);
        CHECK(c.certificate == ComplexityCertificate::FiniteDimensional);
        CHECK(c.hilbert.top == n - 2);
        CHECK(c.c <= c.hilbert.top + 2);
    }
}

TEST_CASE("complexity of polynomial rings") {
    // k[x, y] has global dimension 2, so Tor_3 vanishes.
    auto two = ring({"x", "y"}, {"x*y - y*x"});
    auto c2 = complexity(two);
    CHECK(c2.c == -1);
    CHECK(c2.certified);
    auto two_bar = ring({"x", "y"}, {"x*y - y*x"});
    CHECK(tor_bar(two_bar, 3, 6) == Dims(7, 0));

    const std::vector<std::string> xyz{"x", "y", "z"};
    auto three = [&] { return ring(xyz, {"x*y - y*x", "x*z - z*x", "y*z - z*y"}); };
    ComplexityOptions scan;
    scan.quadratic_certificate = false;
    auto a = three();
    auto plain = complexity(a, scan);
    CHECK(plain.c == 2);
    CHECK_FALSE(plain.certified);

    auto b = three();
    auto cert = complexity(b);
    CHECK(cert.c == 2);
    CHECK(cert.certified);
    CHECK(cert.certificate == ComplexityCertificate::QuadraticPbw);
    CHECK(has_quadratic_pbw_basis(b));

    auto bar = three();
    CHECK(tor_bar(bar, 3, 6) == Dims{0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("purity") {
    auto x3 = ring({"x"}, {"x*x*x"});
    CHECK(purity_classify(tor3_resolution(x3, 6).tor3, 3));
    CHECK(purity_classify(Dims(7, 0), 2));

    auto a = ring({"x", "y"}, {"x*x", "x*y"});
    auto t = tor3_resolution(a, 6).tor3;
    auto b = ring({"x", "y"}, {"x*x", "x*y"});
    CHECK(t == tor_bar(b, 3, 6));
    bool pure = true;
    for (std::size_t m = 0; m < t.size(); ++m)
        if (t[m] && m != 3) pure = false;
    CHECK(purity_classify(t, 2) == pure);
}

TEST_CASE("resolution preconditions") {
    auto linear = ring({"x", "y"}, {"x", "y*y"});
    CHECK(code_of([&] { tor3_resolution(linear, 4); }) == ErrorCode::InvalidPresentation);
    auto redundant = ring({"x"}, {"x*x", "x*x*x"});
    CHECK(code_of([&] { tor3_resolution(redundant, 4); }) == ErrorCode::NotMinimalRelations);
}

TEST_CASE("bar complex in low homological degree") {
    gen::Rng rng(19);
    for (int t = 0; t < 20; ++t) {
        std::size_t g = std::size_t(gen::uniform(rng, 1, 2));
        auto rels = gen::relations(rng, g, gen::uniform(rng, 1, 3));
        auto R = minimize_relations(GradedSubspace::span(g, rels));
        PresentedRing a(g, Field::rational(), R);
        auto t1 = tor_bar(a, 1, 4);
        CHECK(t1[1] == g);
        auto t2 = tor_bar(a, 2, 4);
        for (int m = 0; m <= 4; ++m) CHECK(t2[std::size_t(m)] == R.dim(m));
    }
}

TEST_CASE("random algebras: resolution against the bar complex") {
    gen::Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        std::size_t g = std::size_t(gen::uniform(rng, 1, 2));
        auto rels = gen::relations(rng, g, gen::uniform(rng, 1, 3));
        auto R = minimize_relations(GradedSubspace::span(g, rels));
        PresentedRing a(g, Field::rational(), R);
        PresentedRing b(g, Field::rational(), R);
        CHECK(tor3_resolution(a, 5).tor3 == tor_bar(b, 3, 5));
    }
}

TEST_CASE("eliminating degree one relations") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    auto r = GradedSubspace::span(3, {parse_element("x - y", xyz, Field::rational()),
                                      parse_element("x*z - z*y", xyz, Field::rational()),
                                      parse_element("y*y*y", xyz, Field::rational())});
    auto red = eliminate_degree_one(3, r);
    CHECK(red.generators == 2);
    PresentedRing full(3, Field::rational(), r);
    PresentedRing reduced(red.generators, Field::rational(), red.relations);
    CHECK(full.hilbert_upto(5) == reduced.hilbert_upto(5));

    auto all = eliminate_degree_one(1, GradedSubspace::span(1, {Element::letter(0)}));
    CHECK(all.generators == 0);
    PresentedRing k(0, Field::rational(), all.relations);
    CHECK(k.hilbert_upto(3) == std::vector<std::size_t>{1, 0, 0, 0});
    auto c = complexity(k);
    CHECK(c.c == -1);
    CHECK(c.certified);

    gen::Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        std::size_t g = std::size_t(gen::uniform(rng, 1, 3));
        auto rels = gen::relations(rng, g, gen::uniform(rng, 0, 2));
        rels.push_back(gen::homogeneous(rng, g, 1, 2));
        auto R = GradedSubspace::span(g, rels);
        auto red2 = eliminate_degree_one(g, R);
        PresentedRing a(g, Field::rational(), R);
        PresentedRing b(red2.generators, Field::rational(), red2.relations);
        CHECK(a.hilbert_upto(4) == b.hilbert_upto(4));
    }
}
