#include "doctest.h"

#include "pbwkit/error.hpp"
#include "pbwkit/free_algebra.hpp"
#include "pbwkit/presentation.hpp"

#include <random>

using namespace pbwkit;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYC = {"x", "y", "c"};

Element el(const std::string& s, const std::vector<std::string>& names = XY) {
    return parse_element(s, names, Field::rational());
}

std::string str(const Element& e, const std::vector<std::string>& names = XY) { return element_to_string(e, names); }

} // namespace

TEST_CASE("multiplication") {
    CHECK(str(el("x") * el("y")) == "x*y");
    CHECK(el("(x+1)*(x-1)") == el("x*x - 1"));
    CHECK((Element() * el("x + y")).is_zero());
}

TEST_CASE("projection onto a degree") {
    CHECK(el("x*x + x + 1").component(2) == el("x*x"));
    CHECK(el("x*x + 3").component(0) == el("3"));
    CHECK(el("x*x").component(5).is_zero());
}

TEST_CASE("leading homogeneous part") {
    CHECK(el("x*y - y*x - 1").leading() == el("x*y - y*x"));
    CHECK(Element().leading().is_zero());
    CHECK(el("x*x + x").leading() == el("x*x"));
}

TEST_CASE("homogenization") {
    auto h = homogenize(el("x*x + 1"));
    CHECK(h.degree() == 2);
    CHECK(h.at_z_one() == el("x*x + 1"));
    CHECK(h.at_z_zero() == el("x*x"));
    auto r = homogenize(el("x*y - y*x"));
    CHECK(r.at_z_one() == r.at_z_zero());
    auto t = homogenize(el("x*y - y*x - x"));
    CHECK(t.at_z_zero() == el("x*y - y*x"));
    CHECK(t.body().coeff(Word{0}) == Scalar(-1));
    CHECK_THROWS_AS(homogenize(Element()), Error);
}

TEST_CASE("element text round trip") {
    for (std::string s : {"x*y - y*x - 1/2*x", "-3*x*x*y + 7", "1", "c - 2/3*x*c"}) {
        Element e = parse_element(s, XYC, Field::rational());
        CHECK(parse_element(str(e, XYC), XYC, Field::rational()) == e);
    }
    CHECK(str(el("x*y - y*x - 1/2*x")) == "x*y - y*x - 1/2*x");
    CHECK_THROWS_AS(el("x + "), ParseError);
    CHECK_THROWS_AS(el("x * q"), Error);
    CHECK_THROWS_AS(el("1/0"), ParseError);
}

TEST_CASE("word order: longer first, then lexicographic") {
    WordOrder less;
    CHECK(less(Word{0, 0}, Word{0}));
    CHECK(less(Word{0, 1}, Word{1, 0}));
    CHECK_FALSE(less(Word{1}, Word{0, 0}));
}

TEST_CASE("filtered index is a bijection compatible with multiplication") {
    FilteredIndex idx(3, 4);
    CHECK(idx.size() == 1 + 3 + 9 + 27 + 81);
    for (Col c = 0; c < idx.size(); ++c) {
        Word w = idx.word(c);
        CHECK(idx.col(w) == c);
        if (int(w.size()) < 4) {
            CHECK(idx.word(idx.left(2, c)) == concat(Word{2}, w));
            CHECK(idx.word(idx.right(c, 1)) == concat(w, Word{1}));
        }
    }
    CHECK(idx.start_of(2) == 81 + 27);
}

TEST_CASE("random elements: algebra laws") {
    std::mt19937 rng(7);
    auto rnd = [&]() {
        Element e;
        int terms = 1 + int(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Word w(rng() % 4);
            for (auto& a : w) a = Letter(rng() % 2);
            e.add_term(w, Scalar((long long)(rng() % 9) - 4));
        }
        return e;
    };
    for (int i = 0; i < 200; ++i) {
        Element a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            auto h = homogenize(a);
            CHECK(h.at_z_one() == a);
            CHECK(h.at_z_zero() == a.leading());
        }
    }
}
