#include "doctest.h"

#include "oracle.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/linalg.hpp"

#include <random>

using namespace pbwkit;

namespace {

SparseVec vec(std::initializer_list<long long> xs) {
    SparseVec v;
    Col c = 0;
    for (long long x : xs) {
        if (x) v.push_back({c, Scalar(x)});
        ++c;
    }
    return v;
}

SparseMatrix mat(std::size_t ncols, std::initializer_list<std::initializer_list<long long>> rows) {
    SparseMatrix m;
    m.ncols = ncols;
    for (auto r : rows) m.rows.push_back(vec(r));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic stays exact across the machine-word boundary") {
    Scalar big = Scalar::ratio(1, 1);
    for (int i = 0; i < 80; ++i) big *= Scalar(3);
    Scalar back = big;
    for (int i = 0; i < 80; ++i) back /= Scalar(3);
    CHECK(back.is_one());
    CHECK((Scalar::ratio(1, 2) + Scalar::ratio(1, 3)) == Scalar::ratio(5, 6));
    CHECK((Scalar::ratio(-4, 6)).str() == "-2/3");
    CHECK((big - big).is_zero());
    CHECK(Scalar::ratio(7, -21) == Scalar::ratio(-1, 3));
}

TEST_CASE("prime field scalars") {
    Field f = Field::prime(7);
    Scalar a = f.make(3);
    CHECK((a * a.inverse()).is_one());
    CHECK((a + f.make(4)).is_zero());
    CHECK(f.convert(Scalar::ratio(1, 2)) == f.make(4));
    CHECK_THROWS_AS(Field::prime(8), Error);
}

TEST_CASE("rref examples") {
    auto r = rref(mat(2, {{2, 4}, {1, 2}}));
    REQUIRE(r.nrows() == 1);
    CHECK(r.rows[0][0].val.is_one());
    CHECK(coeff(r.rows[0], 1) == Scalar(2));

    auto id = rref(mat(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.nrows() == 3);
    for (Col i = 0; i < 3; ++i) CHECK(id.rows[i] == SparseVec{{i, Scalar(1)}});

    SparseMatrix p = mat(2, {{0, 1}, {1, 0}});
    p.order = {1, 0};
    auto pr = rref(p);
    REQUIRE(pr.nrows() == 2);
    CHECK(pr.rows[0][0].col == 1);
    CHECK(pr.rows[1][0].col == 0);
}

TEST_CASE("kernel examples") {
    auto k = kernel(mat(2, {{1, 1}}));
    REQUIRE(k.nrows() == 1);
    CHECK(coeff(k.rows[0], 0) == -coeff(k.rows[0], 1));
    CHECK(kernel(mat(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).nrows() == 0);
    SparseMatrix zero;
    zero.ncols = 3;
    zero.rows.resize(2);
    CHECK(kernel(zero).nrows() == 3);
}

TEST_CASE("subspace operations") {
    auto a = mat(2, {{1, 0}});
    auto b = mat(2, {{0, 1}});
    CHECK(subspace_intersection(a, b).nrows() == 0);
    CHECK(subspace_sum(a, b).nrows() == 2);
    CHECK(subspace_complement(a, a).nrows() == 0);

    auto diag = mat(2, {{1, 1}});
    auto plane = mat(2, {{1, 0}, {0, 1}});
    auto c = subspace_complement(diag, plane);
    REQUIRE(c.nrows() == 1);
    CHECK(c.rows[0] == vec({0, 1}));
    CHECK(subspace_sum(diag, c).nrows() == 2);
    CHECK_THROWS_AS(subspace_complement(plane, diag), Error);
}

TEST_CASE("random matrices: echelon invariants against a dense oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nr = 1 + rng() % 6, nc = 1 + rng() % 6;
        SparseMatrix m;
        m.ncols = nc;
        for (std::size_t i = 0; i < nr; ++i) {
            std::vector<Entry> t;
            for (Col j = 0; j < nc; ++j)
                if (rng() % 3 == 0) t.push_back({j, Scalar((long long)(rng() % 7) - 3)});
            m.rows.push_back(canonicalize(t));
        }
        if (trial % 2) {
            m.order.resize(nc);
            for (Col j = 0; j < nc; ++j) m.order[j] = Col(nc - 1 - j);
        }
        auto r = rref(m);
        CHECK(r.nrows() == oracle::dense_rank(oracle::to_dense(m.rows, nc)));
        // reduced form: each pivot column is a unit column
        for (std::size_t i = 0; i < r.nrows(); ++i)
            for (std::size_t k = 0; k < r.nrows(); ++k) {
                Col pivot = r.rows[k][0].col;
                if (!m.order.empty()) {
                    // first nonzero in the elimination order
                    for (Col o : m.order)
                        if (!coeff(r.rows[k], o).is_zero()) {
                            pivot = o;
                            break;
                        }
                }
                CHECK(coeff(r.rows[i], pivot) == Scalar(i == k ? 1 : 0));
            }
        auto k = kernel(m);
        CHECK(k.nrows() + r.nrows() == nc);
        for (const auto& v : k.rows)
            for (const auto& row : m.rows) {
                Scalar dot;
                for (const auto& e : row) dot += e.val * coeff(v, e.col);
                CHECK(dot.is_zero());
            }
        SparseMatrix other = m;
        std::shuffle(other.rows.begin(), other.rows.end(), rng);
        other.rows.resize(other.rows.size() / 2);
        auto inter = subspace_intersection(m, other);
        auto sum = subspace_sum(m, other);
        CHECK(inter.nrows() + sum.nrows() == rank(m) + rank(other));
        auto comp = subspace_complement(other, sum);
        CHECK(comp.nrows() + rank(other) == sum.nrows());
    }
}
