#include "halg/linalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace halg;

namespace {

LinMap dense(const std::vector<std::vector<Scalar>>& rows) {
    const Index r = static_cast<Index>(rows.size()), c = static_cast<Index>(rows[0].size());
    LinMap f(r, c);
    for (Index j = 0; j < c; ++j) {
        Vec col;
        for (Index i = 0; i < r; ++i) col.push_back(i, rows[i][j]);
        f.set_col(j, col);
    }
    return f;
}

oracle::Matrix to_oracle(const LinMap& f) {
    oracle::Matrix m(f.rows(), std::vector<oracle::Q2>(f.cols()));
    for (Index j = 0; j < f.cols(); ++j)
        for (const auto& [i, c] : f.col(j).entries()) m[i][j] = {c.re(), c.im()};
    return m;
}

LinMap random_map(std::mt19937& rng, Index rows, Index cols, int density) {
    std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
    LinMap f(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        Vec col;
        for (Index i = 0; i < rows; ++i)
            if (coin(rng) < density) col.push_back(i, Scalar(val(rng), val(rng)) / Scalar(1 + coin(rng) % 3));
        f.set_col(j, col);
    }
    return f;
}

}  // namespace

TEST_CASE("scalar parsing and printing round trip") {
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("1/2+3/4*i") == Scalar::frac(1, 2, 3, 4));
    CHECK(Scalar::parse("-2/6") == Scalar::frac(-1, 3));
    for (const auto& s : {Scalar::frac(3, 7, -1, 2), Scalar(0), Scalar::i(), Scalar::frac(-5, 1)})
        CHECK(Scalar::parse(s.str()) == s);
    CHECK_THROWS(Scalar::parse(""));
    CHECK_THROWS(Scalar::parse("1/0"));
}

TEST_CASE("kernel of the all-ones 2x2 matrix is spanned by (1,-1)") {
    Subspace k = kernel(dense({{1, 1}, {1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vec::from_dense({1, -1})));
}

TEST_CASE("solve returns the minimal-pivot particular solution") {
    auto x = solve(dense({{1, 1}, {0, 0}}), Vec::from_dense({2, 0}));
    REQUIRE(x);
    CHECK(*x == Vec::from_dense({2, 0}));
    CHECK_FALSE(solve(dense({{1, 1}, {1, 1}}), Vec::from_dense({1, 0})));
}

TEST_CASE("positive semidefinite check on a Hermitian 2x2") {
    CHECK(psd_check({{2, Scalar::i()}, {-Scalar::i(), 2}}));
    CHECK_FALSE(psd_check({{1, 2}, {2, 1}}));
    CHECK_THROWS_AS(psd_check({{1, Scalar::i()}, {Scalar::i(), 1}}), std::invalid_argument);
}

TEST_CASE("inverse of a Gaussian-rational matrix") {
    LinMap f = dense({{1, Scalar::i()}, {0, 2}});
    auto g = inverse(f);
    REQUIRE(g);
    CHECK(f.after(*g) == LinMap::identity(2));
    CHECK_FALSE(inverse(dense({{1, 2}, {2, 4}})));
}

TEST_CASE("quotient projection kills the subspace and fixes representatives") {
    Subspace s = Subspace::span(3, {Vec::from_dense({1, 1, 0})});
    Quotient q = quotient(3, s);
    CHECK(q.dim == 2);
    CHECK(q.proj.apply(Vec::from_dense({1, 1, 0})).empty());
    for (std::size_t k = 0; k < q.reps.size(); ++k) CHECK(q.proj.apply(Vec::unit(q.reps[k])) == Vec::unit(static_cast<Index>(k)));
}

TEST_CASE("property: rank agrees with the dense oracle and rank-nullity holds") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        Index r = 1 + trial % 7, c = 1 + (trial * 5) % 8;
        LinMap f = random_map(rng, r, c, 20 + trial % 60);
        CAPTURE(trial);
        CHECK(static_cast<std::size_t>(rank(f)) == oracle::rank(to_oracle(f)));
        CHECK(rank(f) + kernel(f).dim() == c);
        Subspace ker = kernel(f);
        for (const Vec& v : ker.basis()) CHECK(f.apply(v).empty());
        CHECK(image(f).dim() == rank(f));
    }
}

TEST_CASE("property: dim(U+V) + dim(U∩V) = dim U + dim V") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Index n = 2 + trial % 6;
        Subspace u = image(random_map(rng, n, 1 + trial % 4, 40));
        Subspace v = image(random_map(rng, n, 1 + (trial / 2) % 4, 40));
        CAPTURE(trial);
        CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
        CHECK(sum(u, v).contains(u));
        CHECK(u.contains(intersect(u, v)));
    }
}

TEST_CASE("property: determinant agrees with the oracle and with invertibility") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = 1 + trial % 5;
        LinMap f = random_map(rng, n, n, 55);
        DenseMatrix m(n, std::vector<Scalar>(n));
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < n; ++i) m[i][j] = f.at(i, j);
        Scalar d = determinant(m);
        oracle::Q2 od = oracle::det(to_oracle(f));
        CAPTURE(trial);
        CHECK(d.re() == od.re);
        CHECK(d.im() == od.im);
        CHECK(inverse(f).has_value() == !d.is_zero());
    }
}

TEST_CASE("antilinear maps conjugate scalars") {
    LinMap f = LinMap::identity(2).with_antilinear(true);
    CHECK(f.apply(Vec::unit(0, Scalar::i())) == Vec::unit(0, -Scalar::i()));
    LinMap g = dense({{0, 1}, {1, 0}});
    CHECK(g.after(f).antilinear());
    CHECK(g.after(f).apply(Vec::unit(0, Scalar::i())) == Vec::unit(1, -Scalar::i()));
}
