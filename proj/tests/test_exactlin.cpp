#include <doctest.h>

#include "qres/error.hpp"
#include "qres/matrix.hpp"
#include "qres/rng.hpp"

using namespace qres;

TEST_CASE("rref over F_5 of a rank one matrix")
{
    Field f = Field::prime(5);
    auto [r, pivots] = Matrix::from_rows(f, {{2, 4}, {1, 2}}).rref();
    CHECK(r == Matrix::from_rows(f, {{1, 2}, {0, 0}}));
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of the all-ones row over F_2")
{
    Field f = Field::prime(2);
    Matrix k = Matrix::from_rows(f, {{1, 1}}).kernel_basis();
    CHECK(k == Matrix::column(f, {1, 1}));
}

TEST_CASE("solve an upper triangular system over F_3")
{
    Field f = Field::prime(3);
    auto x = Matrix::from_rows(f, {{1, 1}, {0, 1}}).solve(Matrix::column(f, {1, 1}));
    REQUIRE(x);
    CHECK(*x == Matrix::column(f, {0, 1}));
    CHECK_FALSE(Matrix::from_rows(f, {{1, 1}, {1, 1}}).solve(Matrix::column(f, {0, 1})));
}

TEST_CASE("quotient map of a coordinate line")
{
    Field f = Field::prime(2);
    auto [q, s] = quotient_map(f, 2, Matrix::column(f, {1, 0}));
    CHECK(q == Matrix::from_rows(f, {{0, 1}}));
    CHECK(s == Matrix::from_rows(f, {{0}, {1}}));
    CHECK_THROWS_AS(quotient_map(f, 2, Matrix::from_rows(f, {{1, 1}, {0, 0}})), Error);
}

TEST_CASE("rational arithmetic and parsing")
{
    Field q = Field::rationals();
    Scalar half = Scalar::parse(q, "1/2");
    CHECK((half + half).is_one());
    CHECK(half.to_string() == "1/2");
    Matrix m = Matrix::from_rows(q, {{2, 1}, {1, 1}});
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
    CHECK(Scalar::parse(Field::prime(5), "1/2") == Scalar(Field::prime(5), 3));
}

TEST_CASE("field parsing and validation")
{
    CHECK(Field::parse("5") == Field::prime(5));
    CHECK(Field::parse("Q").is_rational());
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::parse("x"), Error);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices")
{
    Rng rng(11);
    for (Field f : {Field::prime(2), Field::prime(3), Field::prime(2147483647), Field::rationals()}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = rng.below(7), c = rng.below(7);
            Matrix a = Matrix::random(f, r, c, rng);
            if (rng.coin() && r > 1)
                a.set_block(0, 0, a.block(1, 0, 1, c));
            Matrix k = a.kernel_basis();
            CHECK(a.rank() + k.cols() == c);
            CHECK((a * k).is_zero());
            CHECK(k.rank() == k.cols());
            Matrix im = a.image_basis();
            CHECK(im.cols() == a.rank());
            CHECK(column_space_contains(im, a));
            CHECK(column_space_contains(a, im));
            Matrix b = a * Matrix::random(f, c, 2, rng);
            auto x = a.solve(b);
            REQUIRE(x);
            CHECK(a * *x == b);
        }
    }
}

TEST_CASE("inverse, transpose and kron identities")
{
    Rng rng(5);
    Field f = Field::prime(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.below(5);
        Matrix a = Matrix::random(f, n, n, rng);
        Matrix b = Matrix::random(f, n, 2, rng);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        if (auto inv = a.inverse()) {
            CHECK((a * *inv).is_identity());
            CHECK((*inv * a).is_identity());
        } else {
            CHECK(a.rank() < n);
        }
        Matrix c = Matrix::random(f, 2, 3, rng);
        Matrix d = Matrix::random(f, 3, 2, rng);
        CHECK(Matrix::kron(a, c) * Matrix::kron(b, d) == Matrix::kron(a * b, c * d));
        CHECK(Matrix::unflatten(c.flatten(), 2, 3) == c);
    }
}

TEST_CASE("quotient maps and subspace coordinates")
{
    Rng rng(3);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.below(6);
        Matrix u = Matrix::random(f, n, rng.below(n + 1), rng).image_basis();
        auto [q, s] = quotient_map(f, n, u);
        CHECK(q.rows() == n - u.cols());
        CHECK((q * u).is_zero());
        CHECK((q * s).is_identity());
        SubspaceCoords coords(u);
        Matrix c = Matrix::random(f, u.cols(), 2, rng);
        CHECK(coords.coords(u * c) == c);
        Matrix v = Matrix::random(f, n, rng.below(n + 1), rng).image_basis();
        Matrix meet = subspace_intersection(u, v);
        CHECK(column_space_contains(u, meet));
        CHECK(column_space_contains(v, meet));
        CHECK(meet.cols() + subspace_sum(u, v).cols() == u.cols() + v.cols());
    }
}
