#include <doctest.h>

#include "derham/linalg.hpp"
#include "support.hpp"

using namespace derham;

namespace {

QMat random_matrix(testsupport::Rng& rng, std::size_t r, std::size_t c)
{
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % 3 == 0)
                m.at(i, j) = testsupport::random_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("rref pivots and rank on a handmade matrix")
{
    QMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 1;
    CHECK(rank(m) == 2);
    QMat ker = kernel_basis(m);
    CHECK(ker.cols() == 1);
    CHECK(is_zero(mul(m, ker)));
}

TEST_CASE("rank agrees with the brute oracle on random matrices")
{
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        QMat m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 8);
        CHECK(rank(m) == testsupport::brute_rank(m));
    }
}

TEST_CASE("kernel basis spans the kernel")
{
    testsupport::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QMat m = random_matrix(rng, 2 + rng() % 6, 2 + rng() % 6);
        QMat ker = kernel_basis(m);
        CHECK(is_zero(mul(m, ker)));
        CHECK(rank(ker) == ker.cols());
        CHECK(ker.cols() + rank(m) == m.cols());
    }
}

TEST_CASE("solve finds solutions exactly when consistent")
{
    testsupport::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        QMat m = random_matrix(rng, 2 + rng() % 5, 2 + rng() % 5);
        std::vector<Rational> x0(m.cols());
        for (auto& v : x0)
            v = testsupport::random_rational(rng);
        std::vector<Rational> b = matvec(m, x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(matvec(m, *x) == b);
    }
    // inconsistent system
    QMat m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    CHECK(!solve(m, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("independent_cols prefers earlier columns")
{
    QMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;  // col 1 = 2 * col 0
    m.at(1, 2) = 1;
    auto ind = independent_cols(m);
    REQUIRE(ind.size() == 2);
    CHECK(ind[0] == 0);
    CHECK(ind[1] == 2);
}
