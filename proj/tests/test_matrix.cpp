#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srt/matrix.hpp"
#include "srt/rng.hpp"

using namespace srt;

namespace {

Mat random_rational_mat(std::size_t r, std::size_t c, Rng& rng) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rat(rng.range(-9, 9), rng.range(1, 7));
    return m;
}

} // namespace

TEST_CASE("splitmix64 reference sequence") {
    Rng rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat::identity(5)) == 5);
    CHECK(rank(Mat(3, 4)) == 0);
    Mat a{{1, 2}, {2, 4}};
    CHECK(rank(a) == 1);
    Mat b{{0, 1}, {1, 0}};
    CHECK(rank(b) == 2);
}

TEST_CASE("rank agrees with pivot count of row reduction") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng.next() % 6, c = 1 + rng.next() % 6;
        Mat m = random_rational_mat(r, c, rng);
        CHECK(rank(m) == rref(m).second.size());
    }
}

TEST_CASE("rank of a product is bounded by factor ranks") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = random_int_mat(4, 2, rng);
        Mat b = random_int_mat(2, 5, rng);
        CHECK(rank(a * b) <= 2);
    }
}

TEST_CASE("nullspace spans the kernel") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + rng.next() % 5, c = 1 + rng.next() % 5;
        Mat m = random_rational_mat(r, c, rng);
        Mat ker = nullspace(m);
        CHECK(ker.cols() == c - rank(m));
        CHECK((m * ker).is_zero());
        if (ker.cols() > 0) CHECK(rank(ker) == ker.cols());
    }
}

TEST_CASE("inverse of random unimodular-ish matrices") {
    Rng rng(11);
    int built = 0;
    while (built < 15) {
        Mat m = random_int_mat(4, 4, rng);
        if (rank(m) < 4) continue;
        ++built;
        CHECK(m * inverse(m) == Mat::identity(4));
        CHECK(inverse(m) * m == Mat::identity(4));
    }
}

TEST_CASE("solve finds solutions exactly when consistent") {
    Rng rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        Mat a = random_int_mat(4, 3, rng);
        Mat x = random_int_mat(3, 1, rng);
        Mat b = a * x;
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    Mat a{{1, 0}, {0, 0}};
    Mat b{{0}, {1}};
    CHECK(!solve(a, b).has_value());
}

TEST_CASE("column space basis") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Mat a = random_int_mat(5, 4, rng);
        Mat basis = column_space_basis(a);
        CHECK(basis.cols() == rank(a));
        CHECK(rank(basis) == basis.cols());
        CHECK(rank(hstack(basis, a)) == basis.cols());
    }
}

TEST_CASE("stack and block round trips") {
    Mat a{{1, 2}, {3, 4}};
    Mat b{{5, 6}, {7, 8}};
    Mat h = hstack(a, b);
    CHECK(h.block(0, 0, 2, 2) == a);
    CHECK(h.block(0, 2, 2, 2) == b);
    Mat v = vstack(a, b);
    CHECK(v.block(0, 0, 2, 2) == a);
    CHECK(v.block(2, 0, 2, 2) == b);
    CHECK(h.col(3) == Mat{{6}, {8}});
    CHECK(v.row(3) == Mat{{7, 8}});
}

TEST_CASE("matrix arithmetic sanity") {
    Mat a{{1, 2}, {3, 4}};
    CHECK(a + (-a) == Mat(2, 2));
    CHECK(a - a == Mat(2, 2));
    CHECK((a * Rat(2)) == a + a);
    CHECK(a.transpose().transpose() == a);
    Mat p{{0, 1}, {1, 0}};
    CHECK(p * a == Mat{{3, 4}, {1, 2}});
}
