#include <doctest.h>

#include <random>

#include "pcond/linalg.hpp"

using namespace pcond;

TEST_CASE("solve over Q(zeta_5)") {
    CycloNum z = CycloNum::root_of_unity(5);
    Matrix<CycloNum> a{{CycloNum(1), z}, {z * z, CycloNum(3)}};
    std::vector<CycloNum> x{z + CycloNum(2), CycloNum(-1)};
    std::vector<CycloNum> b{a[0][0] * x[0] + a[0][1] * x[1], a[1][0] * x[0] + a[1][1] * x[1]};
    auto sol = linalg::solve(a, b);
    REQUIRE(sol);
    CHECK(*sol == x);
    Matrix<CycloNum> sing{{CycloNum(1), z}, {z, z * z}};
    CHECK_FALSE(linalg::solve(sing, b));
    CHECK(linalg::rank(sing) == 1);
}

TEST_CASE("integer kernel") {
    IntMatrix a{{1, 1, 1, 0}, {0, 2, 4, 6}};
    auto k = linalg::integer_kernel(a, 4);
    CHECK(k.size() == 2);
    for (const auto& v : k)
        for (const auto& row : a) {
            std::int64_t s = 0;
            for (int j = 0; j < 4; ++j) s += row[j] * v[j];
            CHECK(s == 0);
        }
    // the kernel is saturated: (1,-2,1,0) and (-1,3,0,-1)... span includes (1,-2,1,0)
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        int m = 1 + rng() % 4, n = 1 + rng() % 5;
        IntMatrix r(m, std::vector<std::int64_t>(n));
        for (auto& row : r)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        auto ker = linalg::integer_kernel(r, n);
        Matrix<Rational> q(m, std::vector<Rational>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) q[i][j] = r[i][j];
        CHECK(ker.size() + linalg::rank(q) == static_cast<std::size_t>(n));
        for (const auto& v : ker)
            for (const auto& row : r) {
                std::int64_t s = 0;
                for (int j = 0; j < n; ++j) s += row[j] * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("solve_full_column_rank") {
    IntMatrix a{{1, 0}, {0, 1}, {1, 1}};
    auto x = linalg::solve_full_column_rank(a, {Rational(2), Rational(3), Rational(5)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(linalg::solve_full_column_rank(a, {Rational(2), Rational(3), Rational(6)}));
    CHECK_THROWS_AS(linalg::solve_full_column_rank(IntMatrix{{1, 1}, {2, 2}}, {Rational(1), Rational(2)}),
                    std::invalid_argument);
}
