#include <liefol/linalg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace liefol;

namespace {

Matrix mat(const std::vector<std::vector<long long>>& rows)
{
    std::vector<Vec> vrows;
    for (const auto& r : rows) {
        Vec v;
        for (long long x : r) v.push_back(Rational(x));
        vrows.push_back(std::move(v));
    }
    return Matrix::from_rows(vrows);
}

Vec vec(const std::vector<long long>& xs)
{
    Vec v;
    for (long long x : xs) v.push_back(Rational(x));
    return v;
}

} // namespace

TEST_CASE("rref of a rank-1 matrix")
{
    auto [r, pivots] = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r == mat({{1, 2}, {0, 0}}));
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref fixes the identity")
{
    Matrix id = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto [r, pivots] = rref(id);
    CHECK(r == id);
    CHECK(pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref swaps to find the leftmost pivot")
{
    auto [r, pivots] = rref(mat({{0, 1}, {1, 0}}));
    CHECK(r == mat({{1, 0}, {0, 1}}));
    CHECK(pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref handles an empty matrix")
{
    auto [r, pivots] = rref(Matrix());
    CHECK(r.rows() == 0);
    CHECK(pivots.empty());
}

TEST_CASE("rref is idempotent on random matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(static_cast<long long>(rng() % 11) - 5,
                                      static_cast<long long>(rng() % 4) + 1);
        auto once = rref(m);
        auto twice = rref(once.m);
        CHECK(once.m == twice.m);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("solve_linear: identity system has the unique solution b")
{
    auto sol = solve_linear(mat({{1, 0}, {0, 1}}), vec({3, 4}));
    auto* u = std::get_if<UniqueSolution>(&sol);
    REQUIRE(u != nullptr);
    CHECK(u->x == vec({3, 4}));
}

TEST_CASE("solve_linear: underdetermined system yields particular + nullspace")
{
    auto sol = solve_linear(mat({{1, 1}}), vec({2}));
    auto* p = std::get_if<ParametricSolution>(&sol);
    REQUIRE(p != nullptr);
    CHECK(p->particular == vec({2, 0}));
    REQUIRE(p->nullspace.size() == 1);
    CHECK(p->nullspace[0] == vec({-1, 1}));
}

TEST_CASE("solve_linear: contradictory rows are inconsistent")
{
    auto sol = solve_linear(mat({{1}, {1}}), vec({0, 1}));
    CHECK(std::holds_alternative<Inconsistent>(sol));
}

TEST_CASE("solve_linear rejects mismatched dimensions")
{
    CHECK_THROWS_AS(solve_linear(mat({{1, 0}}), vec({1, 2})), std::invalid_argument);
}

TEST_CASE("unique solutions satisfy a x = b exactly")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 5;
        Matrix a(n, n);
        Vec b;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Rational(static_cast<long long>(rng() % 19) - 9,
                                      static_cast<long long>(rng() % 5) + 1);
            b.push_back(Rational(static_cast<long long>(rng() % 19) - 9));
        }
        auto sol = solve_linear(a, b);
        if (auto* u = std::get_if<UniqueSolution>(&sol)) {
            for (std::size_t i = 0; i < n; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < n; ++j) dot += a.at(i, j) * u->x[j];
                CHECK(dot == b[i]);
            }
        }
    }
}

TEST_CASE("parametric solutions: every nullspace vector maps to zero")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 3, cols = rows + 1 + rng() % 3;
        Matrix a(rows, cols);
        Vec b;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                a.at(i, j) = Rational(static_cast<long long>(rng() % 7) - 3);
            b.push_back(Rational(static_cast<long long>(rng() % 7) - 3));
        }
        auto sol = solve_linear(a, b);
        if (auto* p = std::get_if<ParametricSolution>(&sol)) {
            for (const auto& nv : p->nullspace)
                for (std::size_t i = 0; i < rows; ++i) {
                    Rational dot(0);
                    for (std::size_t j = 0; j < cols; ++j) dot += a.at(i, j) * nv[j];
                    CHECK(dot == Rational(0));
                }
        }
    }
}
