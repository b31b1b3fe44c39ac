#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/lattice.hpp"

using namespace toricwhb;
using lattice::IntMatrix;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 6) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

oracle::IntRows rows_of(const IntMatrix& m) {
    oracle::IntRows out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
    return out;
}

}  // namespace

TEST(Lattice, SmithFormOfKnownMatrix) {
    const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto snf = lattice::smith_normal_form(m);
    EXPECT_EQ(snf.invariant_factors, (std::vector<Integer>{2, 6, 12}));
    EXPECT_EQ(snf.U * m * snf.V, snf.S);
}

TEST(Lattice, SmithFormMatchesDeterminantalDivisors) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        const auto m = random_matrix(rows, cols, rng, trial % 3 == 0 ? 1 : 6);
        const auto snf = lattice::smith_normal_form(m);
        EXPECT_TRUE(snf.S.is_diagonal());
        EXPECT_EQ(snf.U * m * snf.V, snf.S);
        EXPECT_EQ(abs(lattice::determinant(snf.U)), 1);
        EXPECT_EQ(abs(lattice::determinant(snf.V)), 1);
        const auto expected = oracle::invariant_factors(rows_of(m));
        EXPECT_EQ(snf.invariant_factors, expected) << lattice::to_string(m);
        EXPECT_EQ(snf.rank, expected.size());
        for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
            EXPECT_EQ(snf.invariant_factors[i] % snf.invariant_factors[i - 1], 0);
    }
}

TEST(Lattice, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto m = random_matrix(n, n, rng);
            EXPECT_EQ(lattice::determinant(m), oracle::det_cofactor(rows_of(m)));
        }
}

TEST(Lattice, DeterminantOfSingularMatrixIsZero) {
    EXPECT_EQ(lattice::determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(lattice::rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
}

TEST(Lattice, SolveIntegerAgreesWithMinorsOracle) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dist(-5, 5);
    int solved = 0, rejected = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = 2 + trial % 3, cols = 1 + trial % 3;
        const auto m = random_matrix(rows, cols, rng, 3);
        IntVector v(rows);
        for (auto& x : v) x = dist(rng);
        const auto x = lattice::solve_integer(m, v);
        EXPECT_EQ(x.has_value(), oracle::in_integer_span(rows_of(m), v)) << lattice::to_string(m);
        if (x) {
            EXPECT_EQ(m * *x, v);
            ++solved;
        } else {
            ++rejected;
        }
    }
    EXPECT_GT(solved, 0);
    EXPECT_GT(rejected, 0);
}

TEST(Lattice, SolveIntegerRejectsRationalOnlySolutions) {
    EXPECT_FALSE(lattice::solve_integer(IntMatrix{{2}}, make_int_vector({1})).has_value());
    EXPECT_THROW(lattice::solve_integer(IntMatrix{{2}}, make_int_vector({1, 2})), InputError);
}

TEST(Lattice, SolveInSpanAndConeCoordinates) {
    const std::vector<IntVector> gens{make_int_vector({1, 0, 0}), make_int_vector({1, 1, 0})};
    const auto c = lattice::solve_in_span(gens, make_int_vector({3, 1, 0}));
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], 2);
    EXPECT_EQ((*c)[1], 1);
    EXPECT_FALSE(lattice::solve_in_span(gens, make_int_vector({0, 0, 1})));
    EXPECT_FALSE(lattice::cone_coordinates(gens, make_int_vector({0, 1, 0})));
    const std::vector<IntVector> dependent{make_int_vector({1, 0}), make_int_vector({2, 0})};
    EXPECT_THROW(lattice::solve_in_span(dependent, make_int_vector({1, 0})), InputError);
}

TEST(Lattice, NonnegativeSolutions) {
    using lattice::find_nonnegative_solution;
    const std::vector<RationalVector> a{{1, 1, 0}, {0, 1, 1}};
    const auto x = find_nonnegative_solution(a, {2, 3});
    ASSERT_TRUE(x);
    for (const auto& xi : *x) EXPECT_GE(xi, 0);
    EXPECT_EQ((*x)[0] + (*x)[1], 2);
    EXPECT_EQ((*x)[1] + (*x)[2], 3);
    EXPECT_FALSE(find_nonnegative_solution({{1, 1}}, {-1}));
    EXPECT_TRUE(find_nonnegative_solution({}, {}));
}

TEST(Lattice, ExtremalGenerators) {
    // Square cone with an interior generator.
    const std::vector<IntVector> gens{make_int_vector({1, 0}), make_int_vector({0, 1}), make_int_vector({1, 1}),
                                      make_int_vector({2, 0})};
    EXPECT_TRUE(lattice::is_extremal_generator(gens, 0));
    EXPECT_TRUE(lattice::is_extremal_generator(gens, 1));
    EXPECT_FALSE(lattice::is_extremal_generator(gens, 2));
    EXPECT_TRUE(lattice::is_extremal_generator(gens, 3));
    EXPECT_THROW(lattice::is_extremal_generator(gens, 4), InputError);
    // A line is not pointed: neither generator spans a face.
    const std::vector<IntVector> line{make_int_vector({1, 0}), make_int_vector({-1, 0})};
    EXPECT_FALSE(lattice::is_extremal_generator(line, 0));
}

TEST(Lattice, ExtremalityAgreesWithFacetOracle) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dist(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        // Nonnegative vectors keep the cone pointed.
        std::vector<IntVector> gens;
        for (int i = 0; i < 5; ++i) {
            IntVector v(3);
            for (auto& x : v) x = dist(rng);
            if (!lattice::is_zero(v)) gens.push_back(v);
        }
        const auto expected = oracle::extremal_by_facets(gens);
        for (std::size_t i = 0; i < gens.size(); ++i)
            EXPECT_EQ(lattice::is_extremal_generator(gens, i), expected[i]) << "trial " << trial << " index " << i;
    }
}

TEST(Lattice, VectorHelpers) {
    EXPECT_TRUE(lattice::is_primitive_vector(make_int_vector({2, 3})));
    EXPECT_FALSE(lattice::is_primitive_vector(make_int_vector({2, 4})));
    EXPECT_FALSE(lattice::is_primitive_vector(make_int_vector({0, 0})));
    EXPECT_EQ(lattice::gcd_of(make_int_vector({-6, 9})), 3);
    EXPECT_EQ(lattice::dot(make_int_vector({1, 2}), make_int_vector({3, -1})), 1);
    EXPECT_EQ(to_string(make_int_vector({1, -2})), "(1,-2)");
}

TEST(Lattice, SmithFormOfDenseRandomMatrix) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-20, 20);
    lattice::IntMatrix m(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) m(i, j) = entry(rng);
    const auto s = lattice::smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.S);
    EXPECT_EQ(abs(lattice::determinant(s.U)), 1);
    EXPECT_EQ(abs(lattice::determinant(s.V)), 1);
    Integer product = 1;
    for (const auto& d : s.invariant_factors) product *= d;
    EXPECT_EQ(product, abs(lattice::determinant(m)));
}
