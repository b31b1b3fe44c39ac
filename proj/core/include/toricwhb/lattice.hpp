#pragma once

// Exact integer and rational linear algebra. Everything here is a pure
// function over immutable values; no floating point is used anywhere.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toricwhb {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

}  // namespace toricwhb

namespace toricwhb::lattice {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `dim`).
    static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t dim);
    static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    IntMatrix transposed() const;

    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// U * M * V == S with S diagonal, d_1 | d_2 | ..., all d_i >= 0, and
/// U, V unimodular.
struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    /// Nonzero diagonal entries, in order.
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Some integer x with M x == v, or nullopt when v is outside the integer
/// column span of M. Throws InputError on dimension mismatch.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v);

/// The unique rational coefficients expressing `point` in terms of the
/// linearly independent `generators`, or nullopt when it is outside their span.
std::optional<RationalVector> solve_in_span(std::span<const IntVector> generators, const IntVector& point);

/// Coefficients lambda >= 0 with point == sum lambda_i g_i, or nullopt when the
/// point is outside the cone. Generators must be linearly independent.
std::optional<RationalVector> cone_coordinates(std::span<const IntVector> generators, const IntVector& point);

/// True iff the ray through generators[index] is a one-dimensional face of
/// the cone spanned by all generators.
bool is_extremal_generator(std::span<const IntVector> generators, std::size_t index);

/// Some x >= 0 with A x == b (A given by rows), or nullopt if infeasible.
/// Exact phase-one simplex with Bland's rule.
std::optional<RationalVector> find_nonnegative_solution(const std::vector<RationalVector>& a_rows,
                                                        const RationalVector& b);

bool is_primitive_vector(const IntVector& v);
Integer gcd_of(const IntVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& k, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

}  // namespace toricwhb::lattice
