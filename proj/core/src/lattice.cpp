#include "toricwhb/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toricwhb/errors.hpp"

namespace toricwhb {

IntVector make_int_vector(std::initializer_list<long> values) {
    IntVector out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

}  // namespace toricwhb

namespace toricwhb::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t dim) {
    IntMatrix m(dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != dim) throw InputError("IntMatrix::from_columns: length mismatch");
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("IntMatrix::from_rows: length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("IntMatrix product: dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw InputError("IntMatrix * vector: dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << toricwhb::to_string(m.row(r));
    }
    os << ']';
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] += k * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += k * m(source, c);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += k * m(r, source);
}

struct Bezout {
    Integer g, x, y;
};

// g = gcd(a, b) = x*a + y*b with g > 0.
Bezout bezout(const Integer& a, const Integer& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// (row s, row t) <- (x*s + y*t, z*s + w*t); determinant x*w - y*z = 1.
void combine_rows(IntMatrix& m, std::size_t s, std::size_t t, const Integer& x, const Integer& y, const Integer& z,
                  const Integer& w) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Integer a = m(s, c), b = m(t, c);
        m(s, c) = x * a + y * b;
        m(t, c) = z * a + w * b;
    }
}

void combine_cols(IntMatrix& m, std::size_t s, std::size_t t, const Integer& x, const Integer& y, const Integer& z,
                  const Integer& w) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Integer a = m(r, s), b = m(r, t);
        m(r, s) = x * a + y * b;
        m(r, t) = z * a + w * b;
    }
}

// Rational row echelon form; returns the pivot columns.
std::vector<std::size_t> echelon(std::vector<RationalVector>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t limit = std::min(m.rows(), m.cols());

    std::size_t t = 0;
    for (; t < limit; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                Integer mag = abs(a(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(a, t, pi);
        swap_rows(u, t, pi);
        swap_cols(a, t, pj);
        swap_cols(v, t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                if (a(i, t) % a(t, t) == 0) {
                    const Integer q = a(i, t) / a(t, t);
                    add_row_multiple(a, i, t, -q);
                    add_row_multiple(u, i, t, -q);
                    continue;
                }
                const auto [g, x, y] = bezout(a(t, t), a(i, t));
                const Integer p = a(t, t) / g, q = a(i, t) / g;
                combine_rows(a, t, i, x, y, -q, p);
                combine_rows(u, t, i, x, y, -q, p);
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                if (a(t, j) % a(t, t) == 0) {
                    const Integer q = a(t, j) / a(t, t);
                    add_col_multiple(a, j, t, -q);
                    add_col_multiple(v, j, t, -q);
                    continue;
                }
                const auto [g, x, y] = bezout(a(t, t), a(t, j));
                const Integer p = a(t, t) / g, q = a(t, j) / g;
                combine_cols(a, t, j, x, y, -q, p);
                combine_cols(v, t, j, x, y, -q, p);
            }
            for (std::size_t i = t + 1; i < a.rows() && settled; ++i)
                if (a(i, t) != 0) settled = false;
            if (!settled) continue;
            // Enforce the divisibility chain on the trailing block.
            for (std::size_t i = t + 1; i < a.rows() && settled; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        add_row_multiple(a, t, i, Integer(1));
                        add_row_multiple(u, t, i, Integer(1));
                        settled = false;
                        break;
                    }
                }
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < a.cols(); ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
        }
    }

    SmithForm out;
    for (std::size_t i = 0; i < limit; ++i)
        if (a(i, i) != 0) out.invariant_factors.push_back(a(i, i));
    out.rank = out.invariant_factors.size();
    out.S = std::move(a);
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            swap_rows(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return echelon(rows, m.cols()).size();
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v) {
    if (v.size() != m.rows()) throw InputError("solve_integer: dimension mismatch");
    const SmithForm snf = smith_normal_form(m);
    const IntVector w = snf.U * v;
    IntVector y(m.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < snf.rank) {
            const Integer& d = snf.S(i, i);
            if (w[i] % d != 0) return std::nullopt;
            y[i] = w[i] / d;
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    IntVector x = snf.V * y;
    if (m * x != v) throw InternalError("solve_integer: solution failed verification");
    return x;
}

std::optional<RationalVector> solve_in_span(std::span<const IntVector> generators, const IntVector& point) {
    const std::size_t k = generators.size();
    const std::size_t dim = point.size();
    for (const auto& g : generators)
        if (g.size() != dim) throw InputError("solve_in_span: generator length mismatch");
    // Augmented system [g_1 ... g_k | point].
    std::vector<RationalVector> rows(dim, RationalVector(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c) rows[r][c] = generators[c][r];
        rows[r][k] = point[r];
    }
    const auto pivots = echelon(rows, k + 1);
    std::size_t generator_pivots = 0;
    for (std::size_t p : pivots) {
        if (p == k) return std::nullopt;  // inconsistent
        ++generator_pivots;
    }
    if (generator_pivots != k) throw InputError("solve_in_span: generators are linearly dependent");
    RationalVector out(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = rows[i][k];
    return out;
}

std::optional<RationalVector> cone_coordinates(std::span<const IntVector> generators, const IntVector& point) {
    auto coords = solve_in_span(generators, point);
    if (!coords) return std::nullopt;
    for (const auto& c : *coords)
        if (c < 0) return std::nullopt;
    return coords;
}

namespace {

bool positively_proportional(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return dot(a, b) > 0;
}

}  // namespace

bool is_extremal_generator(std::span<const IntVector> generators, std::size_t index) {
    if (index >= generators.size()) throw InputError("is_extremal_generator: index out of range");
    const IntVector& g = generators[index];
    if (is_zero(g)) return false;
    const std::size_t dim = g.size();

    // A cone containing a line has no one-dimensional faces.
    {
        std::vector<RationalVector> rows(dim + 1, RationalVector(generators.size()));
        for (std::size_t c = 0; c < generators.size(); ++c) {
            if (generators[c].size() != dim) throw InputError("is_extremal_generator: generator length mismatch");
            for (std::size_t r = 0; r < dim; ++r) rows[r][c] = generators[c][r];
            rows[dim][c] = is_zero(generators[c]) ? 0 : 1;
        }
        RationalVector rhs(dim + 1);
        rhs[dim] = 1;
        if (find_nonnegative_solution(rows, rhs)) return false;
    }

    std::vector<const IntVector*> others;
    for (const auto& h : generators)
        if (!is_zero(h) && !positively_proportional(h, g)) others.push_back(&h);
    std::vector<RationalVector> rows(dim, RationalVector(others.size()));
    for (std::size_t c = 0; c < others.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) rows[r][c] = (*others[c])[r];
    RationalVector rhs(g.begin(), g.end());
    return !find_nonnegative_solution(rows, rhs).has_value();
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_primitive_vector(const IntVector& v) { return gcd_of(v) == 1; }

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InputError("add: length mismatch");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InputError("subtract: length mismatch");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector scale(const Integer& k, const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InputError("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace toricwhb::lattice
