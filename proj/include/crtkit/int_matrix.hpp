#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace crtkit {

// All arithmetic in this library is exact. Entries are arbitrary-precision
// integers; intermediate values in the normal-form algorithms can grow far
// beyond 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. Matrices with zero rows or zero columns
// are ordinary values (maps into or out of the trivial group).
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    // Convenience for literals in tests and fixtures: rows of int64 values.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& entries);
    // Columns of `a` followed by columns of `b`; row counts must agree.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix scaled(const Int& k) const;
    std::vector<Int> column(std::size_t j) const;
    IntMatrix with_column_appended(const std::vector<Int>& v) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += k * row j, and the column version.
    void add_row_multiple(std::size_t i, std::size_t j, const Int& k);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& k);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    std::vector<Int> apply(const std::vector<Int>& x) const;

    bool operator==(const IntMatrix& other) const = default;

    // "[[1,2],[3,4]]"; degenerate shapes render as "[2x0]" so the shape
    // survives in reports.
    std::string to_string() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , all
// diagonal entries >= 0, nonzero entries first.
struct SmithDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// U * A = H with U unimodular and H in row-echelon Hermite form: pivots
// positive, entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix U;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& a);

// Columns form a Z-basis of { x : A x = 0 }; a trivial kernel yields a
// cols x 0 result.
IntMatrix kernel_lattice(const IntMatrix& a);

// Particular integer solution of (basis) x = v, if one exists.
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& basis, const std::vector<Int>& v);

// True iff v lies in the integer column span of basis. Throws
// std::invalid_argument when v.size() != basis.rows().
bool lattice_member(const IntMatrix& basis, const std::vector<Int>& v);

// Exact determinant (Bareiss). The determinant of the 0x0 matrix is 1.
Int determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix inverse_unimodular(const IntMatrix& u);

// Floor division helper (cpp_int's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);

} // namespace crtkit
