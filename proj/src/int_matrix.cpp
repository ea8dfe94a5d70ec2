#include "crtkit/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace crtkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix m = *this;
    for (auto& e : m.entries_)
        e *= k;
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

IntMatrix IntMatrix::with_column_appended(const std::vector<Int>& v) const {
    if (v.size() != rows_)
        throw std::invalid_argument("with_column_appended: length mismatch");
    IntMatrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        m.at(i, cols_) = v[i];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) += k * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, i) += k * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shapes differ");
    IntMatrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) += b.at(i, j);
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    return a + b.scaled(-1);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("apply: vector length mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += at(i, j) * x[j];
    return y;
}

std::string IntMatrix::to_string() const {
    if (rows_ == 0 || cols_ == 0) {
        std::ostringstream os;
        os << "[" << rows_ << "x" << cols_ << "]";
        return os.str();
    }
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : ",[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "" : ",") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Pivot rule shared by both normal forms: smallest nonzero absolute value in
// the working submatrix, ties broken by row-major position. Keeps the output
// reproducible run to run.
struct PivotPos {
    std::size_t row = 0;
    std::size_t col = 0;
    bool found = false;
};

PivotPos find_pivot(const IntMatrix& m, std::size_t row0, std::size_t col0) {
    PivotPos best;
    Int best_abs;
    for (std::size_t i = row0; i < m.rows(); ++i)
        for (std::size_t j = col0; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e == 0)
                continue;
            Int a = abs_int(e);
            if (!best.found || a < best_abs) {
                best = {i, j, true};
                best_abs = a;
            }
        }
    return best;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            PivotPos p = find_pivot(d, t, t);
            if (!p.found)
                goto done; // remaining submatrix is zero
            d.swap_rows(t, p.row);
            u.swap_rows(t, p.row);
            d.swap_cols(t, p.col);
            v.swap_cols(t, p.col);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d.at(i, t) != 0)
                    dirty = true; // remainder survives; rerun with smaller pivot
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            // Pivot now alone in its row and column. Enforce the divisibility
            // chain: fold any non-multiple into the pivot row and restart.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
    }
done:
    for (std::size_t t = 0; t < steps; ++t)
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    return {d, u, v};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    std::size_t r = 0;

    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // gcd-reduce column c below row r until one entry remains
        for (;;) {
            std::size_t best = h.rows();
            Int best_abs;
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0)
                    continue;
                Int v = abs_int(h.at(i, c));
                if (best == h.rows() || v < best_abs) {
                    best = i;
                    best_abs = v;
                }
            }
            if (best == h.rows())
                break; // column is zero from row r down
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool reduced = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0)
                    continue;
                Int q = h.at(i, c) / h.at(r, c);
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h.at(i, c) != 0)
                    reduced = false;
            }
            if (reduced)
                break;
        }
        if (h.at(r, c) == 0)
            continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return {h, u};
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    // Row-reduce the transpose: rows of U facing zero rows of H are exactly
    // the x with A x = 0, and they form a basis because U is unimodular.
    HermiteDecomposition hd = hermite_normal_form(a.transposed());
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < hd.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hd.H.cols(); ++j)
            if (hd.H.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero)
            zero_rows.push_back(i);
    }
    IntMatrix k(a.cols(), zero_rows.size());
    for (std::size_t j = 0; j < zero_rows.size(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            k.at(i, j) = hd.U.at(zero_rows[j], i);
    return k;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& basis, const std::vector<Int>& v) {
    if (v.size() != basis.rows())
        throw std::invalid_argument("solve_in_lattice: vector length does not match basis rows");
    SmithDecomposition s = smith_normal_form(basis);
    std::vector<Int> w = s.U.apply(v);
    std::size_t diag = std::min(basis.rows(), basis.cols());
    std::vector<Int> y(basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        if (i < diag && s.D.at(i, i) != 0) {
            if (w[i] % s.D.at(i, i) != 0)
                return std::nullopt;
            y[i] = w[i] / s.D.at(i, i);
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

bool lattice_member(const IntMatrix& basis, const std::vector<Int>& v) {
    return solve_in_lattice(basis, v).has_value();
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square())
        throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix b = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && b.at(i, k) == 0)
                ++i;
            if (i == n)
                return 0;
            b.swap_rows(k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.is_square())
        return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (!is_unimodular(u))
        throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    // P U Q = I for the Smith decomposition of a unimodular matrix,
    // so U^{-1} = Q P.
    SmithDecomposition s = smith_normal_form(u);
    if (s.D != IntMatrix::identity(u.rows()))
        throw std::invalid_argument("inverse_unimodular: Smith form is not the identity");
    return s.V * s.U;
}

} // namespace crtkit
