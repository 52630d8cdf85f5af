#include "eitrace/matrix.hpp"

#include "eitrace/errors.hpp"

#include <string>
#include <utility>

namespace eitrace {

namespace {

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw ShapeError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < ncols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Rational>> tmp;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (long v : row)
            r.emplace_back(v);
        tmp.push_back(std::move(r));
    }
    return from_rows(tmp);
}

Matrix Matrix::column(const std::vector<Rational>& entries)
{
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, 0) = entries[i];
    return m;
}

std::vector<Rational> Matrix::column_vector(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const
{
    Matrix m(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < columns.size(); ++j)
            m(r, j) = (*this)(r, columns[j]);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const
{
    Matrix m(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(rows[i], c);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const
{
    if (r0 + nrows > rows_ || c0 + ncols > cols_)
        throw ShapeError("block out of range of " + shape(*this));
    Matrix m(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
        throw ShapeError("block " + shape(m) + " does not fit into " + shape(*this));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("cannot add " + shape(*this) + " and " + shape(other));
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("cannot subtract " + shape(other) + " from " + shape(*this));
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar)
{
    for (auto& x : data_)
        x *= scalar;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw ShapeError("cannot multiply " + shape(a) + " by " + shape(b));
    Matrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) == 0)
                    continue;
                tmp = aik * bkj;
                c(i, j) += tmp;
            }
        }
    }
    return c;
}

Rational trace(const Matrix& m)
{
    if (!m.is_square())
        throw ShapeError("trace of non-square " + shape(m));
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeError("hstack of " + shape(a) + " and " + shape(b));
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw ShapeError("vstack of " + shape(a) + " and " + shape(b));
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix partial_trace(const Matrix& m, std::size_t dA, std::size_t dS, std::size_t dT)
{
    if (m.rows() != dA * dT || m.cols() != dA * dS)
        throw ShapeError("partial trace expects " + std::to_string(dA * dT) + "x" +
                         std::to_string(dA * dS) + ", got " + shape(m));
    Matrix out(dT, dS);
    for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t t = 0; t < dT; ++t)
            for (std::size_t s = 0; s < dS; ++s)
                out(t, s) += m(a * dT + t, a * dS + s);
    return out;
}

Echelon row_echelon(Matrix m)
{
    Echelon e;
    std::size_t prow = 0;
    Rational factor;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        std::size_t r = prow;
        while (r < m.rows() && sgn(m(r, col)) == 0)
            ++r;
        if (r == m.rows())
            continue;
        if (r != prow)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(r, c), m(prow, c));
        Rational inv = 1 / m(prow, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (sgn(m(prow, c)) != 0)
                m(prow, c) *= inv;
        for (std::size_t other = 0; other < m.rows(); ++other) {
            if (other == prow || sgn(m(other, col)) == 0)
                continue;
            Rational f = m(other, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (sgn(m(prow, c)) == 0)
                    continue;
                factor = f * m(prow, c);
                m(other, c) -= factor;
            }
        }
        e.pivots.push_back(col);
        ++prow;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m)
{
    return row_echelon(m).pivots.size();
}

Matrix kernel(const Matrix& m)
{
    Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t f = free_cols[j];
        k(f, j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], j) = -e.reduced(r, f);
    }
    return k;
}

Matrix image(const Matrix& m)
{
    Echelon e = row_echelon(m);
    return m.select_columns(e.pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeError("solve: " + shape(a) + " against right-hand side " + shape(b));
    Echelon e = row_echelon(hstack(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t p = e.pivots[r];
        if (p >= a.cols())
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(p, c) = e.reduced(r, a.cols() + c);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.is_square())
        throw ShapeError("inverse of non-square " + shape(m));
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

Matrix left_inverse(const Matrix& basis)
{
    // Invert a maximal set of independent rows and scatter the result.
    Echelon e = row_echelon(basis.transpose());
    if (e.pivots.size() != basis.cols())
        throw ShapeError("left inverse requires full column rank, got rank " +
                         std::to_string(e.pivots.size()) + " for " + shape(basis));
    Matrix square = basis.select_rows(e.pivots);
    Matrix inv = *inverse(square);
    Matrix l(basis.cols(), basis.rows());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < basis.cols(); ++i)
            l(i, e.pivots[j]) = inv(i, j);
    return l;
}

Rational determinant(const Matrix& m)
{
    if (!m.is_square())
        throw ShapeError("determinant of non-square " + shape(m));
    Matrix a = m;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && sgn(a(r, col)) == 0)
            ++r;
        if (r == n)
            return 0;
        if (r != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(r, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t other = col + 1; other < n; ++other) {
            if (sgn(a(other, col)) == 0)
                continue;
            Rational f = a(other, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c)
                a(other, c) -= f * a(col, c);
        }
    }
    return det;
}

Matrix induced_on_subquotient(const Matrix& u, const Matrix& z, const Matrix& b,
                              std::size_t dS, std::size_t dT)
{
    const std::size_t dimV = z.rows();
    if (b.rows() != dimV)
        throw ShapeError("subquotient bases live in different spaces");
    if (u.rows() != dimV * dT || u.cols() != dimV * dS)
        throw ShapeError("subquotient map has shape " + shape(u));
    Echelon e = row_echelon(hstack(b, z));
    std::vector<std::size_t> complement;
    std::size_t bcount = 0;
    for (auto p : e.pivots) {
        if (p < b.cols())
            ++bcount;
        else
            complement.push_back(p - b.cols());
    }
    if (bcount != b.cols())
        throw ShapeError("subquotient: boundary basis is not independent");
    const std::size_t q = complement.size();
    if (bcount + q != z.cols())
        throw ShapeError("subquotient: boundary space is not contained in the cycle space");
    if (q == 0)
        return Matrix(0, 0);
    Matrix w = z.select_columns(complement);
    Matrix full = hstack(b, w);
    Matrix coords = kron(left_inverse(full), Matrix::identity(dT));
    Matrix image = coords * (u * kron(w, Matrix::identity(dS)));
    return image.block(b.cols() * dT, 0, q * dT, q * dS);
}

} // namespace eitrace
