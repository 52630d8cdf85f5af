#pragma once

#include "eitrace/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace eitrace {

/// Dense row-major matrix of exact rationals.
///
/// Maps between tensor products use the A-major Kronecker convention
/// throughout the library: the basis vector e_a (x) e_s of A (x) S sits at
/// index a * dim(S) + s.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
    /// Column vector.
    static Matrix column(const std::vector<Rational>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Rational> column_vector(std::size_t c) const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& scalar);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational trace(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);

/// Traces out the A factor of M : A (x) S -> A (x) T.
/// M must be (dA*dT) x (dA*dS); the result is the dT x dS matrix
/// sum_a M[(a,t),(a,s)].
Matrix partial_trace(const Matrix& m, std::size_t dA, std::size_t dS, std::size_t dT);

/// Reduced row echelon form with first-nonzero pivoting.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the null space, as columns.
Matrix kernel(const Matrix& m);
/// Basis of the column space, as the pivot columns of m.
Matrix image(const Matrix& m);
/// Some X with A X = B, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
/// L with L * basis = identity. Requires full column rank.
Matrix left_inverse(const Matrix& basis);
Rational determinant(const Matrix& m);

/// Given u : V (x) S -> V (x) T and nested subspaces B <= Z <= V (column
/// bases) with u(Z (x) S) <= Z (x) T and u(B (x) S) <= B (x) T, returns the
/// induced map (Z/B) (x) S -> (Z/B) (x) T. The quotient basis is formed by the
/// columns of Z not already in the span of B and earlier columns.
Matrix induced_on_subquotient(const Matrix& u, const Matrix& z, const Matrix& b,
                              std::size_t dS, std::size_t dT);

} // namespace eitrace
