#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qres/field.hpp"

namespace qres {

class Rng;

// Dense matrix over a Field. Maps V -> W act on column vectors and are
// stored as dim W x dim V.
class Matrix {
public:
    Matrix() : field_(Field::prime(2)) {}
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_rows(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& row_major);
    static Matrix random(Field field, std::size_t rows, std::size_t cols, Rng& rng);
    // Column vector with the given entries.
    static Matrix column(Field field, const std::vector<long long>& entries);
    static Matrix unit_column(Field field, std::size_t n, std::size_t i);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& value);
    void set(std::size_t i, std::size_t j, long long value);
    bool is_zero_at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix& operator+=(const Matrix& other);
    // this += s * other
    void add_scaled(const Matrix& other, const Scalar& s);
    Matrix transpose() const;
    Matrix power(std::size_t n) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
    // Row-major flattening as a column vector, and its inverse.
    Matrix flatten() const;
    static Matrix unflatten(const Matrix& column, std::size_t rows, std::size_t cols,
                            std::size_t offset = 0);

    static Matrix hstack(Field field, std::size_t rows, const std::vector<Matrix>& parts);
    static Matrix vstack(Field field, std::size_t cols, const std::vector<Matrix>& parts);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diagonal(Field field, const std::vector<Matrix>& parts);
    static Matrix kron(const Matrix& a, const Matrix& b);

    struct Rref;
    Rref rref() const;
    std::size_t rank() const;
    bool is_invertible() const;
    std::optional<Matrix> inverse() const;
    // Basis of the null space: one vector per free column, free entry 1.
    Matrix kernel_basis() const;
    // Canonical basis of the column space (transposed nonzero rows of the
    // rref of the transpose); equal subspaces give equal bases.
    Matrix image_basis() const;
    // Some solution of this * X = rhs with free variables set to zero.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    std::string to_string() const;

    // Raw access for the prime-field kernels.
    const std::vector<std::uint32_t>& prime_data() const { return fp_; }
    const std::vector<mpq_class>& rational_data() const { return q_; }

private:
    friend struct MatrixAccess;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> fp_;
    std::vector<mpq_class> q_;
};

struct Matrix::Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

// Subspace helpers; subspaces of F^n are given by spanning columns.
bool column_space_contains(const Matrix& space, const Matrix& vectors);
Matrix subspace_sum(const Matrix& u, const Matrix& v);
Matrix subspace_intersection(const Matrix& u, const Matrix& v);

// For U (independent columns) inside F^n: q with kernel U and a section s,
// q * s = 1. The complement is spanned by standard vectors.
struct QuotientMap {
    Matrix q;
    Matrix s;
};
QuotientMap quotient_map(Field field, std::size_t n, const Matrix& u);

// Coordinates relative to a basis (independent columns) of a subspace.
class SubspaceCoords {
public:
    SubspaceCoords() = default;
    explicit SubspaceCoords(const Matrix& basis);

    const Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.cols(); }
    // Coordinates of vectors assumed to lie in the subspace.
    Matrix coords(const Matrix& vectors) const { return left_inverse_ * vectors; }
    bool contains(const Matrix& vectors) const;

private:
    Matrix basis_;
    Matrix left_inverse_;
};

}  // namespace qres
