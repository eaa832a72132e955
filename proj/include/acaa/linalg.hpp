#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acaa/scalar.hpp"

namespace acaa {

/// Coordinate vector. All entries must share one FieldSpec.
using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero(std::span<Scalar const> v);
Vector operator+(Vector const &a, Vector const &b);
Vector operator-(Vector const &a, Vector const &b);
Vector operator-(Vector const &a);
Vector operator*(Scalar const &s, Vector const &v);
/// v += s * w
void axpy(Vector &v, Scalar const &s, Vector const &w);
std::string to_string(Vector const &v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols);
    /// Row list constructor; every row must have the same length.
    Matrix(FieldSpec f, std::vector<Vector> const &rows);

    static Matrix identity(FieldSpec f, std::size_t n);
    static Matrix zero(FieldSpec f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
    static Matrix from_ints(FieldSpec f, std::vector<std::vector<long>> const &rows);
    /// Column j holds columns[j].
    static Matrix from_columns(FieldSpec f, std::size_t rows, std::vector<Vector> const &columns);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    /// Row-major entries.
    std::vector<Scalar> const &entries() const { return data_; }

    Matrix transpose() const;
    Vector apply(Vector const &v) const;
    bool is_zero() const;

    Matrix &operator+=(Matrix const &o);
    Matrix &operator-=(Matrix const &o);
    friend Matrix operator+(Matrix a, Matrix const &b) { return a += b; }
    friend Matrix operator-(Matrix a, Matrix const &b) { return a -= b; }
    friend Matrix operator*(Matrix const &a, Matrix const &b);
    friend Matrix operator*(Scalar const &s, Matrix m);
    friend bool operator==(Matrix const &a, Matrix const &b);

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Linear subspace of field^ambient_dim, stored as the nonzero rows of its
/// reduced row echelon form. The basis is therefore canonical and two
/// subspaces are equal iff their bases compare equal entrywise.
class Subspace {
public:
    Subspace(FieldSpec f, std::size_t ambient_dim) : field_(f), ambient_(ambient_dim) {}

    FieldSpec field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    std::vector<Vector> const &basis() const { return basis_; }

    bool contains(Vector const &v) const;
    bool contains(Subspace const &other) const;

    friend bool operator==(Subspace const &a, Subspace const &b);

private:
    friend Subspace span(FieldSpec f, std::size_t ambient_dim, std::vector<Vector> const &vectors);
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon row_reduce(Matrix m);

struct RankKernel {
    std::size_t rank;
    Subspace kernel;
};
RankKernel rank_kernel(Matrix const &m);
std::size_t rank(Matrix const &m);

/// Linear hull of vectors, each of length ambient_dim.
Subspace span(FieldSpec f, std::size_t ambient_dim, std::vector<Vector> const &vectors);
/// Throws DimensionMismatch on differing ambient spaces.
bool subspace_equal(Subspace const &a, Subspace const &b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(Matrix const &m);

/// Solution x of m x = b if one exists.
std::optional<Vector> solve(Matrix const &m, Vector const &b);

} // namespace acaa
