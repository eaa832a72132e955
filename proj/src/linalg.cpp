#include "acaa/linalg.hpp"

#include <utility>

#include "acaa/error.hpp"

namespace acaa {

namespace {

void require_len(std::size_t a, std::size_t b, char const *what)
{
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

} // namespace

Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(std::span<Scalar const> v)
{
    for (auto const &s : v)
        if (!s.is_zero())
            return false;
    return true;
}

Vector operator+(Vector const &a, Vector const &b)
{
    require_len(a.size(), b.size(), "vector sum");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(Vector const &a, Vector const &b)
{
    require_len(a.size(), b.size(), "vector difference");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator-(Vector const &a)
{
    Vector r;
    r.reserve(a.size());
    for (auto const &s : a)
        r.push_back(-s);
    return r;
}

Vector operator*(Scalar const &s, Vector const &v)
{
    Vector r = v;
    for (auto &x : r)
        x *= s;
    return r;
}

void axpy(Vector &v, Scalar const &s, Vector const &w)
{
    require_len(v.size(), w.size(), "axpy");
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero())
            v[i] += s * w[i];
}

std::string to_string(Vector const &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix::Matrix(FieldSpec f, std::vector<Vector> const &rows)
    : Matrix(f, rows.size(), rows.empty() ? 0 : rows.front().size())
{
    for (std::size_t r = 0; r < rows_; ++r) {
        require_len(rows[r].size(), cols_, "matrix row");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(rows[r][c].field() == f))
                throw FieldMismatch("matrix entry over " + rows[r][c].field().to_string() +
                                    " in a matrix over " + f.to_string());
            (*this)(r, c) = rows[r][c];
        }
    }
}

Matrix Matrix::identity(FieldSpec f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(FieldSpec f, std::vector<std::vector<long>> const &rows)
{
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_len(rows[r].size(), cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(f, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec f, std::size_t rows, std::vector<Vector> const &columns)
{
    Matrix m(f, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require_len(columns[c].size(), rows, "matrix column");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(Vector const &v) const
{
    require_len(v.size(), cols_, "matrix-vector product");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            auto const &a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero())
                out[r] += a * v[c];
        }
    return out;
}

bool Matrix::is_zero() const { return acaa::is_zero(data_); }

Matrix &Matrix::operator+=(Matrix const &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum of differently shaped matrices");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix &Matrix::operator-=(Matrix const &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference of differently shaped matrices");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    if (!(a.field_ == b.field_))
        throw FieldMismatch("matrix product over different fields");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            auto const &x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator*(Scalar const &s, Matrix m)
{
    for (auto &x : m.data_)
        x *= s;
    return m;
}

bool operator==(Matrix const &a, Matrix const &b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        Scalar const inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            Scalar const factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(Matrix const &m) { return row_reduce(m).pivots.size(); }

RankKernel rank_kernel(Matrix const &m)
{
    auto const [reduced, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> kernel_vectors;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(m.field(), m.cols());
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -reduced(r, free);
        kernel_vectors.push_back(std::move(v));
    }
    return {pivots.size(), span(m.field(), m.cols(), kernel_vectors)};
}

Subspace span(FieldSpec f, std::size_t ambient_dim, std::vector<Vector> const &vectors)
{
    Subspace s(f, ambient_dim);
    if (vectors.empty())
        return s;
    for (auto const &v : vectors)
        require_len(v.size(), ambient_dim, "span");
    auto const [reduced, pivots] = row_reduce(Matrix(f, vectors));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        s.basis_.push_back(reduced.row(r));
    return s;
}

bool Subspace::contains(Vector const &v) const
{
    require_len(v.size(), ambient_, "subspace membership");
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return rank(Matrix(field_, rows)) == basis_.size();
}

bool Subspace::contains(Subspace const &other) const
{
    for (auto const &v : other.basis())
        if (!contains(v))
            return false;
    return true;
}

bool operator==(Subspace const &a, Subspace const &b) { return subspace_equal(a, b); }

bool subspace_equal(Subspace const &a, Subspace const &b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspaces of different ambient dimension");
    if (!(a.field() == b.field()))
        throw FieldMismatch("subspaces over different fields");
    return a.basis() == b.basis();
}

std::optional<Matrix> inverse(Matrix const &m)
{
    if (!m.is_square())
        throw DimensionMismatch("inverse of a non-square matrix");
    std::size_t const n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    auto const [reduced, pivots] = row_reduce(std::move(aug));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = reduced(r, n + c);
    return inv;
}

std::optional<Vector> solve(Matrix const &m, Vector const &b)
{
    require_len(b.size(), m.rows(), "solve");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto const [reduced, pivots] = row_reduce(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = reduced(r, m.cols());
    return x;
}

} // namespace acaa
