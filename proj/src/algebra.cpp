#include "acaa/algebra.hpp"

#include <algorithm>
#include <utility>

#include "acaa/error.hpp"

namespace acaa {

Algebra::Algebra(FieldSpec field, std::size_t dim, std::vector<Scalar> tensor, Symmetry hint)
    : field_(field), dim_(dim), tensor_(std::move(tensor)), symmetry_(hint)
{
    if (tensor_.size() != dim * dim * dim)
        throw DimensionMismatch("structure tensor has " + std::to_string(tensor_.size()) +
                                " entries, expected " + std::to_string(dim * dim * dim));
    for (auto const &s : tensor_)
        if (!(s.field() == field))
            throw FieldMismatch("structure constant over " + s.field().to_string() +
                                " in an algebra over " + field.to_string());
    if (hint == Symmetry::Skew) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    bool const ok = i == j ? c(i, i, k).is_zero() : c(i, j, k) == -c(j, i, k);
                    if (!ok)
                        throw PreconditionError("tensor marked skew is not alternating at (" +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                "," + std::to_string(k) + ")");
                }
    }
}

Algebra Algebra::zero(FieldSpec field, std::size_t dim, Symmetry hint)
{
    return Algebra(field, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(field)), hint);
}

Algebra Algebra::from_products(FieldSpec field, std::size_t dim,
                               std::vector<ProductEntry> const &entries, Symmetry hint)
{
    std::vector<Scalar> t(dim * dim * dim, Scalar::zero(field));
    auto const at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar & {
        if (i >= dim || j >= dim || k >= dim)
            throw DimensionMismatch("product index out of range");
        return t[(i * dim + j) * dim + k];
    };
    for (auto const &e : entries)
        for (auto const &[k, v] : e.value) {
            at(e.left, e.right, k) += Scalar(field, v);
            if (hint == Symmetry::Skew)
                at(e.right, e.left, k) -= Scalar(field, v);
        }
    return Algebra(field, dim, std::move(t), hint);
}

std::string Algebra::label(std::size_t i) const
{
    if (labels_ && i < labels_->size())
        return (*labels_)[i];
    return "e" + std::to_string(i + 1);
}

Algebra Algebra::with_name(std::string name) const
{
    Algebra a = *this;
    a.name_ = std::move(name);
    return a;
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const
{
    if (labels.size() != dim_)
        throw DimensionMismatch("expected " + std::to_string(dim_) + " basis labels, got " +
                                std::to_string(labels.size()));
    Algebra a = *this;
    a.labels_ = std::move(labels);
    return a;
}

Vector Algebra::product(std::size_t i, std::size_t j) const
{
    auto const first = tensor_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void require_element(Algebra const &A, Vector const &x)
{
    if (x.size() != A.dim())
        throw DimensionMismatch("element has " + std::to_string(x.size()) +
                                " coordinates, algebra has dimension " + std::to_string(A.dim()));
    for (auto const &s : x)
        if (!(s.field() == A.field()))
            throw FieldMismatch("element over " + s.field().to_string() + ", algebra over " +
                                A.field().to_string());
}

Vector multiply(Algebra const &A, Vector const &x, Vector const &y)
{
    require_element(A, x);
    require_element(A, y);
    std::size_t const n = A.dim();
    Vector out = zero_vector(A.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar const w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!A.c(i, j, k).is_zero())
                    out[k] += w * A.c(i, j, k);
        }
    }
    return out;
}

Vector multiply_basis_right(Algebra const &A, Vector const &x, std::size_t j)
{
    return multiply(A, x, unit_vector(A.field(), A.dim(), j));
}

Vector multiply_basis_left(Algebra const &A, std::size_t i, Vector const &y)
{
    return multiply(A, unit_vector(A.field(), A.dim(), i), y);
}

namespace {

template <class F> Algebra map_tensor(Algebra const &A, Symmetry hint, F &&entry)
{
    std::size_t const n = A.dim();
    std::vector<Scalar> t;
    t.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.push_back(entry(i, j, k));
    Algebra out(A.field(), n, std::move(t), hint);
    return A.labels() ? out.with_labels(*A.labels()) : out;
}

} // namespace

Polarization polarize(Algebra const &A)
{
    auto minus = map_tensor(A, Symmetry::Skew, [&](auto i, auto j, auto k) {
        return A.c(i, j, k) - A.c(j, i, k);
    });
    auto plus = map_tensor(A, Symmetry::None, [&](auto i, auto j, auto k) {
        return A.c(i, j, k) + A.c(j, i, k);
    });
    return {std::move(minus), std::move(plus)};
}

Algebra commutator_algebra(Algebra const &B)
{
    return map_tensor(B, Symmetry::Skew,
                      [&](auto i, auto j, auto k) { return B.c(i, j, k) - B.c(j, i, k); });
}

Algebra scaled(Algebra const &A, Scalar const &s)
{
    return map_tensor(A, A.symmetry(), [&](auto i, auto j, auto k) { return s * A.c(i, j, k); });
}

Algebra direct_sum(Algebra const &A, Algebra const &B)
{
    if (!(A.field() == B.field()))
        throw FieldMismatch("direct sum of algebras over " + A.field().to_string() + " and " +
                            B.field().to_string());
    std::size_t const a = A.dim(), n = A.dim() + B.dim();
    std::vector<Scalar> t(n * n * n, Scalar::zero(A.field()));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t k = 0; k < a; ++k)
                t[(i * n + j) * n + k] = A.c(i, j, k);
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j)
            for (std::size_t k = 0; k < B.dim(); ++k)
                t[((a + i) * n + a + j) * n + a + k] = B.c(i, j, k);
    Symmetry const hint = A.symmetry() == Symmetry::Skew && B.symmetry() == Symmetry::Skew
                              ? Symmetry::Skew
                              : Symmetry::None;
    return Algebra(A.field(), n, std::move(t), hint);
}

Algebra change_of_basis(Algebra const &A, Matrix const &P)
{
    if (P.rows() != A.dim() || !P.is_square())
        throw DimensionMismatch("change of basis matrix must be " + std::to_string(A.dim()) + "x" +
                                std::to_string(A.dim()));
    auto const Pinv = inverse(P);
    if (!Pinv)
        throw PreconditionError("change of basis matrix is singular");
    std::size_t const n = A.dim();
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < n; ++a)
        cols.push_back(P.column(a));
    std::vector<Scalar> t;
    t.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector const coords = Pinv->apply(multiply(A, cols[a], cols[b]));
            t.insert(t.end(), coords.begin(), coords.end());
        }
    return Algebra(A.field(), n, std::move(t), A.symmetry());
}

Subspace derived_subspace(Algebra const &A)
{
    std::vector<Vector> products;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            products.push_back(A.product(i, j));
    return span(A.field(), A.dim(), products);
}

Subspace cube_subspace(Algebra const &A)
{
    // (e_i e_j) e_k and e_i (e_j e_k) span every degree-3 product by trilinearity.
    std::size_t const n = A.dim();
    std::vector<Vector> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector const ij = A.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                products.push_back(multiply_basis_right(A, ij, k));
                products.push_back(multiply_basis_left(A, k, ij));
            }
        }
    return span(A.field(), n, products);
}

Subspace annihilator(Algebra const &A)
{
    // Rows: for every j and every output k, the linear forms x -> (x e_j)_k and
    // x -> (e_j x)_k.
    std::size_t const n = A.dim();
    Matrix M(A.field(), 2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                M((j * n + k) * 2, i) = A.c(i, j, k);
                M((j * n + k) * 2 + 1, i) = A.c(j, i, k);
            }
    return rank_kernel(M).kernel;
}

Fingerprint fingerprint(Algebra const &A)
{
    return {A.dim(), derived_subspace(A).dim(), annihilator(A).dim(), cube_subspace(A).dim()};
}

std::string to_string(Fingerprint const &fp)
{
    return "(" + std::to_string(fp.dim) + "," + std::to_string(fp.derived_dim) + "," +
           std::to_string(fp.ann_dim) + "," + std::to_string(fp.cube_dim) + ")";
}

} // namespace acaa

namespace acaa {

std::string format_element(Algebra const &A, Vector const &x)
{
    require_element(A, x);
    std::string out;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero())
            continue;
        std::string coeff = x[k].to_string();
        bool negative = A.field().is_rational() && coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff != "1")
            out += coeff + "*";
        out += A.label(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace acaa
