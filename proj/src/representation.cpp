#include "acaa/representation.hpp"

#include "acaa/error.hpp"

namespace acaa {

namespace {

Vector flatten(Matrix const &m) { return m.entries(); }

Matrix basis_ad(Algebra const &A, std::size_t i)
{
    return ad_matrix(A, unit_vector(A.field(), A.dim(), i));
}

} // namespace

Representation::Representation(Algebra source, std::size_t target_dim, std::vector<Matrix> images)
    : source_(std::move(source)), target_dim_(target_dim), images_(std::move(images))
{
    if (images_.size() != source_.dim())
        throw DimensionMismatch("representation needs " + std::to_string(source_.dim()) +
                                " images, got " + std::to_string(images_.size()));
    for (auto const &m : images_) {
        if (m.rows() != target_dim_ || m.cols() != target_dim_)
            throw DimensionMismatch("representation images must be " + std::to_string(target_dim_) +
                                    "x" + std::to_string(target_dim_));
        if (!(m.field() == source_.field()))
            throw FieldMismatch("representation image over " + m.field().to_string() +
                                ", algebra over " + source_.field().to_string());
    }
}

Matrix Representation::image(Vector const &x) const
{
    require_element(source_, x);
    Matrix m(source_.field(), target_dim_, target_dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            m += x[i] * images_[i];
    return m;
}

Matrix ad_matrix(Algebra const &A, Vector const &x)
{
    require_element(A, x);
    if (!check_anticommutative(A))
        throw PreconditionError("ad_matrix requires an anticommutative algebra");
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < A.dim(); ++j)
        columns.push_back(multiply_basis_right(A, x, j));
    return Matrix::from_columns(A.field(), A.dim(), columns);
}

Representation adjoint_representation(Algebra const &A)
{
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < A.dim(); ++i)
        images.push_back(basis_ad(A, i));
    return Representation(A, A.dim(), std::move(images));
}

CheckResult check_ad_identities(Algebra const &A)
{
    if (!check_acaa(A))
        throw PreconditionError("ad identities require an Acaa algebra");
    std::size_t const n = A.dim();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < n; ++i)
        ad.push_back(basis_ad(A, i));
    Scalar const two(A.field(), 2);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix const sq = ad[i] * ad[i];
        if (!sq.is_zero())
            return CheckResult::fail({{i}, flatten(sq), "(ad x)^2 = 0"});
        for (std::size_t j = 0; j < n; ++j) {
            Matrix const ij = ad[i] * ad[j], ji = ad[j] * ad[i];
            Matrix const anti = ij + ji;
            if (!anti.is_zero())
                return CheckResult::fail({{i, j}, flatten(anti), "ad anticommutation"});
            Matrix const weighted = two * ad_matrix(A, A.product(i, j)) + (ij - ji);
            if (!weighted.is_zero())
                return CheckResult::fail({{i, j}, flatten(weighted), "2 ad[x,y] = -[ad x, ad y]"});
        }
    }
    return CheckResult::ok();
}

CheckResult check_weighted_antiderivation(Algebra const &A, Matrix const &f, long k)
{
    if (f.rows() != A.dim() || f.cols() != A.dim())
        throw DimensionMismatch("endomorphism must be " + std::to_string(A.dim()) + "x" +
                                std::to_string(A.dim()));
    if (!(f.field() == A.field()))
        throw FieldMismatch("endomorphism over a different field");
    if (k <= 0)
        throw PreconditionError("weight must be a positive integer");
    Scalar const weight(A.field(), k);
    std::size_t const n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = weight * f.apply(A.product(i, j));
            v = v + multiply_basis_left(A, i, f.column(j));
            v = v + multiply_basis_right(A, f.column(i), j);
            if (!is_zero(v))
                return CheckResult::fail({{i, j}, std::move(v), "weighted anti-derivation"});
        }
    return CheckResult::ok();
}

CheckResult check_representation(Representation const &r)
{
    Algebra const &A = r.source();
    if (!check_acaa(A))
        throw PreconditionError("representations are defined for Acaa algebras");
    auto const &img = r.images();
    std::size_t const n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix const sq = img[i] * img[i];
        if (!sq.is_zero())
            return CheckResult::fail({{i}, flatten(sq), "rho(x)^2 = 0"});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix const ij = img[i] * img[j];
            Matrix const bracket = r.image(A.product(i, j)) + ij;
            if (!bracket.is_zero())
                return CheckResult::fail({{i, j}, flatten(bracket), "rho[x,y] = -rho(x)rho(y)"});
            Matrix const anti = ij + img[j] * img[i];
            if (!anti.is_zero())
                return CheckResult::fail({{i, j}, flatten(anti), "rho(x)rho(y) = -rho(y)rho(x)"});
        }
    return CheckResult::ok();
}

bool is_faithful(Representation const &r)
{
    if (!check_representation(r))
        throw PreconditionError("is_faithful requires a valid representation");
    std::vector<Vector> rows;
    for (auto const &m : r.images())
        rows.push_back(flatten(m));
    if (rows.empty())
        return true;
    return rank(Matrix(r.source().field(), rows)) == rows.size();
}

} // namespace acaa
