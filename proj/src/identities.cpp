#include "acaa/identities.hpp"

#include "acaa/error.hpp"

namespace acaa {

namespace {

// e_i * v
Vector left_mul(Algebra const &A, std::size_t i, Vector const &v)
{
    std::size_t const n = A.dim();
    Vector out = zero_vector(A.field(), n);
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero())
            continue;
        for (std::size_t k = 0; k < n; ++k)
            if (!A.c(i, j, k).is_zero())
                out[k] += v[j] * A.c(i, j, k);
    }
    return out;
}

// v * e_j
Vector right_mul(Algebra const &A, Vector const &v, std::size_t j)
{
    std::size_t const n = A.dim();
    Vector out = zero_vector(A.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t k = 0; k < n; ++k)
            if (!A.c(i, j, k).is_zero())
                out[k] += v[i] * A.c(i, j, k);
    }
    return out;
}

// e_a (e_b e_c)
Vector right_nested(Algebra const &A, std::size_t a, std::size_t b, std::size_t c)
{
    return left_mul(A, a, A.product(b, c));
}

// (e_a e_b) e_c
Vector left_nested(Algebra const &A, std::size_t a, std::size_t b, std::size_t c)
{
    return right_mul(A, A.product(a, b), c);
}

template <class F> CheckResult scan_triples(Algebra const &A, std::string const &law, F &&value)
{
    std::size_t const n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector v = value(i, j, k);
                if (!is_zero(v))
                    return CheckResult::fail({{i, j, k}, std::move(v), law});
            }
    return CheckResult::ok();
}

} // namespace

QuadIdentityCoeffs QuadIdentityCoeffs::from_ints(FieldSpec f, std::array<long, 12> const &coeffs)
{
    QuadIdentityCoeffs q{{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                          Scalar::zero(f), Scalar::zero(f)},
                         {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                          Scalar::zero(f), Scalar::zero(f)}};
    for (std::size_t i = 0; i < 6; ++i) {
        q.a[i] = Scalar(f, coeffs[i]);
        q.b[i] = Scalar(f, coeffs[6 + i]);
    }
    return q;
}

QuadIdentityCoeffs QuadIdentityCoeffs::acaa(FieldSpec f)
{
    return from_ints(f, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0});
}

QuadIdentityCoeffs QuadIdentityCoeffs::jacobi(FieldSpec f)
{
    return from_ints(f, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1});
}

QuadIdentityCoeffs QuadIdentityCoeffs::antiassociative(FieldSpec f)
{
    return from_ints(f, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
}

Vector quadratic_identity_value(Algebra const &A, QuadIdentityCoeffs const &q, std::size_t i,
                                std::size_t j, std::size_t k)
{
    // (x1,x2,x3) = (e_i,e_j,e_k); monomial order as in QuadIdentityCoeffs.
    struct Mono {
        std::size_t p, q, r;
    };
    std::array<Mono, 6> const left{{{i, j, k}, {j, i, k}, {k, j, i}, {i, k, j}, {j, k, i}, {k, i, j}}};
    std::array<Mono, 6> const right{{{i, j, k}, {j, i, k}, {k, j, i}, {i, k, j}, {j, k, i}, {k, i, j}}};
    Vector sum = zero_vector(A.field(), A.dim());
    for (std::size_t m = 0; m < 6; ++m) {
        if (!q.a[m].is_zero())
            axpy(sum, q.a[m], left_nested(A, left[m].p, left[m].q, left[m].r));
        if (!q.b[m].is_zero())
            axpy(sum, q.b[m], right_nested(A, right[m].p, right[m].q, right[m].r));
    }
    return sum;
}

CheckResult check_anticommutative(Algebra const &A)
{
    std::size_t const n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector v = A.product(i, j);
            if (i != j)
                v = v + A.product(j, i);
            if (!is_zero(v))
                return CheckResult::fail({{i, j}, std::move(v), "anticommutativity"});
        }
    return CheckResult::ok();
}

CheckResult check_acaa(Algebra const &A)
{
    if (A.field().characteristic() == 2)
        throw PreconditionError("the linearized Acaa test needs characteristic != 2");
    if (!check_anticommutative(A))
        throw PreconditionError("Acaa check requires an anticommutative algebra");
    return scan_triples(A, "acaa", [&](auto i, auto j, auto k) {
        return right_nested(A, i, j, k) + right_nested(A, k, j, i);
    });
}

CheckResult check_quadratic_identity(Algebra const &A, QuadIdentityCoeffs const &c)
{
    for (auto const &s : c.a)
        if (!(s.field() == A.field()))
            throw FieldMismatch("identity coefficients over a different field");
    for (auto const &s : c.b)
        if (!(s.field() == A.field()))
            throw FieldMismatch("identity coefficients over a different field");
    return scan_triples(A, "quadratic identity",
                        [&](auto i, auto j, auto k) { return quadratic_identity_value(A, c, i, j, k); });
}

CheckResult check_jacobi(Algebra const &A)
{
    auto r = check_quadratic_identity(A, QuadIdentityCoeffs::jacobi(A.field()));
    if (r)
        return r;
    auto w = *r.witness();
    w.law = "jacobi";
    return CheckResult::fail(std::move(w));
}

CheckResult check_antiassociative(Algebra const &A)
{
    auto r = check_quadratic_identity(A, QuadIdentityCoeffs::antiassociative(A.field()));
    if (r)
        return r;
    auto w = *r.witness();
    w.law = "antiassociativity";
    return CheckResult::fail(std::move(w));
}

CheckResult check_cyclic_triple(Algebra const &A)
{
    return scan_triples(A, "cyclic triple equality", [&](auto i, auto j, auto k) {
        Vector const x = right_nested(A, i, j, k);
        Vector d = x - right_nested(A, j, k, i);
        if (is_zero(d))
            d = x - right_nested(A, k, i, j);
        return d;
    });
}

Vector rho(Algebra const &B, Vector const &b1, Vector const &b2, Vector const &b3)
{
    Vector const p = multiply(B, b1, b2);
    return multiply(B, p, b3) - multiply(B, b3, p);
}

namespace {

// rho(e_a, e_b, e_c) from the tensor
Vector rho_basis(Algebra const &B, std::size_t a, std::size_t b, std::size_t c)
{
    Vector const p = B.product(a, b);
    return right_mul(B, p, c) - left_mul(B, c, p);
}

} // namespace

CheckResult check_rho_associative(Algebra const &B)
{
    return scan_triples(B, "rho-associativity",
                        [&](auto i, auto j, auto k) { return rho_basis(B, i, j, k); });
}

CheckResult check_acaa_admissible(Algebra const &B)
{
    return scan_triples(B, "acaa-admissibility", [&](auto i, auto j, auto k) {
        Vector v = rho_basis(B, i, j, k);
        v = v - rho_basis(B, j, i, k);
        v = v + rho_basis(B, i, k, j);
        return v - rho_basis(B, k, i, j);
    });
}

std::string describe(Algebra const &A, Witness const &w)
{
    std::string s = w.law + " fails at (";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (i)
            s += ",";
        s += w.indices[i] < A.dim() ? A.label(w.indices[i]) : std::to_string(w.indices[i]);
    }
    s += ")";
    if (w.residual.size() == A.dim())
        s += ": value " + format_element(A, w.residual);
    return s;
}

} // namespace acaa
