#include "acaa/cohomology.hpp"

#include <array>
#include <stdexcept>

#include "acaa/error.hpp"

namespace acaa {

namespace {

std::size_t power(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Calls fn(args) for every tuple in [0,dim)^arity, lexicographically.
template <class F> void for_each_tuple(std::size_t dim, std::size_t arity, F &&fn)
{
    std::vector<std::size_t> args(arity, 0);
    if (dim == 0 && arity > 0)
        return;
    for (;;) {
        fn(std::span<std::size_t const>(args));
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++args[pos] < dim)
                break;
            args[pos] = 0;
            if (pos == 0)
                return;
        }
        if (arity == 0)
            return;
    }
}

void require_algebra_match(Algebra const &A, MultilinearMap const &m)
{
    if (m.dim() != A.dim())
        throw DimensionMismatch("cochain on a " + std::to_string(m.dim()) +
                                "-dimensional space, algebra has dimension " + std::to_string(A.dim()));
    if (!(m.field() == A.field()))
        throw FieldMismatch("cochain and algebra over different fields");
}

} // namespace

MultilinearMap::MultilinearMap(FieldSpec f, std::size_t dim, std::size_t arity, std::vector<Scalar> values)
    : field_(f), dim_(dim), arity_(arity), values_(std::move(values))
{
    if (values_.size() != power(dim, arity + 1))
        throw DimensionMismatch("multilinear map of arity " + std::to_string(arity) + " on dimension " +
                                std::to_string(dim) + " needs " + std::to_string(power(dim, arity + 1)) +
                                " values, got " + std::to_string(values_.size()));
    for (auto const &s : values_)
        if (!(s.field() == f))
            throw FieldMismatch("cochain value over a different field");
}

MultilinearMap MultilinearMap::zero(FieldSpec f, std::size_t dim, std::size_t arity)
{
    return MultilinearMap(f, dim, arity, std::vector<Scalar>(power(dim, arity + 1), Scalar::zero(f)));
}

bool MultilinearMap::is_zero() const { return acaa::is_zero(values_); }

Vector MultilinearMap::at(std::span<std::size_t const> args) const
{
    if (args.size() != arity_)
        throw DimensionMismatch("expected " + std::to_string(arity_) + " arguments");
    std::size_t offset = 0;
    for (auto a : args) {
        if (a >= dim_)
            throw DimensionMismatch("basis index out of range");
        offset = offset * dim_ + a;
    }
    auto const first = values_.begin() + static_cast<std::ptrdiff_t>(offset * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector MultilinearMap::evaluate(std::vector<Vector> const &args) const
{
    if (args.size() != arity_)
        throw DimensionMismatch("expected " + std::to_string(arity_) + " arguments");
    for (auto const &a : args)
        if (a.size() != dim_)
            throw DimensionMismatch("cochain argument has the wrong length");
    Vector out = zero_vector(field_, dim_);
    std::vector<std::size_t> idx(arity_, 0);
    // depth-first over nonzero coordinates only
    auto rec = [&](auto &self, std::size_t pos, Scalar const &weight) -> void {
        if (pos == arity_) {
            axpy(out, weight, at(idx));
            return;
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (args[pos][i].is_zero())
                continue;
            idx[pos] = i;
            self(self, pos + 1, weight * args[pos][i]);
        }
    };
    rec(rec, 0, Scalar::one(field_));
    return out;
}

bool is_skew(MultilinearMap const &m)
{
    if (m.arity() != 2)
        return false;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j) {
            std::array<std::size_t, 2> const ij{i, j}, ji{j, i};
            if (!is_zero(m.at(ij) + m.at(ji)))
                return false;
        }
    return true;
}

bool is_symmetric_first_two(MultilinearMap const &m)
{
    if (m.arity() != 3)
        return false;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i + 1; j < m.dim(); ++j)
            for (std::size_t k = 0; k < m.dim(); ++k) {
                std::array<std::size_t, 3> const a{i, j, k}, b{j, i, k};
                if (m.at(a) != m.at(b))
                    return false;
            }
    return true;
}

Cochain2::Cochain2(MultilinearMap map) : map_(std::move(map))
{
    if (!is_skew(map_))
        throw PreconditionError("2-cochains must be skew-symmetric bilinear maps");
}

Cochain3::Cochain3(MultilinearMap map) : map_(std::move(map))
{
    if (!is_symmetric_first_two(map_))
        throw PreconditionError("3-cochains must be trilinear and symmetric in the first two arguments");
}

Matrix delta0(Algebra const &A, Vector const &a)
{
    require_element(A, a);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < A.dim(); ++j)
        cols.push_back(multiply_basis_right(A, a, j));
    return Matrix::from_columns(A.field(), A.dim(), cols);
}

Cochain2 delta1(Algebra const &A, Matrix const &f)
{
    if (f.rows() != A.dim() || f.cols() != A.dim())
        throw DimensionMismatch("1-cochain must be a " + std::to_string(A.dim()) + "x" +
                                std::to_string(A.dim()) + " matrix");
    if (!(f.field() == A.field()))
        throw FieldMismatch("1-cochain over a different field");
    if (!check_anticommutative(A))
        throw PreconditionError("delta1 requires an anticommutative algebra");
    std::size_t const n = A.dim();
    std::vector<Scalar> values;
    values.reserve(n * n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            Vector r = f.apply(A.product(u, v));
            r = r - multiply_basis_left(A, u, f.column(v));
            r = r - multiply_basis_right(A, f.column(u), v);
            values.insert(values.end(), r.begin(), r.end());
        }
    return Cochain2(MultilinearMap(A.field(), n, 2, std::move(values)));
}

Cochain3 delta2(Algebra const &A, Cochain2 const &phi)
{
    require_algebra_match(A, phi.map());
    if (!check_acaa(A))
        throw PreconditionError("delta2 requires an Acaa algebra");
    std::size_t const n = A.dim();
    FieldSpec const f = A.field();
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vector(f, n, i));
    std::vector<Scalar> values;
    values.reserve(n * n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector r = phi(e[x], A.product(y, z));
                r = r + multiply_basis_left(A, x, phi(e[y], e[z]));
                r = r - phi(e[y], A.product(z, x));
                r = r - multiply_basis_left(A, y, phi(e[z], e[x]));
                values.insert(values.end(), r.begin(), r.end());
            }
    MultilinearMap psi(f, n, 3, std::move(values));
    if (!is_symmetric_first_two(psi))
        throw std::logic_error("delta2 produced a map outside C^3");
    return Cochain3(std::move(psi));
}

MultilinearMap delta3(Algebra const &A, Cochain3 const &psi)
{
    require_algebra_match(A, psi.map());
    if (!check_acaa(A))
        throw PreconditionError("delta3 requires an Acaa algebra");
    std::size_t const n = A.dim();
    FieldSpec const f = A.field();
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vector(f, n, i));
    std::vector<Scalar> values;
    values.reserve(power(n, 5));
    for_each_tuple(n, 4, [&](std::span<std::size_t const> t) {
        auto const &x1 = e[t[0]], &x2 = e[t[1]], &x3 = e[t[2]], &x4 = e[t[3]];
        Vector const b34 = A.product(t[2], t[3]);
        Vector r = psi(x1, x2, b34);
        r = r + psi(x1, b34, x2);
        r = r + psi(x2, b34, x1);
        r = r + multiply_basis_left(A, t[0], psi(x2, x3, x4));
        r = r + multiply_basis_left(A, t[0], psi(x2, x4, x3));
        r = r + multiply_basis_left(A, t[0], psi(x4, x3, x2));
        values.insert(values.end(), r.begin(), r.end());
    });
    return MultilinearMap(f, n, 4, std::move(values));
}

CheckResult check_cyclic_sum(Algebra const &A, Cochain2 const &phi)
{
    if (!check_anticommutative(A))
        throw PreconditionError("cyclic sum check requires an anticommutative algebra");
    require_algebra_match(A, phi.map());
    std::size_t const n = A.dim();
    FieldSpec const f = A.field();
    // Evaluate delta2 directly (no Acaa precondition here).
    auto d2 = [&](std::size_t x, std::size_t y, std::size_t z) {
        Vector const ex = unit_vector(f, n, x), ey = unit_vector(f, n, y), ez = unit_vector(f, n, z);
        Vector r = phi(ex, A.product(y, z));
        r = r + multiply_basis_left(A, x, phi(ey, ez));
        r = r - phi(ey, A.product(z, x));
        return r - multiply_basis_left(A, y, phi(ez, ex));
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector s = d2(x, y, z) + d2(y, z, x) + d2(z, x, y);
                if (!is_zero(s))
                    return CheckResult::fail({{x, y, z}, std::move(s), "cyclic sum of delta2"});
            }
    return CheckResult::ok();
}

GradedAcaa::GradedAcaa(Algebra algebra, std::vector<int> degrees)
    : algebra_(std::move(algebra)), degrees_(std::move(degrees))
{
    std::size_t const n = algebra_.dim();
    if (degrees_.size() != n)
        throw DimensionMismatch("grading needs one degree per basis vector");
    for (int d : degrees_)
        if (d < 1 || d > 3)
            throw PreconditionError("degrees must be 1, 2 or 3");
    if (!check_acaa(algebra_))
        throw PreconditionError("graded algebra must be Acaa");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!algebra_.c(i, j, k).is_zero() && degrees_[k] != degrees_[i] + degrees_[j])
                    throw PreconditionError("product " + algebra_.label(i) + "*" + algebra_.label(j) +
                                            " has a component of the wrong degree on " +
                                            algebra_.label(k));
}

GradedAcaa GradedAcaa::from_free(FreeAcaaAlgebra const &F) { return GradedAcaa(F.algebra(), F.degrees()); }

Matrix g_map(GradedAcaa const &G, std::size_t basis_index)
{
    Algebra const &A = G.algebra();
    if (basis_index >= A.dim())
        throw DimensionMismatch("basis index out of range");
    long const i = G.degrees()[basis_index];
    Matrix g(A.field(), A.dim(), A.dim());
    for (std::size_t e = 0; e < A.dim(); ++e) {
        long const j = G.degrees()[e];
        if (i + j >= 4)
            continue;
        long const coeff = ((i + j) % 2 == 0 ? 1 : -1) * i * j;
        Vector const col = Scalar(A.field(), coeff) * A.product(basis_index, e);
        for (std::size_t r = 0; r < A.dim(); ++r)
            g(r, e) = col[r];
    }
    return g;
}

CheckResult check_gmap_degree_one(GradedAcaa const &G)
{
    Algebra const &A = G.algebra();
    std::size_t const n = A.dim();
    for (std::size_t x = 0; x < n; ++x) {
        Cochain2 const d = delta1(A, g_map(G, x));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (G.degrees()[y] != 1 || G.degrees()[z] != 1)
                    continue;
                std::array<std::size_t, 2> const yz{y, z};
                Vector v = d.map().at(yz);
                if (!is_zero(v))
                    return CheckResult::fail({{x, y, z}, std::move(v), "delta1(g_X) on degree 1"});
            }
    }
    return CheckResult::ok();
}

Cochain2 random_cochain2(Sampler &s, FieldSpec f, std::size_t dim)
{
    std::vector<Scalar> values(dim * dim * dim, Scalar::zero(f));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Scalar const v = s.scalar(f);
                values[(i * dim + j) * dim + k] = v;
                values[(j * dim + i) * dim + k] = -v;
            }
    return Cochain2(MultilinearMap(f, dim, 2, std::move(values)));
}

} // namespace acaa
