#include "acaa/operad.hpp"

#include "acaa/error.hpp"
#include "acaa/series.hpp"

namespace acaa {

namespace {

FieldSpec const Q = FieldSpec::rationals();
constexpr std::size_t kFull = 12;

std::size_t perm_index(std::array<int, 3> const &p)
{
    auto const &all = sigma3();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == p)
            return i;
    throw std::logic_error("not a permutation of {0,1,2}");
}

std::string var(int i) { return "x" + std::to_string(i + 1); }

} // namespace

std::array<std::array<int, 3>, 6> const &sigma3()
{
    static std::array<std::array<int, 3>, 6> const perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return perms;
}

int signature(std::array<int, 3> const &p)
{
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

MonomialSpace MonomialSpace::full12()
{
    std::vector<std::string> labels;
    for (auto const &s : sigma3())
        labels.push_back("(" + var(s[0]) + var(s[1]) + ")" + var(s[2]));
    for (auto const &s : sigma3())
        labels.push_back(var(s[0]) + "(" + var(s[1]) + var(s[2]) + ")");
    return {Variant::Full12, std::move(labels)};
}

MonomialSpace MonomialSpace::skew3()
{
    return {Variant::Skew3, {"(x1x2)x3", "(x2x3)x1", "(x3x1)x2"}};
}

Matrix pairing_matrix()
{
    Matrix m(Q, kFull, kFull);
    auto const &perms = sigma3();
    for (std::size_t s = 0; s < perms.size(); ++s) {
        long const eps = signature(perms[s]);
        m(s, s) = Scalar(Q, eps);
        m(6 + s, 6 + s) = Scalar(Q, -eps);
    }
    return m;
}

Subspace orthogonal_complement(Subspace const &V)
{
    if (V.ambient_dim() != kFull)
        throw DimensionMismatch("orthogonal complement is defined on the 12-dimensional monomial space");
    if (!V.field().is_rational())
        throw FieldMismatch("the pairing is defined over Q");
    if (V.dim() == 0) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < kFull; ++i)
            all.push_back(unit_vector(Q, kFull, i));
        return span(Q, kFull, all);
    }
    // <w, v> = w^T M v; rows v^T M^T = (M v)^T, kernel of that system.
    Matrix const basis(Q, V.basis());
    return rank_kernel(basis * pairing_matrix()).kernel;
}

Vector act_sigma3(std::array<int, 3> const &tau, Vector const &v)
{
    if (v.size() != kFull)
        throw DimensionMismatch("Sigma_3 acts on the 12-dimensional monomial space");
    Vector out = zero_vector(Q, kFull);
    auto const &perms = sigma3();
    for (std::size_t s = 0; s < perms.size(); ++s) {
        std::array<int, 3> const image{tau[perms[s][0]], tau[perms[s][1]], tau[perms[s][2]]};
        std::size_t const t = perm_index(image);
        out[t] += v[s];
        out[6 + t] += v[6 + s];
    }
    return out;
}

Subspace sigma3_orbit_span(Vector const &v)
{
    std::vector<Vector> orbit;
    for (auto const &tau : sigma3())
        orbit.push_back(act_sigma3(tau, v));
    return span(Q, kFull, orbit);
}

Vector cyclic_relation_full12(long sign)
{
    Vector v = zero_vector(Q, kFull);
    v[perm_index({0, 1, 2})] = Scalar(Q, 1);
    v[perm_index({1, 2, 0})] = Scalar(Q, sign);
    return v;
}

Matrix cyclic_relation_matrix(FieldSpec f) { return Matrix::from_ints(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }

DualNilpotency dual_relations_force_nilpotency(std::size_t dims)
{
    std::size_t const rq = rank(cyclic_relation_matrix(Q));
    std::size_t const r2 = rank(cyclic_relation_matrix(FieldSpec::prime(2)));
    return {rq, r2, rq == 3, rq == 3 ? acaa::dual_dims(dims) : std::vector<std::uint64_t>{}};
}

} // namespace acaa
