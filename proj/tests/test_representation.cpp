#include <doctest.h>

#include "acaa/catalog.hpp"
#include "acaa/error.hpp"
#include "acaa/free_acaa.hpp"
#include "acaa/representation.hpp"
#include "acaa/sampler.hpp"

using namespace acaa;

namespace {
FieldSpec const Q = FieldSpec::rationals();

Matrix elementary(FieldSpec f, std::size_t n, std::size_t r, std::size_t c)
{
    Matrix m(f, n, n);
    m(r, c) = Scalar::one(f);
    return m;
}
} // namespace

TEST_CASE("ad matrices")
{
    auto h = heisenberg3();
    CHECK(ad_matrix(h, unit_vector(Q, 3, 0)) == Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
    CHECK(ad_matrix(h, unit_vector(Q, 3, 1)) == Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 0}, {-1, 0, 0}}));
    auto F = free_acaa(3);
    // ad X1 sends X2 -> X12, X3 -> X13, X23 -> X123
    auto m = ad_matrix(F.algebra(), unit_vector(Q, 7, 0));
    CHECK(rank(m) == 3);
    CHECK(m(3, 1) == Scalar(Q, 1));
    CHECK(m(4, 2) == Scalar(Q, 1));
    CHECK(m(6, 5) == Scalar(Q, 1));
    auto nc = Algebra::from_products(Q, 2, {{0, 1, {{0, 1}}}});
    CHECK_THROWS_AS(ad_matrix(nc, unit_vector(Q, 2, 0)), PreconditionError);
}

TEST_CASE("ad identities on every catalog algebra")
{
    for (auto const &e : catalog_all())
        CHECK_MESSAGE(check_ad_identities(e.algebra), e.name);
    CHECK_THROWS_AS(check_ad_identities(simple_lie3()), PreconditionError);
}

TEST_CASE("ad x is a weight-2 anti-derivation, not weight 1")
{
    Sampler s(4);
    auto F = free_acaa(3);
    auto const &A = F.algebra();
    for (int t = 0; t < 10; ++t) {
        auto x = s.vector(Q, 7);
        CHECK(check_weighted_antiderivation(A, ad_matrix(A, x), 2));
    }
    CHECK_FALSE(check_weighted_antiderivation(A, ad_matrix(A, unit_vector(Q, 7, 0)), 1));
    CHECK_FALSE(check_weighted_antiderivation(A, Matrix::identity(Q, 7), 2));
}

TEST_CASE("adjoint representation is valid and not faithful on h3 and free(3)")
{
    for (auto const &e : catalog_all())
        CHECK_MESSAGE(check_representation(adjoint_representation(e.algebra)), e.name);
    CHECK_FALSE(is_faithful(adjoint_representation(heisenberg3())));
    CHECK_FALSE(is_faithful(adjoint_representation(free_acaa(3).algebra())));
}

TEST_CASE("hand-built representations")
{
    // abelian2 -> strictly upper 3x3 matrices with pairwise zero products
    Representation ok(abelian(2), 3, {elementary(Q, 3, 0, 1), elementary(Q, 3, 0, 2)});
    CHECK(check_representation(ok));
    CHECK(is_faithful(ok));

    Representation bad(abelian(1), 2, {Matrix::identity(Q, 2)});
    auto r = check_representation(bad);
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness()->indices == std::vector<std::size_t>{0});
    CHECK_THROWS(is_faithful(bad));

    // rho[e1,e2] must equal -rho(e1)rho(e2)
    Representation wrong(heisenberg3(), 3, {elementary(Q, 3, 0, 1), elementary(Q, 3, 1, 2), Matrix::zero(Q, 3, 3)});
    CHECK_FALSE(check_representation(wrong));

    CHECK_THROWS_AS(Representation(abelian(2), 3, {elementary(Q, 3, 0, 1)}), DimensionMismatch);
    CHECK_THROWS_AS(Representation(abelian(1), 3, {elementary(Q, 2, 0, 1)}), DimensionMismatch);
    CHECK_THROWS_AS(Representation(abelian(1), 2, {elementary(FieldSpec::prime(3), 2, 0, 1)}), FieldMismatch);
}

TEST_CASE("image is linear in the coordinates")
{
    auto rep = adjoint_representation(heisenberg3());
    Vector x{Scalar(Q, 2), Scalar(Q, -1), Scalar(Q, 5)};
    CHECK(rep.image(x) == ad_matrix(heisenberg3(), x));
}

namespace {
// Brute-force count of square-zero d x d matrices and of admissible pairs.
std::pair<std::uint64_t, std::uint64_t> brute_force_pairs(std::uint64_t p)
{
    auto F = FieldSpec::prime(p);
    std::vector<Matrix> sq;
    std::uint64_t total = 1;
    for (int i = 0; i < 9; ++i)
        total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix m(F, 3, 3);
        auto c = code;
        for (std::size_t i = 0; i < 9; ++i, c /= p)
            m(i / 3, i % 3) = Scalar(F, static_cast<long>(c % p));
        if ((m * m).is_zero())
            sq.push_back(m);
    }
    std::uint64_t pairs = 0;
    for (auto const &x : sq)
        for (auto const &y : sq)
            if ((x * y + y * x).is_zero()) {
                ++pairs;
                CHECK((x * y).is_zero());
            }
    return {sq.size(), pairs};
}
} // namespace

TEST_CASE("h3 faithfulness search exhausts 3x3 matrices over F_3 and F_5")
{
    for (std::uint64_t p : {3u, 5u}) {
        auto res = h3_faithfulness_search(p, 3, 2);
        CHECK(res.exhausted);
        CHECK_FALSE(res.counterexample);
        // rank <= 1 nilpotents: 1 + (p^3 - 1)(p + 1)
        CHECK(res.square_zero == 1 + (p * p * p - 1) * (p + 1));
    }
    auto [sq, pairs] = brute_force_pairs(3);
    auto res = h3_faithfulness_search(3, 3, 1);
    CHECK(res.square_zero == sq);
    CHECK(res.admissible_pairs == pairs);
    CHECK_THROWS_AS(h3_faithfulness_search(7, 3), Error);
    CHECK_THROWS_AS(h3_faithfulness_search(3, 4), PreconditionError);
}

TEST_CASE("representation examples")
{
    auto h = heisenberg3();
    CHECK(ad_matrix(h, unit_vector(Q, 3, 2)).is_zero());
    CHECK(check_ad_identities(h));
    CHECK(check_ad_identities(heisenberg5()));

    auto f = Matrix::identity(Q, 3);
    auto r = check_weighted_antiderivation(h, f, 1);
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness()->indices == std::vector<std::size_t>{0, 1});
    CHECK(r.witness()->residual == Scalar(Q, 3) * unit_vector(Q, 3, 2));

    // rho(e1) = rho(e2) = N with N^2 = 0, rho(e3) = 0
    auto N = elementary(Q, 3, 0, 2);
    Representation rep(h, 3, {N, N, Matrix::zero(Q, 3, 3)});
    CHECK(check_representation(rep));
    CHECK_FALSE(is_faithful(rep));

    Representation zero(abelian(2), 2, {Matrix::zero(Q, 2, 2), Matrix::zero(Q, 2, 2)});
    CHECK(check_representation(zero));
    CHECK_FALSE(is_faithful(zero));
}
