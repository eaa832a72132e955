#include <doctest.h>

#include <json.hpp>

#include "acaa/algebra.hpp"
#include "acaa/algebra_io.hpp"
#include "acaa/catalog.hpp"
#include "acaa/error.hpp"
#include "acaa/identities.hpp"
#include "acaa/sampler.hpp"

using namespace acaa;

namespace {
FieldSpec const Q = FieldSpec::rationals();

Algebra random_algebra(Sampler &s, FieldSpec f, std::size_t d)
{
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < d * d * d; ++i)
        t.push_back(Scalar(f, s.integer(-2, 2)));
    return Algebra(f, d, t);
}

Algebra random_symmetric(Sampler &s, FieldSpec f, std::size_t d)
{
    std::vector<Scalar> t(d * d * d, Scalar::zero(f));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar v(f, s.integer(-2, 2));
                t[(i * d + j) * d + k] = v;
                t[(j * d + i) * d + k] = v;
            }
    return Algebra(f, d, t);
}

nlohmann::json parse(char const *text) { return nlohmann::json::parse(text); }
} // namespace

TEST_CASE("structure constants and products")
{
    auto h = heisenberg3();
    CHECK(h.dim() == 3);
    CHECK(h.c(0, 1, 2) == Scalar(Q, 1));
    CHECK(h.c(1, 0, 2) == Scalar(Q, -1));
    auto x = unit_vector(Q, 3, 0) + unit_vector(Q, 3, 2);
    auto y = Scalar(Q, 2) * unit_vector(Q, 3, 1);
    CHECK(format_element(h, multiply(h, x, y)) == "2*e3");
    CHECK(format_element(h, zero_vector(Q, 3)) == "0");
    CHECK_THROWS_AS(multiply(h, x, zero_vector(Q, 2)), DimensionMismatch);
    CHECK_THROWS_AS(multiply(h, x, zero_vector(FieldSpec::prime(3), 3)), FieldMismatch);
}

TEST_CASE("skew hint is validated")
{
    std::vector<Scalar> t(8, Scalar::zero(Q));
    t[(0 * 2 + 1) * 2 + 0] = Scalar(Q, 1); // e1 e2 = e1 but e2 e1 = 0
    CHECK_THROWS_AS(Algebra(Q, 2, t, Symmetry::Skew), PreconditionError);
    CHECK_NOTHROW(Algebra(Q, 2, t, Symmetry::None));
}

TEST_CASE("identity checks on fixtures")
{
    auto h = heisenberg3();
    CHECK(check_anticommutative(h));
    CHECK(check_acaa(h));
    CHECK(check_jacobi(h));
    CHECK(check_antiassociative(h));
    CHECK(check_cyclic_triple(h));

    auto sl = simple_lie3();
    CHECK(check_jacobi(sl));
    auto r = check_acaa(sl);
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness()->indices == std::vector<std::size_t>{0, 0, 1});
    CHECK(format_element(sl, r.witness()->residual) == "-e2");
    CHECK_FALSE(check_cyclic_triple(sl));

    // e1 e2 = e1, e2 e1 = 0 is not anticommutative
    auto nc = Algebra::from_products(Q, 2, {{0, 1, {{0, 1}}}});
    auto w = check_anticommutative(nc);
    REQUIRE_FALSE(w.holds());
    CHECK(w.witness()->indices == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(check_acaa(nc), PreconditionError);
    CHECK_THROWS_AS(check_acaa(Algebra::zero(FieldSpec::prime(2), 2)), PreconditionError);
}

TEST_CASE("custom quadratic identity with the Acaa coefficients agrees with check_acaa")
{
    for (auto const &e : catalog_all())
        CHECK(check_quadratic_identity(e.algebra, QuadIdentityCoeffs::from_ints(Q, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0})));
    CHECK_FALSE(check_quadratic_identity(simple_lie3(), QuadIdentityCoeffs::acaa(Q)));
    // Jacobi in the same layout
    CHECK(check_quadratic_identity(simple_lie3(), QuadIdentityCoeffs::jacobi(Q)));
    auto v = quadratic_identity_value(seven_dim_example(), QuadIdentityCoeffs::jacobi(Q), 0, 1, 2);
    CHECK(format_element(seven_dim_example(), v) == "3*e7");
}

TEST_CASE("polarization recombines to twice the product")
{
    Sampler s(5);
    for (int t = 0; t < 10; ++t) {
        auto A = random_algebra(s, Q, 3);
        auto p = polarize(A);
        CHECK(check_anticommutative(p.minus));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) {
                    CHECK(p.minus.c(i, j, k) + p.plus.c(i, j, k) == Scalar(Q, 2) * A.c(i, j, k));
                    CHECK(p.plus.c(i, j, k) == p.plus.c(j, i, k));
                }
        CHECK(p.minus == commutator_algebra(A));
    }
}

TEST_CASE("Acaa-admissible iff the commutator algebra is Acaa")
{
    Sampler s(17);
    int positives = 0;
    for (int t = 0; t < 30; ++t) {
        Algebra B = random_algebra(s, Q, 3);
        if (t % 2 == 0) {
            // half an Acaa bracket plus a symmetric part: commutator is the bracket
            auto A = t % 4 == 0 ? heisenberg3() : abelian(3);
            auto S = random_symmetric(s, Q, 3);
            auto tensor = scaled(A, Scalar::parse(Q, "1/2")).tensor();
            for (std::size_t i = 0; i < tensor.size(); ++i)
                tensor[i] += S.tensor()[i];
            B = Algebra(Q, 3, tensor);
        }
        bool adm = check_acaa_admissible(B).holds();
        CHECK(adm == check_acaa(commutator_algebra(B)).holds());
        positives += adm;
    }
    CHECK(positives >= 15);
}

TEST_CASE("fingerprints of fixtures")
{
    CHECK(to_string(fingerprint(heisenberg3())) == "(3,1,1,0)");
    CHECK(to_string(fingerprint(heisenberg5())) == "(5,1,1,0)");
    CHECK(to_string(fingerprint(seven_dim_example())) == "(7,4,1,1)");
    CHECK(to_string(fingerprint(direct_sum(heisenberg3(), abelian(2)))) == "(5,1,3,0)");
    CHECK(derived_subspace(heisenberg3()).dim() == 1);
    CHECK(annihilator(simple_lie3()).dim() == 0);
    CHECK(cube_subspace(simple_lie3()).dim() == 3);
}

TEST_CASE("property: fingerprint is invariant under change of basis")
{
    Sampler s(23);
    for (auto const &e : catalog_all())
        for (int t = 0; t < 3; ++t) {
            auto B = change_of_basis(e.algebra, s.invertible(Q, e.algebra.dim()));
            CHECK(fingerprint(B) == e.expected);
            CHECK(check_acaa(B));
        }
    CHECK_THROWS_AS(change_of_basis(heisenberg3(), Matrix::zero(Q, 3, 3)), PreconditionError);
}

TEST_CASE("change of basis by a permutation relabels the tensor")
{
    // swap e1 and e2: [e2,e1] = e3, so the new [f1,f2] = -f3
    auto P = Matrix::from_ints(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    auto B = change_of_basis(heisenberg3(), P);
    CHECK(B.c(0, 1, 2) == Scalar(Q, -1));
}

TEST_CASE("algebra JSON round trip")
{
    auto j = parse(R"({"name":"h3","field":{"type":"Q"},"dim":3,"basis":["x","y","z"],"symmetry":"skew",
                       "products":[{"left":0,"right":1,"value":{"2":"1/2"}}]})");
    auto A = algebra_from_json(j);
    CHECK(A.name() == "h3");
    CHECK(A.label(2) == "z");
    CHECK(A.c(1, 0, 2).to_string() == "-1/2");
    auto back = algebra_to_json(A);
    CHECK(algebra_from_json(nlohmann::json::parse(back.dump())) == A);
    CHECK(back["products"].size() == 1);

    auto F = parse(R"({"field":{"type":"Fp","p":5},"dim":2,"symmetry":"none",
                       "products":[{"left":1,"right":0,"value":{"0":"3"}}]})");
    auto B = algebra_from_json(F);
    CHECK(B.field() == FieldSpec::prime(5));
    CHECK(B.c(1, 0, 0).residue() == 3);
    CHECK(algebra_from_json(nlohmann::json::parse(algebra_to_json(B).dump())) == B);
}

TEST_CASE("malformed algebra JSON names the location")
{
    auto msg = [](char const *text) {
        try {
            algebra_from_json(nlohmann::json::parse(text));
        } catch (ParseError const &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(msg(R"({"field":{"type":"R"},"dim":2,"symmetry":"skew","products":[]})").find("field.type") !=
          std::string::npos);
    CHECK(msg(R"({"field":{"type":"Fp","p":4},"dim":2,"symmetry":"skew","products":[]})").find("field.p") !=
          std::string::npos);
    CHECK(msg(R"({"field":{"type":"Q"},"dim":2,"symmetry":"skew",
                  "products":[{"left":1,"right":0,"value":{"0":"1"}}]})")
              .find("products[0]") != std::string::npos);
    CHECK(msg(R"({"field":{"type":"Q"},"dim":2,"symmetry":"none",
                  "products":[{"left":0,"right":5,"value":{"0":"1"}}]})")
              .find("products[0].right") != std::string::npos);
    CHECK(msg(R"({"field":{"type":"Q"},"dim":2,"symmetry":"none",
                  "products":[{"left":0,"right":1,"value":{"0":"1/0"}}]})")
              .find("products[0]") != std::string::npos);
    CHECK(msg(R"({"field":{"type":"Q"},"dim":2,"symmetry":"none",
                  "products":[{"left":0,"right":1,"value":{"0":"1"}},{"left":0,"right":1,"value":{"1":"1"}}]})")
              .find("products[1]") != std::string::npos);
    CHECK(msg(R"({"field":{"type":"Q"},"dim":2,"symmetry":"none","products":[]})") == "no error");
    CHECK(msg(R"({"field":{"type":"Q"},"symmetry":"none","products":[]})") != "no error");
}

namespace {
// 2x2 matrices on E11, E12, E21, E22 (or the upper-triangular part E11, E12, E22).
Algebra matrix_algebra(bool upper)
{
    std::vector<std::pair<int, int>> units = upper ? std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}}
                                                   : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    std::size_t d = units.size();
    std::vector<ProductEntry> entries;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (units[a].second == units[b].first) {
                std::pair<int, int> prod{units[a].first, units[b].second};
                for (std::size_t k = 0; k < d; ++k)
                    if (units[k] == prod)
                        entries.push_back({a, b, {{k, 1}}});
            }
    return Algebra::from_products(Q, d, entries);
}
} // namespace

TEST_CASE("anticommutativity witness at a square")
{
    auto A = Algebra::from_products(Q, 2, {{0, 0, {{1, 1}}}});
    auto r = check_anticommutative(A);
    REQUIRE_FALSE(r.holds());
    CHECK(r.witness()->indices == std::vector<std::size_t>{0, 0});
    CHECK(check_anticommutative(seven_dim_example()));
}

TEST_CASE("polarization examples")
{
    auto sq = Algebra::from_products(Q, 2, {{0, 0, {{1, 1}}}});
    auto p = polarize(sq);
    CHECK(p.minus == Algebra::zero(Q, 2));
    CHECK(p.plus.c(0, 0, 1) == Scalar(Q, 2));
    auto h = polarize(heisenberg3());
    CHECK(h.minus == scaled(heisenberg3(), Scalar(Q, 2)));
    CHECK(h.plus == Algebra::zero(Q, 3, Symmetry::None));
}

TEST_CASE("rho, rho-associativity and admissibility examples")
{
    auto U = matrix_algebra(true), M = matrix_algebra(false);
    // commutative algebra: rho vanishes, every check holds
    auto C = polarize(U).plus;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(is_zero(rho(C, unit_vector(Q, 3, i), unit_vector(Q, 3, j), unit_vector(Q, 3, k))));
    CHECK(check_rho_associative(C));
    CHECK(check_acaa_admissible(C));
    CHECK(check_rho_associative(heisenberg3()));
    CHECK_FALSE(check_rho_associative(U));

    CHECK(check_acaa_admissible(heisenberg3()));
    CHECK(commutator_algebra(heisenberg3()) == scaled(heisenberg3(), Scalar(Q, 2)));
    CHECK_FALSE(check_acaa_admissible(M));
    CHECK(commutator_algebra(C) == Algebra::zero(Q, 3));

    // [E11,E12] = E12, [E12,E22] = E12, [E11,E22] = 0
    auto L = commutator_algebra(U);
    CHECK(format_element(L, L.product(0, 1)) == "e2");
    CHECK(format_element(L, L.product(1, 2)) == "e2");
    CHECK(format_element(L, L.product(0, 2)) == "0");
}

TEST_CASE("direct sums")
{
    CHECK(recognize(direct_sum(heisenberg3(), abelian(1))) == "h3+K");
    CHECK(recognize(direct_sum(heisenberg3(), abelian(2))) == "h3+K2");
    CHECK(direct_sum(abelian(2), abelian(3)) == abelian(5));
    CHECK(direct_sum(heisenberg3(), Algebra::zero(Q, 0)) == heisenberg3());
    CHECK_THROWS_AS(direct_sum(heisenberg3(), Algebra::zero(FieldSpec::prime(3), 1)), FieldMismatch);
}
