#include <doctest.h>

#include "acaa/error.hpp"
#include "acaa/operad.hpp"
#include "acaa/sampler.hpp"
#include "acaa/series.hpp"

using namespace acaa;

namespace {
FieldSpec const Q = FieldSpec::rationals();

using Coeffs = std::vector<mpq_class>; // index = power of t, constant term included

Coeffs mul(Coeffs const &a, Coeffs const &b, std::size_t n)
{
    Coeffs c(n, 0);
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// Lagrange inversion: [t^n] f^{-1} = (1/n) [w^{n-1}] (w / f(w))^n.
std::vector<mpq_class> lagrange_inverse(std::vector<mpq_class> const &f, std::size_t order)
{
    std::size_t n = order;
    Coeffs q(f.begin(), f.end()); // f(w)/w
    q.resize(n, 0);
    Coeffs recip(n, 0); // 1 / q
    recip[0] = 1 / q[0];
    for (std::size_t k = 1; k < n; ++k) {
        mpq_class s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += q[j] * recip[k - j];
        recip[k] = -s / q[0];
    }
    std::vector<mpq_class> out;
    Coeffs power{1};
    for (std::size_t m = 1; m <= order; ++m) {
        power = mul(power, recip, n);
        out.push_back(power[m - 1] / m);
    }
    return out;
}

std::vector<std::string> strs(TruncatedSeries const &s) { return s.coeff_strings(); }
} // namespace

TEST_CASE("minimal model series coefficients")
{
    auto g = TruncatedSeries::from_strings(6, {"-1", "1/2", "-1/6"});
    auto u = compositional_inverse(g);
    CHECK(strs(u) == std::vector<std::string>{"-1", "1/2", "-1/3", "5/24", "-1/12", "-7/144"});
    CHECK(minimal_model_series(6) == u);
    CHECK(compose(g, u) == TruncatedSeries::identity(6));
    CHECK(strs(minimal_model_series(6, MinimalModelConvention::OppositeSign)) ==
          std::vector<std::string>{"1", "-1/2", "1/3", "-5/24", "1/12", "7/144"});
    CHECK(u.to_string() == "-t + 1/2*t^2 - 1/3*t^3 + 5/24*t^4 - 1/12*t^5 - 7/144*t^6 + O(t^7)");
}

TEST_CASE("compositional inverse matches Lagrange inversion")
{
    CHECK(lagrange_inverse({-1, mpq_class(1, 2), mpq_class(-1, 6)}, 6) ==
          compositional_inverse(TruncatedSeries::from_strings(6, {"-1", "1/2", "-1/6"})).coeffs());
    Sampler s(77);
    for (int t = 0; t < 20; ++t) {
        std::vector<mpq_class> c;
        for (int i = 0; i < 8; ++i)
            c.push_back(mpq_class(s.integer(-4, 4), s.integer(1, 3)));
        for (auto &x : c)
            x.canonicalize();
        if (c[0] == 0)
            c[0] = 1;
        TruncatedSeries f(8, c);
        auto inv = compositional_inverse(f);
        CHECK(inv.coeffs() == lagrange_inverse(c, 8));
        CHECK(compose(inv, f) == TruncatedSeries::identity(8));
    }
    CHECK_THROWS_AS(compositional_inverse(TruncatedSeries::from_strings(4, {"0", "1"})), PreconditionError);
}

TEST_CASE("series arithmetic")
{
    auto a = TruncatedSeries::from_strings(4, {"1", "2"});
    auto b = TruncatedSeries::from_strings(3, {"0", "1", "1"});
    CHECK((a + b).order() == 3);
    CHECK(strs(a + b) == std::vector<std::string>{"1", "3", "1"});
    CHECK(strs(a * a) == std::vector<std::string>{"0", "1", "4", "4"});
    CHECK(strs(a.negate_argument()) == std::vector<std::string>{"-1", "2", "0", "0"});
    CHECK(strs(mpq_class(1, 2) * a) == std::vector<std::string>{"1/2", "1", "0", "0"});
    CHECK((a - a).is_zero());
    CHECK(a.coeff(0) == 0);
    CHECK(a.coeff(9) == 0);
    CHECK(TruncatedSeries::from_strings(2, {"0", "0"}).to_string() == "0 + O(t^3)");
}

TEST_CASE("generating series of the Acaa operad and its dual")
{
    CHECK(acaa_dims(5) == std::vector<std::uint64_t>{1, 1, 1, 0, 0});
    CHECK(dual_dims(5) == std::vector<std::uint64_t>{1, 1, 0, 0, 0});
    auto d = acaa_dims(6);
    CHECK(strs(generating_series(d, 6)) == std::vector<std::string>{"-1", "1/2", "-1/6", "0", "0", "0"});
}

TEST_CASE("Koszul residual")
{
    auto gA = generating_series(acaa_dims(6), 6);
    auto gD = generating_series(dual_dims(6), 6);
    auto r = koszul_residual(gA, gD, 6);
    CHECK_FALSE(r.is_zero());
    CHECK(r.coeff(1) == 0);
    CHECK(r.coeff(2) == 1);
    CHECK(r.coeff(3) == mpq_class(2, 3));
    CHECK(koszul_residual(gA, gD, 6, true).coeff(2) == 1);

    // gD(-gD(-t)) - t with gD = -t + t^2/2 expands to t^2 + t^3/2 + t^4/8
    CHECK(strs(koszul_residual(gD, gD, 5)) == std::vector<std::string>{"0", "1", "1/2", "1/8", "0"});

    // a pair built to satisfy the equation has zero residual
    auto gP = TruncatedSeries::from_strings(7, {"-1", "3/2", "-2/5", "1"});
    auto dual = compositional_inverse(-gP.negate_argument());
    CHECK(koszul_residual(gP, dual, 7).is_zero());
    CHECK_THROWS_AS(koszul_residual(TruncatedSeries::identity(4), gD, 4), PreconditionError);
}

TEST_CASE("pairing matrix is the signed diagonal")
{
    auto P = pairing_matrix();
    long diag[] = {1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1};
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            CHECK(P(i, j) == Scalar(Q, i == j ? diag[i] : 0));
    CHECK(signature(sigma3()[3]) == 1); // 120 is a 3-cycle
    CHECK(MonomialSpace::full12().size() == 12);
    CHECK(MonomialSpace::full12().labels()[0] == "(x1x2)x3");
    CHECK(MonomialSpace::full12().labels()[6] == "x1(x2x3)");
    CHECK(MonomialSpace::skew3().size() == 3);
}

TEST_CASE("orthogonal complements")
{
    CHECK(orthogonal_complement(Subspace(Q, 12)).dim() == 12);
    std::vector<Vector> all;
    for (std::size_t i = 0; i < 12; ++i)
        all.push_back(unit_vector(Q, 12, i));
    CHECK(orthogonal_complement(span(Q, 12, all)).dim() == 0);
    Sampler s(3);
    for (int t = 0; t < 10; ++t) {
        std::vector<Vector> vs;
        for (long k = 0; k < s.integer(1, 6); ++k)
            vs.push_back(s.vector(Q, 12));
        auto V = span(Q, 12, vs);
        auto W = orthogonal_complement(V);
        CHECK(V.dim() + W.dim() == 12);
        CHECK(orthogonal_complement(W) == V);
    }
    CHECK_THROWS_AS(orthogonal_complement(Subspace(Q, 3)), DimensionMismatch);
}

TEST_CASE("cyclic relation and its orbit")
{
    auto r = cyclic_relation_full12(-1), p = cyclic_relation_full12(1);
    CHECK(r[0] == Scalar(Q, 1));
    CHECK(r[3] == Scalar(Q, -1)); // (x2x3)x1 has permutation 231
    auto P = pairing_matrix();
    Scalar pairing = Scalar::zero(Q);
    for (std::size_t i = 0; i < 12; ++i)
        pairing += r[i] * P(i, i) * p[i];
    CHECK(pairing.is_zero());

    auto R = sigma3_orbit_span(r);
    CHECK(R.dim() == 4);
    CHECK(orthogonal_complement(R).dim() == 8);
    // the plus relation pairs to zero with r but not with its whole orbit
    CHECK_FALSE(orthogonal_complement(R).contains(p));
    CHECK(act_sigma3(sigma3()[0], r) == r);
}

TEST_CASE("dual relations force nilpotency over Q but not over F_2")
{
    CHECK(rank(cyclic_relation_matrix(Q)) == 3);
    CHECK(rank(cyclic_relation_matrix(FieldSpec::prime(2))) == 2);
    auto d = dual_relations_force_nilpotency();
    CHECK(d.rank_over_q == 3);
    CHECK(d.rank_over_f2 == 2);
    CHECK(d.forces_nilpotency);
    CHECK(d.dual_dims == std::vector<std::uint64_t>{1, 1, 0, 0, 0, 0});
}
