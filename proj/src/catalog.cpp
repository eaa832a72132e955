#include "acaa/catalog.hpp"

#include <array>

#include "acaa/error.hpp"
#include "acaa/free_acaa.hpp"
#include "acaa/identities.hpp"

namespace acaa {

namespace {

FieldSpec const Q = FieldSpec::rationals();

// Skew algebra from 1-based bracket table entries [e_i,e_j] = e_k.
Algebra skew(std::size_t dim, std::vector<std::array<long, 4>> const &table)
{
    std::vector<ProductEntry> entries;
    for (auto const &[i, j, k, c] : table)
        entries.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                           {{static_cast<std::size_t>(k - 1), c}}});
    return Algebra::from_products(Q, dim, entries, Symmetry::Skew);
}

CatalogEntry entry(std::string name, Algebra A, Fingerprint fp, std::string source)
{
    return {name, A.with_name(name), fp, std::move(source)};
}

} // namespace

Algebra abelian(std::size_t dim) { return Algebra::zero(Q, dim).with_name("abelian" + std::to_string(dim)); }

Algebra heisenberg3() { return skew(3, {{1, 2, 3, 1}}).with_name("h3"); }

Algebra heisenberg5() { return skew(5, {{1, 2, 5, 1}, {3, 4, 5, 1}}).with_name("h5"); }

Algebra seven_dim_example()
{
    return skew(7, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}, {1, 6, 7, 1}, {2, 5, 7, -1}, {3, 4, 7, 1}})
        .with_name("ex7");
}

Algebra simple_lie3() { return skew(3, {{1, 2, 3, 1}, {2, 3, 1, 1}, {3, 1, 2, 1}}).with_name("simple3"); }

std::vector<CatalogEntry> catalog(std::size_t dim)
{
    std::string const src = "dim-" + std::to_string(dim) + " classification";
    switch (dim) {
    case 2:
        return {entry("abelian2", abelian(2), {2, 0, 2, 0}, src)};
    case 3:
        return {entry("abelian3", abelian(3), {3, 0, 3, 0}, src),
                entry("h3", heisenberg3(), {3, 1, 1, 0}, src)};
    case 4:
        return {entry("abelian4", abelian(4), {4, 0, 4, 0}, src),
                entry("h3+K", direct_sum(heisenberg3(), abelian(1)), {4, 1, 2, 0}, src)};
    case 5:
        return {entry("abelian5", abelian(5), {5, 0, 5, 0}, src),
                entry("h3+K2", direct_sum(heisenberg3(), abelian(2)), {5, 1, 3, 0}, src),
                entry("L5", skew(5, {{1, 2, 3, 1}, {1, 4, 5, 1}}), {5, 2, 2, 0}, src),
                entry("h5", heisenberg5(), {5, 1, 1, 0}, src)};
    default:
        throw PreconditionError("the classification lists cover dimensions 2 to 5, not " +
                                std::to_string(dim));
    }
}

std::vector<CatalogEntry> catalog_extras()
{
    return {entry("free3", free_acaa(3).algebra(), {7, 4, 1, 1}, "free Acaa algebra on 3 generators"),
            entry("n6", skew(6, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}}), {6, 3, 3, 0},
                  "free 2-step nilpotent Lie algebra on 3 generators")};
}

std::vector<CatalogEntry> catalog_all()
{
    std::vector<CatalogEntry> all;
    for (std::size_t d = 2; d <= 5; ++d)
        for (auto &e : catalog(d))
            all.push_back(std::move(e));
    for (auto &e : catalog_extras())
        all.push_back(std::move(e));
    return all;
}

std::optional<CatalogEntry> catalog_lookup(std::string_view name)
{
    for (auto &e : catalog_all())
        if (e.name == name)
            return std::move(e);
    return std::nullopt;
}

std::string recognize(Algebra const &A)
{
    if (!A.field().is_rational())
        throw PreconditionError("recognize works over Q only");
    if (!check_acaa(A))
        throw PreconditionError("recognize requires an Acaa algebra");
    if (A.dim() < 2 || A.dim() > 5)
        return "unknown";
    Fingerprint const fp = fingerprint(A);
    for (auto const &e : catalog(A.dim()))
        if (e.expected == fp)
            return e.name;
    return "unknown";
}

} // namespace acaa
