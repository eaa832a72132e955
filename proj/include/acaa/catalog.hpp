#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acaa/algebra.hpp"

namespace acaa {

struct CatalogEntry {
    std::string name;
    Algebra algebra;
    Fingerprint expected;
    std::string source; ///< where the algebra comes from, e.g. "dim-5 classification"
};

/// Complete list of Acaa algebras of dimension 2..5 up to isomorphism.
/// Throws PreconditionError for other dimensions.
std::vector<CatalogEntry> catalog(std::size_t dim);

/// Named Acaa algebras outside the classification lists: free3 and n6.
std::vector<CatalogEntry> catalog_extras();

/// catalog(2..5) followed by the extras.
std::vector<CatalogEntry> catalog_all();

std::optional<CatalogEntry> catalog_lookup(std::string_view name);

// Reference algebras used as fixtures.
Algebra heisenberg3();
Algebra heisenberg5();
Algebra abelian(std::size_t dim);
/// The 7-dimensional anticommutative algebra with
/// [e1,e2]=e4, [e1,e3]=e5, [e2,e3]=e6, [e1,e6]=-[e2,e5]=[e3,e4]=e7.
Algebra seven_dim_example();
/// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; a Lie algebra that is not Acaa.
Algebra simple_lie3();

/// Name of the catalog entry with the same fingerprint, or "unknown".
/// Requires an Acaa algebra over Q; dimensions outside 2..5 give "unknown".
std::string recognize(Algebra const &A);

} // namespace acaa
