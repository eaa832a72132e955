#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "acaa/algebra.hpp"

namespace acaa {

struct EnumerationResult {
    std::size_t dim;
    std::uint64_t p;
    std::uint64_t candidates;   ///< alternating tensors scanned
    std::uint64_t acaa_count;   ///< of which satisfy the Acaa identity
    std::size_t iso_class_count;
    std::vector<std::uint64_t> orbit_sizes; ///< one per class, in discovery order
};

/// Exhaustive classification over F_p: scans every alternating tensor in
/// dimension dim (2 or 3), keeps the Acaa ones and counts GL(dim,p)-orbits by
/// applying every invertible matrix to an orbit representative.
/// The candidate range is split into `jobs` contiguous chunks.
/// Throws PreconditionError for bad dim/p, SizeGuardError above 10^7 candidates
/// or group elements.
EnumerationResult enumerate_finite(std::size_t dim, std::uint64_t p, unsigned jobs = 1);

/// Candidate encoding used by enumerate_finite: base-p digits, least
/// significant first, digit (pair * dim + k) is c(i,j,k) for the pair-th
/// lexicographic pair i < j.
Algebra alternating_algebra_from_code(std::size_t dim, std::uint64_t p, std::uint64_t code);

/// The enumeration's packed F_p Acaa test for one encoded candidate.
bool packed_is_acaa(std::size_t dim, std::uint64_t p, std::uint64_t code);

} // namespace acaa
