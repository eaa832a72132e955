#pragma once

#include <cstdint>
#include <random>

#include "acaa/linalg.hpp"

namespace acaa {

/// The single deterministic source of pseudo-random inputs (cochains, basis
/// changes, sample elements). mt19937_64 output is fixed by the standard and
/// the reduction to small integers is done here, so a seed yields the same
/// values on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi);
    /// Integer in [-3, 3] as a field element.
    Scalar scalar(FieldSpec f);
    Vector vector(FieldSpec f, std::size_t n);
    Matrix matrix(FieldSpec f, std::size_t rows, std::size_t cols);
    /// Redraws until the matrix is invertible.
    Matrix invertible(FieldSpec f, std::size_t n);

private:
    std::mt19937_64 rng_;
};

} // namespace acaa
