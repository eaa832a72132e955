#include "acaa/sampler.hpp"

namespace acaa {

long Sampler::integer(long lo, long hi)
{
    auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Scalar Sampler::scalar(FieldSpec f) { return Scalar(f, integer(-3, 3)); }

Vector Sampler::vector(FieldSpec f, std::size_t n)
{
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(scalar(f));
    return v;
}

Matrix Sampler::matrix(FieldSpec f, std::size_t rows, std::size_t cols)
{
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar(f);
    return m;
}

Matrix Sampler::invertible(FieldSpec f, std::size_t n)
{
    for (;;) {
        Matrix m = matrix(f, n, n);
        if (rank(m) == n)
            return m;
    }
}

} // namespace acaa
