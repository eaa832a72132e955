#include <algorithm>
#include <array>
#include <thread>

#include "acaa/error.hpp"
#include "acaa/representation.hpp"

namespace acaa {

namespace {

constexpr std::size_t kDim = 3;
using Mat3 = std::array<int, kDim * kDim>;

Mat3 mul(Mat3 const &a, Mat3 const &b, int p)
{
    Mat3 r{};
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < kDim; ++k)
                s += a[i * kDim + k] * b[k * kDim + j];
            r[i * kDim + j] = s % p;
        }
    return r;
}

bool is_zero_mat(Mat3 const &m)
{
    return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

Matrix to_matrix(Mat3 const &m, FieldSpec f)
{
    Matrix r(f, kDim, kDim);
    for (std::size_t i = 0; i < kDim * kDim; ++i)
        r(i / kDim, i % kDim) = Scalar(f, m[i]);
    return r;
}

struct Partial {
    std::uint64_t admissible = 0;
    std::optional<std::pair<Mat3, Mat3>> counterexample;
};

} // namespace

H3SearchResult h3_faithfulness_search(std::uint64_t p, std::size_t d, unsigned jobs)
{
    if (d != kDim)
        throw PreconditionError("the h3 search is implemented for 3x3 images only");
    if (p != 3 && p != 5)
        throw SizeGuardError("the h3 search supports p = 3 and p = 5");
    int const ip = static_cast<int>(p);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < kDim * kDim; ++i)
        total *= p;

    // X^2 = 0 first; the pair scan only runs over this much smaller set.
    std::vector<Mat3> square_zero;
    for (std::uint64_t code = 0; code < total; ++code) {
        Mat3 m{};
        std::uint64_t c = code;
        for (auto &v : m) {
            v = static_cast<int>(c % p);
            c /= p;
        }
        if (is_zero_mat(mul(m, m, ip)))
            square_zero.push_back(m);
    }

    jobs = std::max(1u, jobs);
    std::vector<Partial> partial(jobs);
    auto const scan = [&](std::size_t b, std::size_t e, unsigned w) {
        for (std::size_t x = b; x < e; ++x)
            for (auto const &Y : square_zero) {
                Mat3 const xy = mul(square_zero[x], Y, ip);
                Mat3 const yx = mul(Y, square_zero[x], ip);
                bool anticommute = true;
                for (std::size_t i = 0; i < xy.size(); ++i)
                    if ((xy[i] + yx[i]) % ip != 0) {
                        anticommute = false;
                        break;
                    }
                if (!anticommute)
                    continue;
                ++partial[w].admissible;
                if (!is_zero_mat(xy) && !partial[w].counterexample)
                    partial[w].counterexample = {square_zero[x], Y};
            }
    };
    std::size_t const n = square_zero.size();
    if (jobs == 1) {
        scan(0, n, 0);
    } else {
        std::vector<std::thread> workers;
        std::size_t const chunk = (n + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::size_t const b = w * chunk, e = std::min(n, b + chunk);
            if (b >= e)
                break;
            workers.emplace_back(scan, b, e, w);
        }
        for (auto &t : workers)
            t.join();
    }

    H3SearchResult result{p, d, n, 0, true, std::nullopt};
    FieldSpec const f = FieldSpec::prime(p);
    for (auto const &part : partial) {
        result.admissible_pairs += part.admissible;
        if (part.counterexample && !result.counterexample) {
            result.exhausted = false;
            result.counterexample = std::make_pair(to_matrix(part.counterexample->first, f),
                                                   to_matrix(part.counterexample->second, f));
        }
    }
    return result;
}

} // namespace acaa
