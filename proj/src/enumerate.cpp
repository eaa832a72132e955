#include "acaa/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

#include "acaa/error.hpp"

namespace acaa {

namespace {

constexpr std::uint64_t kSizeGuard = 10'000'000;
constexpr std::size_t kMaxDim = 3;

using Tensor = std::array<int, kMaxDim * kMaxDim * kMaxDim>;
using Mat = std::array<int, kMaxDim * kMaxDim>;

struct Params {
    std::size_t d;
    int p;
    std::size_t pairs;
    std::uint64_t candidates;

    int &at(Tensor &t, std::size_t i, std::size_t j, std::size_t k) const { return t[(i * d + j) * d + k]; }
    int at(Tensor const &t, std::size_t i, std::size_t j, std::size_t k) const
    {
        return t[(i * d + j) * d + k];
    }
};

std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e--) {
        if (r > kSizeGuard * 1000)
            return r; // large enough to trip the guard
        r *= b;
    }
    return r;
}

int mod(long v, int p)
{
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

Tensor decode(Params const &P, std::uint64_t code)
{
    Tensor t{};
    std::size_t pair = 0;
    for (std::size_t i = 0; i < P.d; ++i)
        for (std::size_t j = i + 1; j < P.d; ++j, ++pair)
            for (std::size_t k = 0; k < P.d; ++k) {
                int const v = static_cast<int>(code % P.p);
                code /= P.p;
                P.at(t, i, j, k) = v;
                P.at(t, j, i, k) = mod(-v, P.p);
            }
    return t;
}

std::uint64_t encode(Params const &P, Tensor const &t)
{
    std::uint64_t code = 0, place = 1;
    for (std::size_t i = 0; i < P.d; ++i)
        for (std::size_t j = i + 1; j < P.d; ++j)
            for (std::size_t k = 0; k < P.d; ++k) {
                code += place * static_cast<std::uint64_t>(P.at(t, i, j, k));
                place *= P.p;
            }
    return code;
}

// [e_i,[e_j,e_k]] + [e_k,[e_j,e_i]] = 0 for all triples
bool is_acaa(Params const &P, Tensor const &t)
{
    std::size_t const d = P.d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t out = 0; out < d; ++out) {
                    long s = 0;
                    for (std::size_t m = 0; m < d; ++m)
                        s += static_cast<long>(P.at(t, j, k, m)) * P.at(t, i, m, out) +
                             static_cast<long>(P.at(t, j, i, m)) * P.at(t, k, m, out);
                    if (s % P.p != 0)
                        return false;
                }
    return true;
}

int determinant(Params const &P, Mat const &m)
{
    if (P.d == 2)
        return mod(static_cast<long>(m[0]) * m[3] - static_cast<long>(m[1]) * m[2], P.p);
    long const det = static_cast<long>(m[0]) * (m[4] * m[8] - m[5] * m[7]) -
                     static_cast<long>(m[1]) * (m[3] * m[8] - m[5] * m[6]) +
                     static_cast<long>(m[2]) * (m[3] * m[7] - m[4] * m[6]);
    return mod(det, P.p);
}

int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    throw std::logic_error("no inverse mod p");
}

// Inverse through the adjugate; m must be invertible.
Mat invert(Params const &P, Mat const &m, int det)
{
    Mat r{};
    int const di = inverse_mod(det, P.p);
    if (P.d == 2) {
        r[0] = mod(static_cast<long>(m[3]) * di, P.p);
        r[1] = mod(-static_cast<long>(m[1]) * di, P.p);
        r[2] = mod(-static_cast<long>(m[2]) * di, P.p);
        r[3] = mod(static_cast<long>(m[0]) * di, P.p);
        return r;
    }
    auto const cof = [&](int r0, int r1, int c0, int c1) {
        return static_cast<long>(m[r0 * 3 + c0]) * m[r1 * 3 + c1] -
               static_cast<long>(m[r0 * 3 + c1]) * m[r1 * 3 + c0];
    };
    // adj(m)(i,j) = cofactor(j,i)
    r[0] = mod(cof(1, 2, 1, 2) * di, P.p);
    r[1] = mod(-cof(0, 2, 1, 2) * di, P.p);
    r[2] = mod(cof(0, 1, 1, 2) * di, P.p);
    r[3] = mod(-cof(1, 2, 0, 2) * di, P.p);
    r[4] = mod(cof(0, 2, 0, 2) * di, P.p);
    r[5] = mod(-cof(0, 1, 0, 2) * di, P.p);
    r[6] = mod(cof(1, 2, 0, 1) * di, P.p);
    r[7] = mod(-cof(0, 2, 0, 1) * di, P.p);
    r[8] = mod(cof(0, 1, 0, 1) * di, P.p);
    return r;
}

// Structure tensor in the basis f_a = sum_i g(i,a) e_i.
Tensor act(Params const &P, Tensor const &t, Mat const &g, Mat const &ginv)
{
    std::size_t const d = P.d;
    Tensor out{};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            std::array<long, kMaxDim> v{};
            for (std::size_t i = 0; i < d; ++i) {
                long const gi = g[i * d + a];
                if (!gi)
                    continue;
                for (std::size_t j = 0; j < d; ++j) {
                    long const w = gi * g[j * d + b];
                    if (!w)
                        continue;
                    for (std::size_t k = 0; k < d; ++k)
                        v[k] += w * P.at(t, i, j, k);
                }
            }
            for (std::size_t k = 0; k < d; ++k) {
                long s = 0;
                for (std::size_t m = 0; m < d; ++m)
                    s += ginv[k * d + m] * (v[m] % P.p);
                P.at(out, a, b, k) = mod(s, P.p);
            }
        }
    return out;
}

Params make_params(std::size_t dim, std::uint64_t p)
{
    if (dim < 2 || dim > kMaxDim)
        throw PreconditionError("finite enumeration supports dimension 2 or 3, not " + std::to_string(dim));
    if (p == 2 || !is_prime(p))
        throw PreconditionError("finite enumeration needs an odd prime, got " + std::to_string(p));
    std::size_t const pairs = dim * (dim - 1) / 2;
    std::uint64_t const candidates = ipow(p, pairs * dim);
    if (candidates > kSizeGuard)
        throw SizeGuardError(std::to_string(p) + "^" + std::to_string(pairs * dim) +
                             " candidates exceed the limit of 10^7");
    if (ipow(p, dim * dim) > kSizeGuard)
        throw SizeGuardError("GL(" + std::to_string(dim) + "," + std::to_string(p) +
                             ") scan exceeds the limit of 10^7 matrices");
    return {dim, static_cast<int>(p), pairs, candidates};
}

// Runs fn(begin, end, worker) over [0, total) split into contiguous chunks.
template <class F> void parallel_chunks(std::uint64_t total, unsigned jobs, F &&fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < jobs) {
        fn(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::thread> workers;
    std::uint64_t const chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        std::uint64_t const b = w * chunk, e = std::min(total, b + chunk);
        if (b >= e)
            break;
        workers.emplace_back([&fn, b, e, w] { fn(b, e, w); });
    }
    for (auto &t : workers)
        t.join();
}

} // namespace

Algebra alternating_algebra_from_code(std::size_t dim, std::uint64_t p, std::uint64_t code)
{
    Params const P = make_params(dim, p);
    if (code >= P.candidates)
        throw PreconditionError("candidate code out of range");
    Tensor const t = decode(P, code);
    FieldSpec const f = FieldSpec::prime(p);
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < dim * dim * dim; ++i)
        entries.emplace_back(f, t[i]);
    return Algebra(f, dim, std::move(entries), Symmetry::Skew);
}

bool packed_is_acaa(std::size_t dim, std::uint64_t p, std::uint64_t code)
{
    Params const P = make_params(dim, p);
    return is_acaa(P, decode(P, code));
}

EnumerationResult enumerate_finite(std::size_t dim, std::uint64_t p, unsigned jobs)
{
    Params const P = make_params(dim, p);
    jobs = std::max(1u, jobs);

    // Filter: each worker collects the Acaa codes of its chunk; chunks are
    // contiguous so concatenation in worker order keeps the codes sorted.
    std::vector<std::vector<std::uint64_t>> found(jobs);
    parallel_chunks(P.candidates, jobs, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        for (std::uint64_t code = b; code < e; ++code)
            if (is_acaa(P, decode(P, code)))
                found[w].push_back(code);
    });
    std::vector<std::uint64_t> acaa;
    for (auto const &f : found)
        acaa.insert(acaa.end(), f.begin(), f.end());

    std::uint64_t const matrices = ipow(p, dim * dim);
    std::vector<char> visited(P.candidates, 0);
    EnumerationResult result{dim, p, P.candidates, acaa.size(), 0, {}};
    for (std::uint64_t rep : acaa) {
        if (visited[rep])
            continue;
        Tensor const t = decode(P, rep);
        std::vector<std::vector<std::uint64_t>> images(jobs);
        parallel_chunks(matrices, jobs, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
            Mat g{};
            for (std::uint64_t code = b; code < e; ++code) {
                std::uint64_t c = code;
                for (std::size_t i = 0; i < dim * dim; ++i) {
                    g[i] = static_cast<int>(c % p);
                    c /= p;
                }
                int const det = determinant(P, g);
                if (det == 0)
                    continue;
                images[w].push_back(encode(P, act(P, t, g, invert(P, g, det))));
            }
        });
        std::uint64_t size = 0;
        for (auto const &img : images)
            for (std::uint64_t code : img)
                if (!visited[code]) {
                    if (!std::binary_search(acaa.begin(), acaa.end(), code))
                        throw std::logic_error("GL action left the Acaa locus");
                    visited[code] = 1;
                    ++size;
                }
        result.orbit_sizes.push_back(size);
        ++result.iso_class_count;
    }
    return result;
}

} // namespace acaa
