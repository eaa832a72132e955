#include "acaa/series.hpp"

#include <algorithm>

#include "acaa/error.hpp"

namespace acaa {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order, mpq_class(0));
    for (auto &c : coeffs_)
        c.canonicalize();
}

TruncatedSeries TruncatedSeries::identity(std::size_t order)
{
    std::vector<mpq_class> c;
    if (order > 0)
        c.emplace_back(1);
    return {order, std::move(c)};
}

TruncatedSeries TruncatedSeries::from_strings(std::size_t order, std::vector<std::string> const &coeffs)
{
    std::vector<mpq_class> c;
    for (auto const &s : coeffs) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw ParseError("malformed rational \"" + s + "\"");
        if (q.get_den() == 0)
            throw ParseError("zero denominator in \"" + s + "\"");
        c.push_back(q);
    }
    return {order, std::move(c)};
}

mpq_class TruncatedSeries::coeff(std::size_t n) const
{
    if (n == 0 || n > coeffs_.size())
        return 0;
    return coeffs_[n - 1];
}

std::vector<std::string> TruncatedSeries::coeff_strings() const
{
    std::vector<std::string> s;
    for (auto const &c : coeffs_)
        s.push_back(c.get_str());
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](mpq_class const &c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    return {std::min(order, this->order()), coeffs_};
}

TruncatedSeries TruncatedSeries::negate_argument() const
{
    TruncatedSeries r = *this;
    for (std::size_t n = 1; n <= r.order(); n += 2)
        r.coeffs_[n - 1] = -r.coeffs_[n - 1];
    return r;
}

TruncatedSeries operator+(TruncatedSeries const &a, TruncatedSeries const &b)
{
    std::size_t const n = std::min(a.order(), b.order());
    std::vector<mpq_class> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = a.coeffs_[i] + b.coeffs_[i];
    return {n, std::move(c)};
}

TruncatedSeries operator-(TruncatedSeries const &a, TruncatedSeries const &b) { return a + (-b); }

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

TruncatedSeries operator*(TruncatedSeries const &a, TruncatedSeries const &b)
{
    // (sum a_i t^i)(sum b_j t^j), i, j >= 1
    std::size_t const n = std::min(a.order(), b.order());
    std::vector<mpq_class> c(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (sgn(a.coeffs_[i - 1]) == 0)
            continue;
        for (std::size_t j = 1; i + j <= n; ++j)
            c[i + j - 1] += a.coeffs_[i - 1] * b.coeffs_[j - 1];
    }
    return {n, std::move(c)};
}

TruncatedSeries operator*(mpq_class const &s, TruncatedSeries a)
{
    for (auto &c : a.coeffs_)
        c *= s;
    return a;
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (std::size_t n = 1; n <= order(); ++n) {
        mpq_class const &c = coeffs_[n - 1];
        if (sgn(c) == 0)
            continue;
        mpq_class const mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str() + "*";
        out += n == 1 ? std::string("t") : "t^" + std::to_string(n);
    }
    if (out.empty())
        out = "0";
    return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries compose(TruncatedSeries const &f, TruncatedSeries const &g)
{
    std::size_t const n = std::min(f.order(), g.order());
    TruncatedSeries const inner = g.truncated(n);
    TruncatedSeries result(n, {});
    TruncatedSeries power = inner; // g^k
    for (std::size_t k = 1; k <= n; ++k) {
        result = result + f.coeff(k) * power;
        power = power * inner;
    }
    return result;
}

TruncatedSeries compositional_inverse(TruncatedSeries const &f)
{
    std::size_t const N = f.order();
    if (N == 0)
        return f;
    mpq_class const c1 = f.coeff(1);
    if (sgn(c1) == 0)
        throw PreconditionError("compositional inverse needs a nonzero linear coefficient");
    std::vector<mpq_class> u(N);
    u[0] = 1 / c1;
    // [t^n] f(u) = c1 u_n + (terms in u_1..u_{n-1}); solve for u_n.
    for (std::size_t n = 2; n <= N; ++n) {
        TruncatedSeries const partial(n, u);
        mpq_class const rest = compose(f.truncated(n), partial).coeff(n);
        u[n - 1] = -rest / c1;
    }
    return {N, std::move(u)};
}

TruncatedSeries generating_series(std::span<std::uint64_t const> dims, std::size_t order)
{
    std::vector<mpq_class> c(order);
    mpz_class factorial = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        factorial *= static_cast<unsigned long>(n);
        if (n > dims.size())
            break;
        mpq_class v(mpz_class(static_cast<unsigned long>(dims[n - 1])), factorial);
        v.canonicalize();
        c[n - 1] = n % 2 ? mpq_class(-v) : v;
    }
    return {order, std::move(c)};
}

std::vector<std::uint64_t> acaa_dims(std::size_t n)
{
    std::vector<std::uint64_t> d(n, 0);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 3); ++i)
        d[i] = 1;
    return d;
}

std::vector<std::uint64_t> dual_dims(std::size_t n)
{
    std::vector<std::uint64_t> d(n, 0);
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 2); ++i)
        d[i] = 1;
    return d;
}

TruncatedSeries minimal_model_series(std::size_t order, MinimalModelConvention convention)
{
    auto const dims = acaa_dims(order);
    TruncatedSeries const inv = compositional_inverse(generating_series(dims, order));
    return convention == MinimalModelConvention::DirectInverse ? inv : -inv;
}

TruncatedSeries koszul_residual(TruncatedSeries const &gP, TruncatedSeries const &gDual, std::size_t order,
                                bool swap_roles)
{
    if (gP.coeff(1) != -1 || gDual.coeff(1) != -1)
        throw PreconditionError("Koszul functional equation expects series starting with -t");
    TruncatedSeries const &outer = swap_roles ? gP : gDual;
    TruncatedSeries const &inner = swap_roles ? gDual : gP;
    TruncatedSeries const composite = compose(outer.truncated(order), -inner.truncated(order).negate_argument());
    return composite - TruncatedSeries::identity(composite.order());
}

} // namespace acaa
