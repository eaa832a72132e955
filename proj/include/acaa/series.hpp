#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace acaa {

/// Power series c_1 t + ... + c_N t^N over Q with no constant term. Every
/// operation truncates at the smaller order of its operands.
class TruncatedSeries {
public:
    /// coeffs[0] is c_1. Shorter inputs are zero-padded, longer ones truncated.
    TruncatedSeries(std::size_t order, std::vector<mpq_class> coeffs);

    /// The series t.
    static TruncatedSeries identity(std::size_t order);
    static TruncatedSeries from_strings(std::size_t order, std::vector<std::string> const &coeffs);

    std::size_t order() const { return coeffs_.size(); }
    /// c_n; zero for n = 0 or n > order.
    mpq_class coeff(std::size_t n) const;
    std::vector<mpq_class> const &coeffs() const { return coeffs_; }
    std::vector<std::string> coeff_strings() const;
    bool is_zero() const;

    TruncatedSeries truncated(std::size_t order) const;
    /// f(-t)
    TruncatedSeries negate_argument() const;

    friend TruncatedSeries operator+(TruncatedSeries const &a, TruncatedSeries const &b);
    friend TruncatedSeries operator-(TruncatedSeries const &a, TruncatedSeries const &b);
    friend TruncatedSeries operator*(TruncatedSeries const &a, TruncatedSeries const &b);
    friend TruncatedSeries operator*(mpq_class const &s, TruncatedSeries a);
    TruncatedSeries operator-() const;
    friend bool operator==(TruncatedSeries const &a, TruncatedSeries const &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    /// "-t + 1/2*t^2 - 1/6*t^3 + O(t^4)"
    std::string to_string() const;

private:
    std::vector<mpq_class> coeffs_;
};

/// f(g(t)).
TruncatedSeries compose(TruncatedSeries const &f, TruncatedSeries const &g);

/// The series u with f(u(t)) = t, solved coefficient by coefficient.
/// Throws PreconditionError when c_1 = 0.
TruncatedSeries compositional_inverse(TruncatedSeries const &f);

/// sum_n (-1)^n dims[n-1] / n! t^n; dims[0] is the arity-1 dimension.
TruncatedSeries generating_series(std::span<std::uint64_t const> dims, std::size_t order);

/// Arity dimensions 1..n of the Acaa operad: 1, 1, 1, 0, 0, ...
std::vector<std::uint64_t> acaa_dims(std::size_t n);

/// Arity dimensions 1..n of its dual: 1, 1, 0, ...
std::vector<std::uint64_t> dual_dims(std::size_t n);

enum class MinimalModelConvention {
    DirectInverse, ///< g(u(t)) = t: -1, 1/2, -1/3, 5/24, ...
    OppositeSign,  ///< g(-u(t)) = t
};

/// Generating series of the minimal model of the Acaa operad.
TruncatedSeries minimal_model_series(std::size_t order,
                                     MinimalModelConvention convention = MinimalModelConvention::DirectInverse);

/// gDual(-gP(-t)) - t, or gP(-gDual(-t)) - t with swap_roles. A Koszul pair
/// gives zero. Both series must start with -t.
TruncatedSeries koszul_residual(TruncatedSeries const &gP, TruncatedSeries const &gDual, std::size_t order,
                                bool swap_roles = false);

} // namespace acaa
