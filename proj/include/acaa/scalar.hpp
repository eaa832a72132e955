#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace acaa {

/// The field a computation lives over: the rationals or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws PreconditionError unless p is prime.
    static FieldSpec prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    /// 0 for the rationals.
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    std::string to_string() const;

    friend bool operator==(FieldSpec const &, FieldSpec const &) = default;

private:
    FieldSpec() = default;
    FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator (GMP canonical form); residues live in [0, p).
/// Arithmetic between different fields throws FieldMismatch.
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() : Scalar(FieldSpec::rationals(), 0) {}
    Scalar(FieldSpec field, long value);
    Scalar(FieldSpec field, mpq_class const &value);

    static Scalar zero(FieldSpec f) { return {f, 0}; }
    static Scalar one(FieldSpec f) { return {f, 1}; }

    /// Accepts "n", "-n" and "p/q". Over F_p the denominator is inverted.
    static Scalar parse(FieldSpec field, std::string_view text);

    FieldSpec field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Only valid over the rationals.
    mpq_class const &rational() const;
    /// Only valid over F_p.
    std::uint64_t residue() const;

    Scalar inverse() const;

    Scalar &operator+=(Scalar const &o);
    Scalar &operator-=(Scalar const &o);
    Scalar &operator*=(Scalar const &o);
    Scalar &operator/=(Scalar const &o);

    friend Scalar operator+(Scalar a, Scalar const &b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar const &b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar const &b) { return a *= b; }
    friend Scalar operator/(Scalar a, Scalar const &b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(Scalar const &a, Scalar const &b);

    /// "p/q" or "n" for rationals, the residue in [0,p) for F_p.
    std::string to_string() const;

private:
    void require_same_field(Scalar const &o) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream &operator<<(std::ostream &os, Scalar const &s);

} // namespace acaa
