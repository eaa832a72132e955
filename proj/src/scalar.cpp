#include "acaa/scalar.hpp"

#include <ostream>

#include "acaa/error.hpp"

namespace acaa {

namespace {

std::uint64_t mod_reduce(mpz_class const &n, std::uint64_t p)
{
    mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
    if (r < 0)
        r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const
{
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field)
{
    if (field.is_rational())
        value_ = mpq_class(value);
    else
        value_ = mod_reduce(mpz_class(value), field.modulus());
}

Scalar::Scalar(FieldSpec field, mpq_class const &value) : field_(field)
{
    if (field.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    std::uint64_t const p = field.modulus();
    std::uint64_t const den = mod_reduce(value.get_den(), p);
    if (den == 0)
        throw Error("denominator of " + value.get_str() + " vanishes in F_" + std::to_string(p));
    value_ = mul_mod(mod_reduce(value.get_num(), p), pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(FieldSpec field, std::string_view text)
{
    std::string s(text);
    auto const bad = [&] { return ParseError("malformed scalar literal \"" + s + "\""); };
    if (s.empty())
        throw bad();
    auto const slash = s.find('/');
    auto const valid_int = [](std::string const &t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw ParseError("zero denominator in \"" + s + "\"");
    return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const
{
    if (auto const *q = std::get_if<mpq_class>(&value_))
        return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (auto const *q = std::get_if<mpq_class>(&value_))
        return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

mpq_class const &Scalar::rational() const
{
    if (!field_.is_rational())
        throw FieldMismatch("rational() called on an element of " + field_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const
{
    if (field_.is_rational())
        throw FieldMismatch("residue() called on a rational");
    return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(Scalar const &o) const
{
    if (!(field_ == o.field_))
        throw FieldMismatch("cannot combine " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("division by zero");
    Scalar r = *this;
    if (field_.is_rational()) {
        std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
    } else {
        std::uint64_t const p = field_.modulus();
        r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return r;
}

Scalar &Scalar::operator+=(Scalar const &o)
{
    require_same_field(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto &v = std::get<std::uint64_t>(value_);
        v = (v + std::get<std::uint64_t>(o.value_)) % field_.modulus();
    }
    return *this;
}

Scalar &Scalar::operator-=(Scalar const &o)
{
    require_same_field(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        std::uint64_t const p = field_.modulus();
        auto &v = std::get<std::uint64_t>(value_);
        v = (v + p - std::get<std::uint64_t>(o.value_)) % p;
    }
    return *this;
}

Scalar &Scalar::operator*=(Scalar const &o)
{
    require_same_field(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto &v = std::get<std::uint64_t>(value_);
        v = mul_mod(v, std::get<std::uint64_t>(o.value_), field_.modulus());
    }
    return *this;
}

Scalar &Scalar::operator/=(Scalar const &o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.is_rational()) {
        std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
    } else {
        std::uint64_t const p = field_.modulus();
        r.value_ = (p - std::get<std::uint64_t>(value_)) % p;
    }
    return r;
}

bool operator==(Scalar const &a, Scalar const &b)
{
    a.require_same_field(b);
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    if (auto const *q = std::get_if<mpq_class>(&value_))
        return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream &operator<<(std::ostream &os, Scalar const &s) { return os << s.to_string(); }

} // namespace acaa
