#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acaa/linalg.hpp"
#include "acaa/scalar.hpp"

namespace acaa {

enum class Symmetry { None, Skew };

/// One nonzero structure constant entry used by Algebra::from_products:
/// e_left * e_right = sum_k value[k] e_k.
struct ProductEntry {
    std::size_t left;
    std::size_t right;
    std::vector<std::pair<std::size_t, long>> value;
};

/// Finite-dimensional algebra given by structure constants
/// e_i * e_j = sum_k c(i,j,k) e_k. Immutable once built.
///
/// When the symmetry hint is Skew the tensor is validated to be alternating
/// (zero diagonal, c(i,j,.) = -c(j,i,.)).
class Algebra {
public:
    /// tensor holds dim^3 entries indexed [(i * dim + j) * dim + k].
    Algebra(FieldSpec field, std::size_t dim, std::vector<Scalar> tensor,
            Symmetry hint = Symmetry::None);

    static Algebra zero(FieldSpec field, std::size_t dim, Symmetry hint = Symmetry::Skew);

    /// Integer structure constants. For Skew, list only one of (i,j) / (j,i):
    /// the opposite product is filled in with the negated value.
    static Algebra from_products(FieldSpec field, std::size_t dim,
                                 std::vector<ProductEntry> const &entries,
                                 Symmetry hint = Symmetry::None);

    FieldSpec field() const { return field_; }
    std::size_t dim() const { return dim_; }
    Symmetry symmetry() const { return symmetry_; }
    std::string const &name() const { return name_; }
    std::optional<std::vector<std::string>> const &labels() const { return labels_; }
    /// Basis label, falling back to "e1", "e2", ...
    std::string label(std::size_t i) const;

    Algebra with_name(std::string name) const;
    Algebra with_labels(std::vector<std::string> labels) const;

    Scalar const &c(std::size_t i, std::size_t j, std::size_t k) const
    {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    /// Coordinates of e_i * e_j.
    Vector product(std::size_t i, std::size_t j) const;
    std::vector<Scalar> const &tensor() const { return tensor_; }

    friend bool operator==(Algebra const &a, Algebra const &b)
    {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
    }

private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> tensor_;
    Symmetry symmetry_;
    std::string name_;
    std::optional<std::vector<std::string>> labels_;
};

/// Throws DimensionMismatch / FieldMismatch unless x is a coordinate vector of A.
void require_element(Algebra const &A, Vector const &x);

/// Linear combination with basis labels, e.g. "3*X123 - X12"; "0" for zero.
std::string format_element(Algebra const &A, Vector const &x);

/// Bilinear product x * y.
Vector multiply(Algebra const &A, Vector const &x, Vector const &y);
/// x * e_j, used where one argument is a basis vector.
Vector multiply_basis_right(Algebra const &A, Vector const &x, std::size_t j);
Vector multiply_basis_left(Algebra const &A, std::size_t i, Vector const &y);

struct Polarization {
    Algebra minus; ///< c(i,j,k) - c(j,i,k), skew
    Algebra plus;  ///< c(i,j,k) + c(j,i,k)
};
Polarization polarize(Algebra const &A);

/// Bracket b1*b2 - b2*b1.
Algebra commutator_algebra(Algebra const &B);

/// Block sum; cross products vanish.
Algebra direct_sum(Algebra const &A, Algebra const &B);

/// s * (structure tensor).
Algebra scaled(Algebra const &A, Scalar const &s);

/// Rewrite A in the basis f_a = sum_i P(i,a) e_i (columns of P).
/// Throws PreconditionError when P is singular.
Algebra change_of_basis(Algebra const &A, Matrix const &P);

/// Isomorphism invariants of an algebra.
struct Fingerprint {
    std::size_t dim;
    std::size_t derived_dim; ///< dim span{e_i e_j}
    std::size_t ann_dim;     ///< dim {x : xA = Ax = 0}
    std::size_t cube_dim;    ///< dim span{(e_i e_j) e_k, e_i (e_j e_k)}

    friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
    friend auto operator<=>(Fingerprint const &, Fingerprint const &) = default;
};
std::string to_string(Fingerprint const &fp);

Fingerprint fingerprint(Algebra const &A);

/// Span of all products e_i e_j (the derived algebra A^2).
Subspace derived_subspace(Algebra const &A);
/// Span of all degree-3 products (A^3).
Subspace cube_subspace(Algebra const &A);
/// Two-sided annihilator.
Subspace annihilator(Algebra const &A);

} // namespace acaa
