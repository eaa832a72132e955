#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acaa/algebra.hpp"
#include "acaa/free_acaa.hpp"
#include "acaa/identities.hpp"
#include "acaa/sampler.hpp"

namespace acaa {

/// Dense multilinear map A x ... x A -> A. Entry (a_1..a_k, out) is stored at
/// ((a_1 * dim + a_2) * dim + ... + a_k) * dim + out.
class MultilinearMap {
public:
    MultilinearMap(FieldSpec f, std::size_t dim, std::size_t arity, std::vector<Scalar> values);
    static MultilinearMap zero(FieldSpec f, std::size_t dim, std::size_t arity);

    FieldSpec field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return arity_; }
    std::vector<Scalar> const &values() const { return values_; }
    bool is_zero() const;

    /// Value on basis vectors.
    Vector at(std::span<std::size_t const> args) const;
    /// Multilinear extension to arbitrary arguments.
    Vector evaluate(std::vector<Vector> const &args) const;

    friend bool operator==(MultilinearMap const &, MultilinearMap const &) = default;

private:
    FieldSpec field_;
    std::size_t dim_;
    std::size_t arity_;
    std::vector<Scalar> values_;
};

/// Skew-symmetric bilinear map (zero diagonal, phi(x,y) = -phi(y,x)).
class Cochain2 {
public:
    /// Throws PreconditionError unless map is bilinear and skew.
    explicit Cochain2(MultilinearMap map);
    MultilinearMap const &map() const { return map_; }
    Vector operator()(Vector const &x, Vector const &y) const { return map_.evaluate({x, y}); }

private:
    MultilinearMap map_;
};

/// Trilinear map with psi(x,y,z) = psi(y,x,z).
class Cochain3 {
public:
    /// Throws PreconditionError unless map is trilinear and symmetric in the
    /// first two arguments.
    explicit Cochain3(MultilinearMap map);
    MultilinearMap const &map() const { return map_; }
    Vector operator()(Vector const &x, Vector const &y, Vector const &z) const
    {
        return map_.evaluate({x, y, z});
    }

private:
    MultilinearMap map_;
};

bool is_skew(MultilinearMap const &m);
bool is_symmetric_first_two(MultilinearMap const &m);

/// Default first arrow a -> ad a. It does not compose to zero with delta1:
/// delta1(ad a)(u,v) = 3[a,[u,v]].
Matrix delta0(Algebra const &A, Vector const &a);

/// delta1(f)(u,v) = f[u,v] - [u,f(v)] - [f(u),v]
Cochain2 delta1(Algebra const &A, Matrix const &f);

/// delta2(phi)(X,Y,Z) = phi(X,[Y,Z]) + [X,phi(Y,Z)] - phi(Y,[Z,X]) - [Y,phi(Z,X)]
/// Requires an Acaa algebra.
Cochain3 delta2(Algebra const &A, Cochain2 const &phi);

/// Four-argument map
///   psi(X1,X2,[X3,X4]) + psi(X1,[X3,X4],X2) + psi(X2,[X3,X4],X1)
///   + [X1,psi(X2,X3,X4)] + [X1,psi(X2,X4,X3)] + [X1,psi(X4,X3,X2)]
MultilinearMap delta3(Algebra const &A, Cochain3 const &psi);

/// delta2(phi)(X,Y,Z) + delta2(phi)(Y,Z,X) + delta2(phi)(Z,X,Y) = 0 on all
/// basis triples.
CheckResult check_cyclic_sum(Algebra const &A, Cochain2 const &phi);

/// Acaa algebra with a compatible grading by degrees 1..3: every nonzero
/// component of e_i e_j has degree deg(i) + deg(j).
class GradedAcaa {
public:
    GradedAcaa(Algebra algebra, std::vector<int> degrees);
    static GradedAcaa from_free(FreeAcaaAlgebra const &F);

    Algebra const &algebra() const { return algebra_; }
    std::vector<int> const &degrees() const { return degrees_; }

private:
    Algebra algebra_;
    std::vector<int> degrees_;
};

/// g_X(e) = (-1)^(i+j) i j [X, e] with i = deg X, j = deg e; zero when i + j >= 4.
Matrix g_map(GradedAcaa const &G, std::size_t basis_index);

/// delta1(g_X)(Y,Z) = 0 for every basis X and all degree-1 basis Y, Z.
CheckResult check_gmap_degree_one(GradedAcaa const &G);

/// Pseudo-random skew bilinear map with entries in [-3, 3].
Cochain2 random_cochain2(Sampler &s, FieldSpec f, std::size_t dim);

} // namespace acaa
