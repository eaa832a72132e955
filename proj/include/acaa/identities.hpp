#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acaa/algebra.hpp"

namespace acaa {

/// Counterexample to an identity: the basis indices it was found at (first
/// failing tuple in lexicographic order) and the nonzero residual.
struct Witness {
    std::vector<std::size_t> indices;
    Vector residual;
    std::string law;
};

class CheckResult {
public:
    static CheckResult ok() { return CheckResult{}; }
    static CheckResult fail(Witness w) { return CheckResult{std::move(w)}; }

    bool holds() const { return !witness_; }
    explicit operator bool() const { return holds(); }
    std::optional<Witness> const &witness() const { return witness_; }

private:
    CheckResult() = default;
    explicit CheckResult(Witness w) : witness_(std::move(w)) {}
    std::optional<Witness> witness_;
};

/// Coefficients of the general quadratic identity
///   a1 (x1x2)x3 + a2 (x2x1)x3 + a3 (x3x2)x1 + a4 (x1x3)x2 + a5 (x2x3)x1 + a6 (x3x1)x2
/// + b1 x1(x2x3) + b2 x2(x1x3) + b3 x3(x2x1) + b4 x1(x3x2) + b5 x2(x3x1) + b6 x3(x1x2) = 0
struct QuadIdentityCoeffs {
    std::array<Scalar, 6> a;
    std::array<Scalar, 6> b;

    /// Twelve integers in the order a1..a6, b1..b6.
    static QuadIdentityCoeffs from_ints(FieldSpec f, std::array<long, 12> const &coeffs);
    /// x1(x2x3) - x2(x3x1)
    static QuadIdentityCoeffs acaa(FieldSpec f);
    /// x1(x2x3) + x2(x3x1) + x3(x1x2)
    static QuadIdentityCoeffs jacobi(FieldSpec f);
    /// (x1x2)x3 + x1(x2x3)
    static QuadIdentityCoeffs antiassociative(FieldSpec f);
};

/// Value of the twelve-term sum at (e_i, e_j, e_k).
Vector quadratic_identity_value(Algebra const &A, QuadIdentityCoeffs const &c, std::size_t i,
                                std::size_t j, std::size_t k);

CheckResult check_anticommutative(Algebra const &A);

/// Linearized Acaa test [e_i,[e_j,e_k]] + [e_k,[e_j,e_i]] = 0 on all triples.
/// Requires an anticommutative algebra over a field of characteristic != 2.
CheckResult check_acaa(Algebra const &A);

CheckResult check_quadratic_identity(Algebra const &A, QuadIdentityCoeffs const &c);
CheckResult check_jacobi(Algebra const &A);
CheckResult check_antiassociative(Algebra const &A);

/// [e_i,[e_j,e_k]] = [e_j,[e_k,e_i]] = [e_k,[e_i,e_j]] on all triples.
CheckResult check_cyclic_triple(Algebra const &A);

/// (b1 b2) b3 - b3 (b1 b2)
Vector rho(Algebra const &B, Vector const &b1, Vector const &b2, Vector const &b3);

CheckResult check_rho_associative(Algebra const &B);

/// rho(b1,b2,b3) - rho(b2,b1,b3) + rho(b1,b3,b2) - rho(b3,b1,b2) = 0 on all
/// basis triples. Evaluated directly on B, not through the commutator algebra.
CheckResult check_acaa_admissible(Algebra const &B);

/// Human readable witness, using basis labels.
std::string describe(Algebra const &A, Witness const &w);

} // namespace acaa
