#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "acaa/algebra.hpp"
#include "acaa/identities.hpp"

namespace acaa {

/// Linear map from an Acaa algebra to square matrices, given by the images
/// of the basis vectors.
class Representation {
public:
    /// Throws DimensionMismatch / FieldMismatch unless there is one
    /// target_dim x target_dim matrix per basis vector over the algebra's field.
    Representation(Algebra source, std::size_t target_dim, std::vector<Matrix> images);

    Algebra const &source() const { return source_; }
    std::size_t target_dim() const { return target_dim_; }
    std::vector<Matrix> const &images() const { return images_; }
    /// rho(x) = sum_i x_i rho(e_i)
    Matrix image(Vector const &x) const;

private:
    Algebra source_;
    std::size_t target_dim_;
    std::vector<Matrix> images_;
};

/// Column j holds the coordinates of [x, e_j].
Matrix ad_matrix(Algebra const &A, Vector const &x);

Representation adjoint_representation(Algebra const &A);

/// For all basis pairs: ad e_i ad e_j + ad e_j ad e_i = 0,
/// 2 ad[e_i,e_j] = -(ad e_i ad e_j - ad e_j ad e_i), and (ad e_i)^2 = 0.
/// Requires an Acaa algebra.
CheckResult check_ad_identities(Algebra const &A);

/// k f(e_i e_j) + e_i f(e_j) + f(e_i) e_j = 0 for all basis pairs.
CheckResult check_weighted_antiderivation(Algebra const &A, Matrix const &f, long k);

/// rho([e_i,e_j]) = -rho(e_i) rho(e_j), rho(e_i) rho(e_j) = -rho(e_j) rho(e_i)
/// and rho(e_i)^2 = 0 for all basis pairs. Requires an Acaa source.
CheckResult check_representation(Representation const &r);

/// Injectivity: the basis images are linearly independent. Requires a valid
/// representation.
bool is_faithful(Representation const &r);

struct H3SearchResult {
    std::uint64_t p;
    std::size_t d;
    std::uint64_t square_zero;      ///< matrices X with X^2 = 0
    std::uint64_t admissible_pairs; ///< ordered pairs with X^2 = Y^2 = 0, XY = -YX
    bool exhausted;                 ///< no admissible pair with XY != 0
    std::optional<std::pair<Matrix, Matrix>> counterexample;
};

/// Searches all pairs of d x d matrices over F_p with X^2 = Y^2 = 0 and
/// XY = -YX for one with XY != 0. Such a pair would give rho(e1) = X,
/// rho(e2) = Y, rho(e3) = -XY, a faithful representation of h3.
/// Supports d = 3 and p in {3, 5}.
H3SearchResult h3_faithfulness_search(std::uint64_t p, std::size_t d = 3, unsigned jobs = 1);

} // namespace acaa
