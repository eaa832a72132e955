#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "acaa/linalg.hpp"

namespace acaa {

/// Degree-3 monomials in x1, x2, x3.
///
/// Full12: index s in 0..5 is (x_s1 x_s2) x_s3 and 6 + s is x_s1 (x_s2 x_s3),
/// where s runs over the permutations of (1,2,3) in lexicographic order
/// 123, 132, 213, 231, 312, 321.
/// Skew3: (x1x2)x3, (x2x3)x1, (x3x1)x2.
class MonomialSpace {
public:
    enum class Variant { Full12, Skew3 };

    static MonomialSpace full12();
    static MonomialSpace skew3();

    Variant variant() const { return variant_; }
    std::size_t size() const { return labels_.size(); }
    std::vector<std::string> const &labels() const { return labels_; }

private:
    MonomialSpace(Variant v, std::vector<std::string> labels) : variant_(v), labels_(std::move(labels)) {}
    Variant variant_;
    std::vector<std::string> labels_;
};

/// Permutations of {0,1,2} in lexicographic order (the Full12 block order).
std::array<std::array<int, 3>, 6> const &sigma3();
int signature(std::array<int, 3> const &perm);

/// Diagonal pairing on Full12: +sign(s) on left-bracketed monomials,
/// -sign(s) on right-bracketed ones, all cross terms zero.
Matrix pairing_matrix();

/// {w : <w, v> = 0 for all v in V} for the pairing above.
/// Throws DimensionMismatch unless V lives in Q^12.
Subspace orthogonal_complement(Subspace const &V);

/// Sigma_3 acts on Full12 by renaming variables: tau sends the monomial with
/// permutation s to the one with permutation tau o s, keeping the bracketing.
Vector act_sigma3(std::array<int, 3> const &tau, Vector const &v);
/// Span of the Sigma_3-orbit of v in Full12.
Subspace sigma3_orbit_span(Vector const &v);
/// (x1x2)x3 - (x2x3)x1 (sign = -1) or (x1x2)x3 + (x2x3)x1 (sign = +1) in Full12.
Vector cyclic_relation_full12(long sign);

/// Rows m1+m2, m2+m3, m3+m1 over the Skew3 basis.
Matrix cyclic_relation_matrix(FieldSpec f);

struct DualNilpotency {
    std::size_t rank_over_q;  ///< 3: the relations force every (x_i x_j) x_k = 0
    std::size_t rank_over_f2; ///< 2 in characteristic 2
    bool forces_nilpotency;
    std::vector<std::uint64_t> dual_dims; ///< 1, 1, 0, 0, ...
};

DualNilpotency dual_relations_force_nilpotency(std::size_t dims = 6);

} // namespace acaa
