#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acaa/algebra.hpp"

namespace acaa {

/// Free Acaa algebra on n generators over Q. Basis order: X_1..X_n, then
/// X_ij (i<j) lexicographically, then X_ijk (i<j<k) lexicographically.
/// Products: [X_i,X_j] = X_ij, [X_a,X_bc] = sign(a,b,c) X_sorted(abc); all
/// products of total degree >= 4 vanish.
class FreeAcaaAlgebra {
public:
    explicit FreeAcaaAlgebra(std::size_t n);

    std::size_t generators() const { return n_; }
    Algebra const &algebra() const { return algebra_; }
    /// 1, 2 or 3 per basis vector.
    std::vector<int> const &degrees() const { return degrees_; }

    // 0-based generator indices.
    std::size_t pair_index(std::size_t a, std::size_t b) const;
    std::size_t triple_index(std::size_t a, std::size_t b, std::size_t c) const;

private:
    std::size_t n_;
    std::vector<int> degrees_;
    Algebra algebra_;
};

/// Throws PreconditionError for n = 0.
FreeAcaaAlgebra free_acaa(std::size_t n);

/// Dimensions of the homogeneous components of degree 1..max_degree.
std::vector<std::size_t> graded_dims(std::size_t n, std::size_t max_degree = 3);

/// Fully parenthesised bracket word over generators. Text form uses 1-based
/// names with mandatory parentheses: "((X1 X2) X3)".
class BracketWord {
public:
    static BracketWord leaf(std::size_t generator);
    static BracketWord node(BracketWord left, BracketWord right);
    static BracketWord parse(std::string_view text);

    bool is_leaf() const { return children_.empty(); }
    std::size_t generator() const { return generator_; }
    BracketWord const &left() const { return children_.at(0); }
    BracketWord const &right() const { return children_.at(1); }
    std::size_t degree() const;
    std::size_t max_generator() const;
    std::string to_string() const;

private:
    std::size_t generator_ = 0;
    std::vector<BracketWord> children_;
};

/// +- one basis vector.
struct SignedBasis {
    int sign;
    std::size_t index;
    friend bool operator==(SignedBasis const &, SignedBasis const &) = default;
};

/// Reduces a bracket word to +-X_i, +-X_ij, +-X_ijk or zero (nullopt) by
/// rewriting: anticommutativity, the repeated-generator rule [x,[y,x]] = 0,
/// cyclic rotation of [x,[y,z]] to put the smallest generator in front, and
/// vanishing in degree >= 4. Throws PreconditionError for generator >= n.
std::optional<SignedBasis> normal_form(FreeAcaaAlgebra const &F, BracketWord const &w);

/// Value of the word obtained by folding multiply over the tree.
Vector evaluate_word(FreeAcaaAlgebra const &F, BracketWord const &w);

Vector to_vector(FreeAcaaAlgebra const &F, std::optional<SignedBasis> const &s);

} // namespace acaa
