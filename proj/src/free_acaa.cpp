#include "acaa/free_acaa.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "acaa/error.hpp"

namespace acaa {

namespace {

std::size_t choose(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::string basis_name(std::size_t n, std::vector<std::size_t> const &gens)
{
    std::string s = "X";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i && n > 9)
            s += "_";
        s += std::to_string(gens[i] + 1);
    }
    return s;
}

// Signature of (a,b,c) relative to its sorted order; entries distinct.
long signature(std::size_t a, std::size_t b, std::size_t c)
{
    long s = 1;
    if (a > b)
        s = -s;
    if (a > c)
        s = -s;
    if (b > c)
        s = -s;
    return s;
}

Algebra build_free(std::size_t n, std::vector<int> &degrees, FreeAcaaAlgebra const &self)
{
    std::size_t const dim = n + choose(n, 2) + choose(n, 3);
    std::vector<std::string> labels;
    degrees.clear();
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(basis_name(n, {a}));
        degrees.push_back(1);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            labels.push_back(basis_name(n, {a, b}));
            degrees.push_back(2);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                labels.push_back(basis_name(n, {a, b, c}));
                degrees.push_back(3);
            }

    std::vector<ProductEntry> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            entries.push_back({a, b, {{self.pair_index(a, b), 1}}});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (a == b || a == c)
                    continue;
                std::array<std::size_t, 3> s{a, b, c};
                std::sort(s.begin(), s.end());
                entries.push_back(
                    {a, self.pair_index(b, c), {{self.triple_index(s[0], s[1], s[2]), signature(a, b, c)}}});
            }
    return Algebra::from_products(FieldSpec::rationals(), dim, entries, Symmetry::Skew)
        .with_labels(std::move(labels))
        .with_name("free" + std::to_string(n));
}

} // namespace

FreeAcaaAlgebra::FreeAcaaAlgebra(std::size_t n) : n_(n), algebra_(Algebra::zero(FieldSpec::rationals(), 0))
{
    if (n == 0)
        throw PreconditionError("the free Acaa algebra needs at least one generator");
    algebra_ = build_free(n, degrees_, *this);
}

std::size_t FreeAcaaAlgebra::pair_index(std::size_t a, std::size_t b) const
{
    if (!(a < b && b < n_))
        throw PreconditionError("pair index needs a < b < n");
    // pairs (i,j) with i < a come first
    std::size_t idx = n_;
    for (std::size_t i = 0; i < a; ++i)
        idx += n_ - 1 - i;
    return idx + (b - a - 1);
}

std::size_t FreeAcaaAlgebra::triple_index(std::size_t a, std::size_t b, std::size_t c) const
{
    if (!(a < b && b < c && c < n_))
        throw PreconditionError("triple index needs a < b < c < n");
    std::size_t idx = n_ + choose(n_, 2);
    for (std::size_t i = 0; i < a; ++i)
        idx += choose(n_ - 1 - i, 2);
    for (std::size_t j = a + 1; j < b; ++j)
        idx += n_ - 1 - j;
    return idx + (c - b - 1);
}

FreeAcaaAlgebra free_acaa(std::size_t n) { return FreeAcaaAlgebra(n); }

std::vector<std::size_t> graded_dims(std::size_t n, std::size_t max_degree)
{
    if (n == 0)
        throw PreconditionError("graded_dims needs n >= 1");
    std::vector<std::size_t> dims;
    for (std::size_t k = 1; k <= max_degree; ++k)
        dims.push_back(k <= 3 ? choose(n, k) : 0);
    return dims;
}

BracketWord BracketWord::leaf(std::size_t generator)
{
    BracketWord w;
    w.generator_ = generator;
    return w;
}

BracketWord BracketWord::node(BracketWord left, BracketWord right)
{
    BracketWord w;
    w.children_.push_back(std::move(left));
    w.children_.push_back(std::move(right));
    return w;
}

std::size_t BracketWord::degree() const
{
    return is_leaf() ? 1 : left().degree() + right().degree();
}

std::size_t BracketWord::max_generator() const
{
    return is_leaf() ? generator_ : std::max(left().max_generator(), right().max_generator());
}

std::string BracketWord::to_string() const
{
    if (is_leaf())
        return "X" + std::to_string(generator_ + 1);
    return "(" + left().to_string() + " " + right().to_string() + ")";
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    BracketWord parse_all()
    {
        BracketWord w = word();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return w;
    }

private:
    [[noreturn]] void fail(std::string const &what) const
    {
        throw ParseError("bracket word \"" + std::string(s_) + "\" at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    BracketWord word()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end");
        if (s_[pos_] == 'X') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected generator number after X");
            auto const g = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (g == 0)
                fail("generators are numbered from X1");
            return BracketWord::leaf(g - 1);
        }
        if (s_[pos_] != '(')
            fail("expected '(' or a generator");
        ++pos_;
        BracketWord l = word();
        BracketWord r = word();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ')')
            fail("expected ')'");
        ++pos_;
        return BracketWord::node(std::move(l), std::move(r));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// sign * X_gens, gens in canonical order (increasing).
struct Mono {
    int sign;
    std::vector<std::size_t> gens;
};

// [X_a, X_bc] with b < c, a distinct from both.
Mono bracket_gen_pair(std::size_t a, std::size_t b, std::size_t c)
{
    // cyclic identity: [x,[y,z]] = [y,[z,x]] = [z,[x,y]]
    std::array<std::size_t, 3> t{a, b, c};
    while (t[0] > t[1] || t[0] > t[2])
        t = {t[1], t[2], t[0]};
    int sign = 1;
    if (t[1] > t[2]) {
        // [x,[z,y]] = -[x,[y,z]]
        std::swap(t[1], t[2]);
        sign = -1;
    }
    return {sign, {t[0], t[1], t[2]}};
}

std::optional<Mono> reduce(BracketWord const &w)
{
    if (w.is_leaf())
        return Mono{1, {w.generator()}};
    if (w.degree() >= 4)
        return std::nullopt;
    auto const l = reduce(w.left());
    auto const r = reduce(w.right());
    if (!l || !r)
        return std::nullopt;
    int const sign = l->sign * r->sign;
    if (l->gens.size() == 1 && r->gens.size() == 1) {
        std::size_t const a = l->gens[0], b = r->gens[0];
        if (a == b)
            return std::nullopt;
        return a < b ? Mono{sign, {a, b}} : Mono{-sign, {b, a}};
    }
    // degree 3: one generator and one pair
    bool const gen_left = l->gens.size() == 1;
    std::size_t const a = gen_left ? l->gens[0] : r->gens[0];
    auto const &pair = gen_left ? r->gens : l->gens;
    if (a == pair[0] || a == pair[1])
        return std::nullopt; // [x,[y,x]] = 0
    Mono m = bracket_gen_pair(a, pair[0], pair[1]);
    m.sign *= gen_left ? sign : -sign;
    return m;
}

} // namespace

BracketWord BracketWord::parse(std::string_view text) { return WordParser(text).parse_all(); }

std::optional<SignedBasis> normal_form(FreeAcaaAlgebra const &F, BracketWord const &w)
{
    if (w.max_generator() >= F.generators())
        throw PreconditionError("word " + w.to_string() + " uses a generator beyond X" +
                                std::to_string(F.generators()));
    auto const m = reduce(w);
    if (!m)
        return std::nullopt;
    switch (m->gens.size()) {
    case 1:
        return SignedBasis{m->sign, m->gens[0]};
    case 2:
        return SignedBasis{m->sign, F.pair_index(m->gens[0], m->gens[1])};
    default:
        return SignedBasis{m->sign, F.triple_index(m->gens[0], m->gens[1], m->gens[2])};
    }
}

Vector evaluate_word(FreeAcaaAlgebra const &F, BracketWord const &w)
{
    Algebra const &A = F.algebra();
    if (w.is_leaf()) {
        if (w.generator() >= F.generators())
            throw PreconditionError("generator out of range");
        return unit_vector(A.field(), A.dim(), w.generator());
    }
    return multiply(A, evaluate_word(F, w.left()), evaluate_word(F, w.right()));
}

Vector to_vector(FreeAcaaAlgebra const &F, std::optional<SignedBasis> const &s)
{
    Algebra const &A = F.algebra();
    Vector v = zero_vector(A.field(), A.dim());
    if (s)
        v.at(s->index) = Scalar(A.field(), s->sign);
    return v;
}

} // namespace acaa
