#pragma once

#include "tricochain/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tricochain {

/// Sorted list of 1-based generator (or position) indices. Used both for
/// multisets of generators and for subsets I ⊆ {1..n}.
using IndexList = std::vector<unsigned>;

/// Normal form (•M) ∗ (∗N) of a monomial in the free commutative tri-algebra:
/// the •-block M is a nonempty multiset, the ∗-tail N a possibly empty one.
class ComTriMonomial {
public:
    /// Sorts both lists. Throws std::invalid_argument if the •-block is empty
    /// or an index is 0.
    ComTriMonomial(IndexList bullet_block, IndexList star_tail = {});

    [[nodiscard]] const IndexList& bullet_block() const { return m_; }
    [[nodiscard]] const IndexList& star_tail() const { return n_; }
    [[nodiscard]] std::size_t degree() const { return m_.size() + n_.size(); }

    /// Ordered by degree, then •-block, then ∗-tail (both lexicographic).
    friend std::strong_ordering operator<=>(const ComTriMonomial& a, const ComTriMonomial& b);
    friend bool operator==(const ComTriMonomial&, const ComTriMonomial&) = default;

    /// "x1", "x1*x2", "(x1.x3)*x2", "(x1.x2)".
    [[nodiscard]] std::string str() const;

private:
    IndexList m_;
    IndexList n_;
};

/// x_i as the monomial ({i}, ∅). Requires i ≥ 1.
ComTriMonomial generator(unsigned i);

/// (M₁,N₁) ∗ (M₂,N₂) = (M₁, N₁ ⊎ M₂ ⊎ N₂).
ComTriMonomial star(const ComTriMonomial& p, const ComTriMonomial& q);

/// (M₁,N₁) • (M₂,N₂) = (M₁ ⊎ M₂, N₁ ⊎ N₂).
ComTriMonomial bullet(const ComTriMonomial& p, const ComTriMonomial& q);

/// (I, {1..n} \ I). Throws std::invalid_argument if I is empty, unsorted,
/// has repeats, or leaves {1..n}.
ComTriMonomial p_monomial(unsigned n, const IndexList& subset);

/// Nonempty subsets of {1..n}, ordered by cardinality then lexicographically:
/// {1}, {2}, ..., {n}, {1,2}, {1,3}, ...
std::vector<IndexList> nonempty_subsets(unsigned n);

/// Finite rational combination of monomials; zero coefficients never stored.
class FreeElement {
public:
    FreeElement() = default;
    FreeElement(const ComTriMonomial& m, Rational c = 1);  // NOLINT(google-explicit-constructor)

    [[nodiscard]] const std::map<ComTriMonomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const ComTriMonomial& m) const;

    void add(const ComTriMonomial& m, const Rational& c);

    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const Rational& s, const FreeElement& a);

    friend bool operator==(const FreeElement&, const FreeElement&) = default;

    [[nodiscard]] std::string str() const;

private:
    std::map<ComTriMonomial, Rational> terms_;
};

FreeElement star_lin(const FreeElement& u, const FreeElement& v);
FreeElement bullet_lin(const FreeElement& u, const FreeElement& v);

}  // namespace tricochain
