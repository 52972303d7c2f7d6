#pragma once

#include "tricochain/algebra.hpp"
#include "tricochain/free_comtri.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tricochain {

/// Element of A ⊗ B: a finite combination of (monomial ⊗ e_k).
class TensorElement {
public:
    using Key = std::pair<ComTriMonomial, std::size_t>;

    TensorElement() = default;
    /// a ⊗ e_k, times c.
    static TensorElement pure(const ComTriMonomial& a, std::size_t k, const Rational& c = 1);
    /// a ⊗ b.
    static TensorElement pure(const ComTriMonomial& a, const BElement& b);

    [[nodiscard]] const std::map<Key, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const ComTriMonomial& a, std::size_t k) const;
    [[nodiscard]] std::size_t max_degree() const;

    void add(const ComTriMonomial& a, std::size_t k, const Rational& c);
    /// Adds a ⊗ b.
    void add(const ComTriMonomial& a, const BElement& b, const Rational& scale = 1);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& s, const TensorElement& a);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    /// Terms grouped by monomial: "(x1*x2) ⊗ (e) + ..." with ASCII "(x) (x) b".
    [[nodiscard]] std::string str(std::size_t dim) const;

private:
    std::map<Key, Rational> terms_;
};

/// (a₁⊗b₁)(a₂⊗b₂) = (a₁∗a₂)⊗(b₁≺b₂) + (a₂∗a₁)⊗(b₁≻b₂) + (a₁•a₂)⊗(b₁·b₂),
/// extended bilinearly. Throws std::invalid_argument if a B-index is out of
/// range for b.
TensorElement tensor_product(const TriDendAlgebra& b, const TensorElement& u, const TensorElement& v);

using TensorTriple = std::array<TensorElement, 3>;

/// Evaluates (uv)w − u(vw) on each triple; a violation records the triple's
/// position in the list. max_degree is the largest monomial degree among the
/// inputs.
AxiomReport check_associativity(const TriDendAlgebra& b, const std::vector<TensorTriple>& triples);

/// All triples (x_p ⊗ e_i, x_q ⊗ e_j, x_r ⊗ e_k) with p, q, r ∈ {1..generators}
/// and i, j, k over the basis of b.
std::vector<TensorTriple> generator_triples(const TriDendAlgebra& b, unsigned generators = 3);

/// Seeded pseudorandom triples. Each element is a sum of one or two terms
/// c·(monomial ⊗ β) with monomial degree in [1, max_degree] over
/// x1..x4 and β a random rational vector with small numerators/denominators.
std::vector<TensorTriple> random_triples(const TriDendAlgebra& b, std::size_t count, std::size_t max_degree,
                                         std::uint64_t seed);

}  // namespace tricochain
