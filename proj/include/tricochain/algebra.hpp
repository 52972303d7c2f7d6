#pragma once

#include "tricochain/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tricochain {

/// Coordinates of an element of a finite-dimensional algebra in its basis.
class BElement {
public:
    BElement() = default;
    explicit BElement(std::size_t dim) : coeffs_(dim) {}
    explicit BElement(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static BElement basis(std::size_t dim, std::size_t i);

    [[nodiscard]] std::size_t dim() const { return coeffs_.size(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    [[nodiscard]] bool is_zero() const;

    BElement& operator+=(const BElement& o);
    BElement& operator-=(const BElement& o);
    BElement& operator*=(const Rational& s);
    friend BElement operator+(BElement a, const BElement& b) { return a += b; }
    friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
    friend BElement operator*(const Rational& s, BElement a) { return a *= s; }

    friend bool operator==(const BElement&, const BElement&) = default;

    /// Rendered as "e<i>" sums for dim > 1, "e" for dim 1; "0" for zero.
    [[nodiscard]] std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Structure constants of one bilinear product: at(i, j, k) is the coefficient
/// of basis vector k in (e_i op e_j).
class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    [[nodiscard]] std::size_t dim() const { return dim_; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    /// Bilinear extension. Throws std::invalid_argument on a dimension mismatch.
    [[nodiscard]] BElement apply(const BElement& x, const BElement& y) const;
    /// e_i op e_j.
    [[nodiscard]] BElement apply_basis(std::size_t i, std::size_t j) const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

enum class TriOp { Prec, Succ, Dot };

inline constexpr std::array<TriOp, 3> kTriOps{TriOp::Prec, TriOp::Succ, TriOp::Dot};

/// A vector space with three bilinear products ≺, ≻, · given by structure
/// constants.
struct TriDendAlgebra {
    std::string name;
    std::size_t dim = 0;
    StructureTable prec;
    StructureTable succ;
    StructureTable dot;

    static TriDendAlgebra zero(std::size_t dim, std::string name = "zero");

    [[nodiscard]] const StructureTable& table(TriOp op) const;
    StructureTable& table(TriOp op);

    [[nodiscard]] BElement op(TriOp which, const BElement& x, const BElement& y) const {
        return table(which).apply(x, y);
    }
    [[nodiscard]] BElement op_prec(const BElement& x, const BElement& y) const { return prec.apply(x, y); }
    [[nodiscard]] BElement op_succ(const BElement& x, const BElement& y) const { return succ.apply(x, y); }
    [[nodiscard]] BElement op_dot(const BElement& x, const BElement& y) const { return dot.apply(x, y); }

    /// x ∘ y = x ≺ y + x ≻ y + x · y.
    [[nodiscard]] BElement total_product(const BElement& x, const BElement& y) const;
    /// Structure constants of ∘.
    [[nodiscard]] StructureTable total_table() const;

    [[nodiscard]] BElement basis(std::size_t i) const { return BElement::basis(dim, i); }

    friend bool operator==(const TriDendAlgebra&, const TriDendAlgebra&) = default;
};

/// Finite-dimensional algebra with a Perm product ∗ and a commutative
/// product •.
struct CommTriAlgebraFD {
    std::size_t dim = 0;
    StructureTable star;
    StructureTable bullet;
};

struct Violation {
    std::string axiom;
    std::vector<std::size_t> witness;  // basis indices (or triple number for tensor checks)
    std::string lhs;
    std::string rhs;
};

struct AxiomReport {
    std::vector<Violation> violations;
    std::size_t checks = 0;
    std::size_t max_degree = 0;  // only meaningful for tensor associativity reports

    [[nodiscard]] bool passed() const { return violations.empty(); }
    /// True if some violation names this axiom.
    [[nodiscard]] bool violates(const std::string& axiom) const;
};

/// Checks the seven tri-dendriform identities (axiom1 ... axiom7) and
/// associativity of the total product (axiom8) on every basis triple.
/// Violations are ordered by axiom, then by triple (i, j, k) lexicographically.
AxiomReport verify_tridendriform(const TriDendAlgebra& alg);

/// Checks the Perm, commutative-associative and compatibility identities on
/// every basis triple.
AxiomReport verify_comm_tri(const CommTriAlgebraFD& alg);

/// True if the product is associative on every basis triple.
bool is_associative(const StructureTable& t);

}  // namespace tricochain
