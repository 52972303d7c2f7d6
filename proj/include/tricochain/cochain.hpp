#pragma once

#include "tricochain/algebra.hpp"
#include "tricochain/exactlin.hpp"
#include "tricochain/free_comtri.hpp"
#include "tricochain/tensor.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tricochain {

/// Coordinates on the space of degree-n tri-dendriform cochains of a
/// d-dimensional algebra with values in itself. A cell is
/// (subset I, tuple (j₁..j_n) of basis indices, output basis index k);
/// cells are ordered subset-major (nonempty_subsets order), then tuple
/// (j₁ most significant), then k.
class CochainBasis {
public:
    CochainBasis(unsigned degree, std::size_t dim);

    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<IndexList>& subsets() const { return subsets_; }
    [[nodiscard]] std::size_t tuple_count() const { return tuple_count_; }
    /// (2ⁿ−1)·dⁿ·d.
    [[nodiscard]] std::size_t size() const { return subsets_.size() * tuple_count_ * dim_; }

    [[nodiscard]] std::size_t index(std::size_t subset_pos, std::size_t tuple, std::size_t k) const {
        return (subset_pos * tuple_count_ + tuple) * dim_ + k;
    }
    [[nodiscard]] std::size_t subset_position(const IndexList& subset) const;

    [[nodiscard]] std::vector<std::size_t> tuple_at(std::size_t tuple) const;
    [[nodiscard]] std::size_t tuple_index(std::span<const std::size_t> indices) const;

    struct Cell {
        std::size_t subset_pos;
        std::size_t tuple;
        std::size_t k;
    };
    [[nodiscard]] Cell cell(std::size_t index) const;

private:
    unsigned degree_;
    std::size_t dim_;
    std::vector<IndexList> subsets_;
    std::size_t tuple_count_;
};

/// A degree-n cochain g: for each nonempty I ⊆ {1..n} an n-linear map
/// g(I; -, ..., -) : Bⁿ → B, stored as its values on basis tuples.
class TriCochain {
public:
    TriCochain(unsigned degree, std::size_t dim);
    /// Throws std::invalid_argument if coeffs has the wrong length.
    TriCochain(unsigned degree, std::size_t dim, QVector coeffs);

    /// The cochain with a single 1 at the given cell.
    static TriCochain basis_cochain(unsigned degree, std::size_t dim, std::size_t cell);

    [[nodiscard]] unsigned degree() const { return layout_.degree(); }
    [[nodiscard]] std::size_t dim() const { return layout_.dim(); }
    [[nodiscard]] const CochainBasis& layout() const { return layout_; }
    [[nodiscard]] const QVector& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    /// g(I; e_{j₁}, ..., e_{j_n}).
    [[nodiscard]] BElement value(std::size_t subset_pos, std::size_t tuple) const;
    void set_value(std::size_t subset_pos, std::size_t tuple, const BElement& v);

    /// g(I; b₁, ..., b_n) extended multilinearly.
    [[nodiscard]] BElement evaluate(std::size_t subset_pos, std::span<const BElement> args) const;

    friend bool operator==(const TriCochain& a, const TriCochain& b) {
        return a.degree() == b.degree() && a.dim() == b.dim() && a.coeffs_ == b.coeffs_;
    }

private:
    CochainBasis layout_;
    QVector coeffs_;
};

/// Arguments (a_j ⊗ b_j) for Ψg. With generators_only set, slot j must carry
/// the generator x_{j+1}.
struct MultilinearInput {
    std::vector<std::pair<ComTriMonomial, BElement>> slots;
    bool generators_only = false;

    /// (x₁ ⊗ b₁, ..., x_n ⊗ b_n).
    static MultilinearInput on_generators(std::vector<BElement> bs);
    /// Throws std::invalid_argument when generators_only is violated.
    [[nodiscard]] std::vector<TensorElement> as_tensors() const;
};

/// (x₁ ⊗ e_{j₁}, ..., x_m ⊗ e_{j_m}).
std::vector<TensorElement> generator_inputs(std::span<const std::size_t> tuple);

/// The monomial P(a₁..a_n; I) = (•_{i∈I} a_i) ∗ (∗_{j∉I} a_j).
ComTriMonomial p_of(std::span<const ComTriMonomial> as, const IndexList& subset);

/// (Ψg)(u₁, ..., u_n), multilinear in each argument. Throws
/// std::invalid_argument if the argument count differs from the degree.
TensorElement psi_apply(const TriDendAlgebra& b, const TriCochain& g, std::span<const TensorElement> args);
TensorElement psi_eval(const TriDendAlgebra& b, const TriCochain& g, const MultilinearInput& in);

/// Hochschild coboundary of Ψg evaluated on n+1 arguments.
TensorElement hoch_delta_on_psi(const TriDendAlgebra& b, const TriCochain& g, std::span<const TensorElement> args);
TensorElement hoch_delta_on_psi(const TriDendAlgebra& b, const TriCochain& g, const MultilinearInput& in);

/// Reads off the B-coefficient of each P({1..n}; I), in nonempty_subsets(n)
/// order. Throws std::invalid_argument if t contains a monomial that is not
/// multilinear in x₁..x_n.
std::vector<BElement> extract(const TensorElement& t, unsigned n, std::size_t dim);

/// Differential defined by extracting δ_HH(Ψg) at generator inputs.
TriCochain tri_delta(const TriDendAlgebra& b, const TriCochain& g);

/// Hand-expanded component formulas for degree 1 → 2 and 2 → 3. Throws
/// std::invalid_argument for other degrees.
TriCochain tri_delta_explicit(const TriDendAlgebra& b, const TriCochain& g);

enum class DeltaRoute { Extraction, Explicit };

TriCochain apply_delta(const TriDendAlgebra& b, const TriCochain& g, DeltaRoute route);

/// For every basis cochain g of degree n and every basis tuple of n+1
/// inputs, compares Ψ(δg) with δ_HH(Ψg) on generator inputs. Violation
/// witnesses are {cell index of g, tuple index}.
AxiomReport check_commutation(const TriDendAlgebra& b, unsigned n, DeltaRoute route, unsigned threads = 1);

/// extract(Ψg on generators) == g for every basis cochain of degree n.
AxiomReport check_round_trip(const TriDendAlgebra& b, unsigned n);

/// Matrix of g ↦ (Ψg on every generator basis tuple), independent of
/// extraction: one row per (tuple, monomial, output index) that occurs.
QMatrix psi_matrix(const TriDendAlgebra& b, unsigned n);

/// True if psi_matrix has full column rank.
bool check_injectivity(const TriDendAlgebra& b, unsigned n);

/// Hochschild coboundary C^n(A, A) → C^{n+1}(A, A) of an associative algebra
/// given by one structure table. Cells are (tuple, k) with the tuple most
/// significant. Throws std::invalid_argument if the table is not
/// associative.
QMatrix hochschild_matrix(const StructureTable& assoc, unsigned n);

}  // namespace tricochain
