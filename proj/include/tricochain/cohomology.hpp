#pragma once

#include "tricochain/algebra.hpp"
#include "tricochain/cochain.hpp"
#include "tricochain/exactlin.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tricochain {

/// Largest degree computed without an explicit override.
inline constexpr unsigned kDeskDegreeCap = 3;

/// Matrix of δ: C^n → C^{n+1}; column j is δ of the j-th basis cochain in
/// the CochainBasis(n + 1, dim) coordinates.
QMatrix assemble_tri_delta_matrix(const TriDendAlgebra& b, unsigned n, DeltaRoute route = DeltaRoute::Extraction,
                                  unsigned threads = 1);

struct DegreeSummary {
    unsigned degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t rank_delta = 0;         // rank of δ^n : C^n → C^{n+1}
    std::size_t dim_cocycles = 0;       // dim ker δ^n
    std::size_t dim_coboundaries = 0;   // rank δ^{n-1}; zero in degree 1
    /// dim_cocycles − dim_coboundaries; empty when δ^n · δ^{n−1} ≠ 0, where the
    /// quotient is undefined.
    std::optional<std::size_t> dim_cohomology;
    std::size_t dim_generator_slice = 0;  // multilinear Hochschild values at generator inputs
    std::size_t dim_quotient_slice = 0;   // dim_generator_slice − dim_cochains
    std::optional<std::vector<QVector>> cocycles;
};

struct CohomologyReport {
    std::size_t algebra_dim = 0;
    unsigned max_degree = 0;
    DeltaRoute route = DeltaRoute::Extraction;
    std::vector<DegreeSummary> degrees;
    /// δ^{n+1} · δ^n == 0 for every consecutive pair assembled.
    bool delta_squared_zero = true;
};

struct CohomologyOptions {
    bool emit_cocycles = false;
    DeltaRoute route = DeltaRoute::Extraction;
    unsigned threads = 1;
};

/// Dimensions, ranks and cohomology for 1 ≤ n ≤ max_degree. Assembles δ^n for
/// n ≤ max_degree, so the largest matrix is C^{max} → C^{max+1}.
CohomologyReport cohomology_dims(const TriDendAlgebra& b, unsigned max_degree, const CohomologyOptions& options = {});

/// Kernel basis of the degree-n differential, deterministic order.
std::vector<QVector> cocycle_basis(const TriDendAlgebra& b, unsigned n, DeltaRoute route = DeltaRoute::Extraction,
                                   unsigned threads = 1);

/// Number of monomials of degree n in which each of x₁..x_n occurs exactly
/// once, by enumeration.
std::size_t multilinear_monomial_count(unsigned n);

}  // namespace tricochain
