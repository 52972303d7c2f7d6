#include "tricochain/cohomology.hpp"

#include "tricochain/parallel.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace tricochain {

QMatrix assemble_tri_delta_matrix(const TriDendAlgebra& b, unsigned n, DeltaRoute route, unsigned threads) {
    const CochainBasis source(n, b.dim);
    const CochainBasis target(n + 1, b.dim);
    QMatrix m(target.size(), source.size());
    std::vector<QVector> columns(source.size());
    parallel_for(source.size(), threads, [&](std::size_t cell) {
        columns[cell] = apply_delta(b, TriCochain::basis_cochain(n, b.dim, cell), route).coeffs();
    });
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

std::size_t multilinear_monomial_count(unsigned n) {
    // Every monomial of degree n with each generator once is (M, N) with
    // M ⊎ N = {1..n}; enumerate by brute force over products of generators.
    if (n == 0) return 0;
    std::set<ComTriMonomial> frontier{generator(1)};
    for (unsigned next = 2; next <= n; ++next) {
        std::set<ComTriMonomial> grown;
        const ComTriMonomial x = generator(next);
        for (const ComTriMonomial& m : frontier) {
            grown.insert(star(m, x));
            grown.insert(star(x, m));
            grown.insert(bullet(m, x));
        }
        frontier = std::move(grown);
    }
    return frontier.size();
}

CohomologyReport cohomology_dims(const TriDendAlgebra& b, unsigned max_degree, const CohomologyOptions& options) {
    if (max_degree == 0) throw std::invalid_argument("cohomology_dims: max_degree must be at least 1");

    CohomologyReport report;
    report.algebra_dim = b.dim;
    report.max_degree = max_degree;
    report.route = options.route;

    std::vector<QMatrix> deltas;
    for (unsigned n = 1; n <= max_degree; ++n)
        deltas.push_back(assemble_tri_delta_matrix(b, n, options.route, options.threads));

    // squares[n] holds for the pair δ^{n+1} · δ^n (1-based degrees).
    std::vector<bool> squares(max_degree + 1, true);
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
        squares[i + 1] = (deltas[i + 1] * deltas[i]).is_zero();
        if (!squares[i + 1]) report.delta_squared_zero = false;
    }

    std::size_t previous_rank = 0;
    for (unsigned n = 1; n <= max_degree; ++n) {
        const QMatrix& delta = deltas[n - 1];
        DegreeSummary s;
        s.degree = n;
        s.dim_cochains = delta.cols();
        if (options.emit_cocycles) {
            auto kernel = kernel_basis(delta);
            s.rank_delta = delta.cols() - kernel.size();
            s.cocycles = std::move(kernel);
        } else {
            s.rank_delta = rank(delta);
        }
        s.dim_cocycles = s.dim_cochains - s.rank_delta;
        s.dim_coboundaries = previous_rank;
        if (n == 1 || squares[n - 1]) {
            if (s.dim_cocycles < s.dim_coboundaries)
                throw std::logic_error("cohomology_dims: image of δ^" + std::to_string(n - 1) + " exceeds ker δ^" +
                                       std::to_string(n));
            s.dim_cohomology = s.dim_cocycles - s.dim_coboundaries;
        }

        std::size_t tuples = 1;
        for (unsigned i = 0; i < n; ++i) tuples *= b.dim;
        s.dim_generator_slice = multilinear_monomial_count(n) * tuples * b.dim;
        s.dim_quotient_slice = s.dim_generator_slice - s.dim_cochains;

        previous_rank = s.rank_delta;
        report.degrees.push_back(std::move(s));
    }
    return report;
}

std::vector<QVector> cocycle_basis(const TriDendAlgebra& b, unsigned n, DeltaRoute route, unsigned threads) {
    return kernel_basis(assemble_tri_delta_matrix(b, n, route, threads));
}

}  // namespace tricochain
