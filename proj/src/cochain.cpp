#include "tricochain/cochain.hpp"

#include "tricochain/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace tricochain {

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// Digits of `index` in base `dim`, most significant first, `length` digits.
std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t dim, unsigned length) {
    std::vector<std::size_t> out(length);
    for (unsigned i = length; i-- > 0;) {
        out[i] = index % dim;
        index /= dim;
    }
    return out;
}

std::size_t encode_tuple(std::span<const std::size_t> digits, std::size_t dim) {
    std::size_t index = 0;
    for (std::size_t d : digits) index = index * dim + d;
    return index;
}

}  // namespace

// ---------------------------------------------------------------------------
// CochainBasis

CochainBasis::CochainBasis(unsigned degree, std::size_t dim)
    : degree_(degree), dim_(dim), subsets_(nonempty_subsets(degree)), tuple_count_(ipow(dim, degree)) {
    if (degree == 0) throw std::invalid_argument("tri-dendriform cochains start in degree 1");
}

std::size_t CochainBasis::subset_position(const IndexList& subset) const {
    auto it = std::find(subsets_.begin(), subsets_.end(), subset);
    if (it == subsets_.end()) throw std::invalid_argument("subset is not a nonempty subset of {1..n}");
    return static_cast<std::size_t>(it - subsets_.begin());
}

std::vector<std::size_t> CochainBasis::tuple_at(std::size_t tuple) const {
    return decode_tuple(tuple, dim_, degree_);
}

std::size_t CochainBasis::tuple_index(std::span<const std::size_t> indices) const {
    if (indices.size() != degree_) throw std::invalid_argument("tuple length differs from cochain degree");
    for (std::size_t j : indices)
        if (j >= dim_) throw std::invalid_argument("basis index out of range");
    return encode_tuple(indices, dim_);
}

CochainBasis::Cell CochainBasis::cell(std::size_t index) const {
    const std::size_t k = index % dim_;
    index /= dim_;
    return {index / tuple_count_, index % tuple_count_, k};
}

// ---------------------------------------------------------------------------
// TriCochain

TriCochain::TriCochain(unsigned degree, std::size_t dim) : layout_(degree, dim), coeffs_(layout_.size()) {}

TriCochain::TriCochain(unsigned degree, std::size_t dim, QVector coeffs) : layout_(degree, dim), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != layout_.size())
        throw std::invalid_argument("TriCochain: expected " + std::to_string(layout_.size()) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
}

TriCochain TriCochain::basis_cochain(unsigned degree, std::size_t dim, std::size_t cell) {
    TriCochain g(degree, dim);
    if (cell >= g.coeffs_.size()) throw std::out_of_range("basis cochain index out of range");
    g.coeffs_[cell] = 1;
    return g;
}

bool TriCochain::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.is_zero(); });
}

BElement TriCochain::value(std::size_t subset_pos, std::size_t tuple) const {
    BElement out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = coeffs_[layout_.index(subset_pos, tuple, k)];
    return out;
}

void TriCochain::set_value(std::size_t subset_pos, std::size_t tuple, const BElement& v) {
    if (v.dim() != dim()) throw std::invalid_argument("TriCochain::set_value: dimension mismatch");
    for (std::size_t k = 0; k < dim(); ++k) coeffs_[layout_.index(subset_pos, tuple, k)] = v[k];
}

BElement TriCochain::evaluate(std::size_t subset_pos, std::span<const BElement> args) const {
    if (args.size() != degree()) throw std::invalid_argument("TriCochain::evaluate: wrong number of arguments");
    for (const BElement& a : args)
        if (a.dim() != dim()) throw std::invalid_argument("TriCochain::evaluate: dimension mismatch");

    BElement out(dim());
    for (std::size_t t = 0; t < layout_.tuple_count(); ++t) {
        const auto tuple = layout_.tuple_at(t);
        Rational weight = 1;
        for (unsigned i = 0; i < degree() && !weight.is_zero(); ++i) weight *= args[i][tuple[i]];
        if (weight.is_zero()) continue;
        for (std::size_t k = 0; k < dim(); ++k) {
            const Rational& c = coeffs_[layout_.index(subset_pos, t, k)];
            if (!c.is_zero()) out[k] += weight * c;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ψ and δ_HH ∘ Ψ

MultilinearInput MultilinearInput::on_generators(std::vector<BElement> bs) {
    MultilinearInput in;
    in.generators_only = true;
    for (unsigned j = 0; j < bs.size(); ++j) in.slots.emplace_back(generator(j + 1), std::move(bs[j]));
    return in;
}

std::vector<TensorElement> MultilinearInput::as_tensors() const {
    std::vector<TensorElement> out;
    for (unsigned j = 0; j < slots.size(); ++j) {
        if (generators_only && slots[j].first != generator(j + 1))
            throw std::invalid_argument("MultilinearInput: slot " + std::to_string(j + 1) + " is not x" +
                                        std::to_string(j + 1));
        out.push_back(TensorElement::pure(slots[j].first, slots[j].second));
    }
    return out;
}

std::vector<TensorElement> generator_inputs(std::span<const std::size_t> tuple) {
    std::vector<TensorElement> out;
    for (unsigned j = 0; j < tuple.size(); ++j) out.push_back(TensorElement::pure(generator(j + 1), tuple[j]));
    return out;
}

ComTriMonomial p_of(std::span<const ComTriMonomial> as, const IndexList& subset) {
    if (subset.empty()) throw std::invalid_argument("p_of: empty subset");
    ComTriMonomial block = as[subset[0] - 1];
    for (std::size_t i = 1; i < subset.size(); ++i) block = bullet(block, as[subset[i] - 1]);

    bool have_tail = false;
    ComTriMonomial tail = block;
    for (unsigned j = 1; j <= as.size(); ++j) {
        if (std::binary_search(subset.begin(), subset.end(), j)) continue;
        tail = have_tail ? star(tail, as[j - 1]) : as[j - 1];
        have_tail = true;
    }
    return have_tail ? star(block, tail) : block;
}

TensorElement psi_apply(const TriDendAlgebra& b, const TriCochain& g, std::span<const TensorElement> args) {
    const unsigned n = g.degree();
    if (args.size() != n)
        throw std::invalid_argument("psi: cochain of degree " + std::to_string(n) + " applied to " +
                                    std::to_string(args.size()) + " arguments");
    if (g.dim() != b.dim) throw std::invalid_argument("psi: cochain and algebra dimensions differ");

    using Term = std::tuple<const ComTriMonomial*, std::size_t, const Rational*>;
    std::vector<std::vector<Term>> expanded(n);
    for (unsigned i = 0; i < n; ++i) {
        for (const auto& [key, c] : args[i].terms()) {
            if (key.second >= b.dim) throw std::invalid_argument("psi: basis index out of range");
            expanded[i].emplace_back(&key.first, key.second, &c);
        }
        if (expanded[i].empty()) return {};
    }

    const auto& subsets = g.layout().subsets();
    TensorElement out;
    std::vector<std::size_t> pick(n, 0);
    std::vector<ComTriMonomial> as;
    std::vector<std::size_t> tuple(n);
    while (true) {
        as.clear();
        Rational coef = 1;
        for (unsigned i = 0; i < n; ++i) {
            const auto& [a, k, c] = expanded[i][pick[i]];
            as.push_back(*a);
            tuple[i] = k;
            coef *= *c;
        }
        const std::size_t t = encode_tuple(tuple, b.dim);
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            const BElement v = g.value(s, t);
            if (!v.is_zero()) out.add(p_of(as, subsets[s]), v, coef);
        }

        unsigned i = n;
        while (i-- > 0) {
            if (++pick[i] < expanded[i].size()) break;
            pick[i] = 0;
        }
        if (i == static_cast<unsigned>(-1)) break;
    }
    return out;
}

TensorElement psi_eval(const TriDendAlgebra& b, const TriCochain& g, const MultilinearInput& in) {
    const auto args = in.as_tensors();
    return psi_apply(b, g, args);
}

TensorElement hoch_delta_on_psi(const TriDendAlgebra& b, const TriCochain& g, std::span<const TensorElement> args) {
    const unsigned n = g.degree();
    if (args.size() != n + 1)
        throw std::invalid_argument("hoch_delta_on_psi: expected " + std::to_string(n + 1) + " arguments, got " +
                                    std::to_string(args.size()));

    TensorElement out = tensor_product(b, args[0], psi_apply(b, g, args.subspan(1)));

    for (unsigned i = 1; i <= n; ++i) {
        std::vector<TensorElement> merged;
        merged.reserve(n);
        for (unsigned j = 0; j + 1 < i; ++j) merged.push_back(args[j]);
        merged.push_back(tensor_product(b, args[i - 1], args[i]));
        for (unsigned j = i + 1; j <= n; ++j) merged.push_back(args[j]);
        const TensorElement term = psi_apply(b, g, merged);
        if (i % 2 == 1) out -= term;
        else out += term;
    }

    const TensorElement last = tensor_product(b, psi_apply(b, g, args.first(n)), args[n]);
    if ((n + 1) % 2 == 1) out -= last;
    else out += last;
    return out;
}

TensorElement hoch_delta_on_psi(const TriDendAlgebra& b, const TriCochain& g, const MultilinearInput& in) {
    const auto args = in.as_tensors();
    return hoch_delta_on_psi(b, g, args);
}

// ---------------------------------------------------------------------------
// Extraction and the two differentials

std::vector<BElement> extract(const TensorElement& t, unsigned n, std::size_t dim) {
    const auto subsets = nonempty_subsets(n);
    std::map<IndexList, std::size_t> position;
    for (std::size_t s = 0; s < subsets.size(); ++s) position.emplace(subsets[s], s);

    IndexList all(n);
    for (unsigned j = 0; j < n; ++j) all[j] = j + 1;

    std::vector<BElement> out(subsets.size(), BElement(dim));
    for (const auto& [key, c] : t.terms()) {
        const auto& [mono, k] = key;
        IndexList support;
        std::merge(mono.bullet_block().begin(), mono.bullet_block().end(), mono.star_tail().begin(),
                   mono.star_tail().end(), std::back_inserter(support));
        if (support != all)
            throw std::invalid_argument("extract: monomial " + mono.str() + " is not multilinear in x1..x" +
                                        std::to_string(n));
        if (k >= dim) throw std::invalid_argument("extract: basis index out of range");
        out[position.at(mono.bullet_block())][k] += c;
    }
    return out;
}

TriCochain tri_delta(const TriDendAlgebra& b, const TriCochain& g) {
    const unsigned n = g.degree();
    TriCochain out(n + 1, b.dim);
    const CochainBasis& layout = out.layout();
    for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
        const auto tuple = layout.tuple_at(t);
        const auto inputs = generator_inputs(tuple);
        const auto components = extract(hoch_delta_on_psi(b, g, inputs), n + 1, b.dim);
        for (std::size_t s = 0; s < components.size(); ++s) out.set_value(s, t, components[s]);
    }
    return out;
}

namespace {

// Degree 1 → 2. Components in order {1}, {2}, {1,2}:
//   b₁ op g(b₂) − g(b₁ op b₂) + g(b₁) op b₂   with op = ≺, ≻, · respectively.
void explicit_from_degree1(const TriDendAlgebra& b, const TriCochain& g, TriCochain& out) {
    auto G = [&](const BElement& x) { return g.evaluate(0, std::span(&x, 1)); };
    const CochainBasis& layout = out.layout();
    for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
        const auto tuple = layout.tuple_at(t);
        const BElement b1 = b.basis(tuple[0]);
        const BElement b2 = b.basis(tuple[1]);
        for (std::size_t s = 0; s < 3; ++s) {
            const TriOp op = kTriOps[s];
            out.set_value(s, t, b.op(op, b1, G(b2)) - G(b.op(op, b1, b2)) + b.op(op, G(b1), b2));
        }
    }
}

// Degree 2 → 3. g₁ = g({1}), g₂ = g({2}), g₁₂ = g({1,2}); Σg = g₁ + g₂ + g₁₂.
void explicit_from_degree2(const TriDendAlgebra& b, const TriCochain& g, TriCochain& out) {
    enum : std::size_t { G1 = 0, G2 = 1, G12 = 2 };
    auto G = [&](std::size_t s, const BElement& x, const BElement& y) {
        const BElement args[2] = {x, y};
        return g.evaluate(s, args);
    };
    auto Gsum = [&](const BElement& x, const BElement& y) { return G(G1, x, y) + G(G2, x, y) + G(G12, x, y); };
    auto prec = [&](const BElement& x, const BElement& y) { return b.op_prec(x, y); };
    auto succ = [&](const BElement& x, const BElement& y) { return b.op_succ(x, y); };
    auto dot = [&](const BElement& x, const BElement& y) { return b.op_dot(x, y); };
    auto total = [&](const BElement& x, const BElement& y) { return b.total_product(x, y); };

    const CochainBasis& layout = out.layout();
    for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
        const auto tuple = layout.tuple_at(t);
        const BElement b1 = b.basis(tuple[0]);
        const BElement b2 = b.basis(tuple[1]);
        const BElement b3 = b.basis(tuple[2]);

        // {1}
        out.set_value(0, t, prec(b1, Gsum(b2, b3)) - G(G1, prec(b1, b2), b3) + G(G1, b1, total(b2, b3)) -
                                prec(G(G1, b1, b2), b3));
        // {2}
        out.set_value(1, t, succ(b1, G(G1, b2, b3)) - G(G1, succ(b1, b2), b3) + G(G2, b1, prec(b2, b3)) -
                                prec(G(G2, b1, b2), b3));
        // {3}
        out.set_value(2, t, succ(b1, G(G2, b2, b3)) - G(G2, total(b1, b2), b3) + G(G2, b1, succ(b2, b3)) -
                                succ(Gsum(b1, b2), b3));
        // {1,2}
        out.set_value(3, t, dot(b1, G(G1, b2, b3)) - G(G1, dot(b1, b2), b3) + G(G12, b1, prec(b2, b3)) -
                                prec(G(G12, b1, b2), b3));
        // {1,3}
        out.set_value(4, t, dot(b1, G(G2, b2, b3)) - G(G12, prec(b1, b2), b3) + G(G12, b1, succ(b2, b3)) -
                                dot(G(G1, b1, b2), b3));
        // {2,3}
        out.set_value(5, t, succ(b1, G(G12, b2, b3)) - G(G12, succ(b1, b2), b3) + G(G2, b1, dot(b2, b3)) -
                                dot(G(G2, b1, b2), b3));
        // {1,2,3}
        out.set_value(6, t, dot(b1, G(G12, b2, b3)) - G(G12, dot(b1, b2), b3) + G(G12, b1, dot(b2, b3)) -
                                dot(G(G12, b1, b2), b3));
    }
}

}  // namespace

TriCochain tri_delta_explicit(const TriDendAlgebra& b, const TriCochain& g) {
    if (g.dim() != b.dim) throw std::invalid_argument("tri_delta_explicit: cochain and algebra dimensions differ");
    TriCochain out(g.degree() + 1, b.dim);
    switch (g.degree()) {
        case 1: explicit_from_degree1(b, g, out); break;
        case 2: explicit_from_degree2(b, g, out); break;
        default:
            throw std::invalid_argument("tri_delta_explicit: only degrees 1 and 2 are available, got " +
                                        std::to_string(g.degree()));
    }
    return out;
}

TriCochain apply_delta(const TriDendAlgebra& b, const TriCochain& g, DeltaRoute route) {
    return route == DeltaRoute::Explicit ? tri_delta_explicit(b, g) : tri_delta(b, g);
}

// ---------------------------------------------------------------------------
// Checks

AxiomReport check_commutation(const TriDendAlgebra& b, unsigned n, DeltaRoute route, unsigned threads) {
    const CochainBasis source(n, b.dim);
    const CochainBasis target(n + 1, b.dim);
    std::vector<std::vector<Violation>> per_cell(source.size());

    parallel_for(source.size(), threads, [&](std::size_t cell) {
        const TriCochain g = TriCochain::basis_cochain(n, b.dim, cell);
        const TriCochain dg = apply_delta(b, g, route);
        for (std::size_t t = 0; t < target.tuple_count(); ++t) {
            const auto inputs = generator_inputs(target.tuple_at(t));
            const TensorElement lhs = psi_apply(b, dg, inputs);
            const TensorElement rhs = hoch_delta_on_psi(b, g, inputs);
            if (lhs != rhs) per_cell[cell].push_back({"commutation", {cell, t}, lhs.str(b.dim), rhs.str(b.dim)});
        }
    });

    AxiomReport report;
    report.checks = source.size() * target.tuple_count();
    for (auto& vs : per_cell)
        for (auto& v : vs) report.violations.push_back(std::move(v));
    return report;
}

AxiomReport check_round_trip(const TriDendAlgebra& b, unsigned n) {
    const CochainBasis layout(n, b.dim);
    AxiomReport report;
    for (std::size_t cell = 0; cell < layout.size(); ++cell) {
        const TriCochain g = TriCochain::basis_cochain(n, b.dim, cell);
        for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
            const auto components = extract(psi_apply(b, g, generator_inputs(layout.tuple_at(t))), n, b.dim);
            for (std::size_t s = 0; s < components.size(); ++s) {
                ++report.checks;
                const BElement expected = g.value(s, t);
                if (components[s] != expected)
                    report.violations.push_back({"round_trip", {cell, t, s}, components[s].str(), expected.str()});
            }
        }
    }
    return report;
}

QMatrix psi_matrix(const TriDendAlgebra& b, unsigned n) {
    const CochainBasis layout(n, b.dim);
    using RowKey = std::tuple<std::size_t, ComTriMonomial, std::size_t>;
    std::map<RowKey, std::size_t> rows;
    std::vector<std::vector<std::pair<RowKey, Rational>>> columns(layout.size());

    for (std::size_t cell = 0; cell < layout.size(); ++cell) {
        const TriCochain g = TriCochain::basis_cochain(n, b.dim, cell);
        for (std::size_t t = 0; t < layout.tuple_count(); ++t) {
            const TensorElement image = psi_apply(b, g, generator_inputs(layout.tuple_at(t)));
            for (const auto& [key, c] : image.terms()) {
                RowKey row{t, key.first, key.second};
                rows.emplace(row, 0);
                columns[cell].emplace_back(std::move(row), c);
            }
        }
    }

    std::size_t next = 0;
    for (auto& [key, idx] : rows) idx = next++;

    QMatrix m(rows.size(), layout.size());
    for (std::size_t cell = 0; cell < columns.size(); ++cell)
        for (const auto& [key, c] : columns[cell]) m(rows.at(key), cell) += c;
    return m;
}

bool check_injectivity(const TriDendAlgebra& b, unsigned n) {
    const QMatrix m = psi_matrix(b, n);
    return rank(m) == m.cols();
}

QMatrix hochschild_matrix(const StructureTable& assoc, unsigned n) {
    if (!is_associative(assoc)) throw std::invalid_argument("hochschild_matrix: product table is not associative");
    const std::size_t d = assoc.dim();
    const std::size_t src_tuples = ipow(d, n);
    const std::size_t dst_tuples = ipow(d, n + 1);
    QMatrix m(dst_tuples * d, src_tuples * d);

    for (std::size_t src = 0; src < src_tuples; ++src) {
        for (std::size_t k0 = 0; k0 < d; ++k0) {
            const std::size_t col = src * d + k0;
            // f is the basis cochain sending e_{src} to e_{k0} and other basis tuples to 0.
            for (std::size_t dst = 0; dst < dst_tuples; ++dst) {
                const auto j = decode_tuple(dst, d, n + 1);
                BElement value(d);

                // e_{j1} · f(e_{j2}, ..., e_{j_{n+1}})
                if (encode_tuple(std::span(j).subspan(1), d) == src) value += assoc.apply_basis(j[0], k0);

                // Σ (−1)^i f(..., e_{j_i} e_{j_{i+1}}, ...)
                for (unsigned i = 1; i <= n; ++i) {
                    const BElement prod = assoc.apply_basis(j[i - 1], j[i]);
                    std::vector<std::size_t> merged;
                    for (unsigned p = 0; p + 1 < i; ++p) merged.push_back(j[p]);
                    merged.push_back(0);
                    for (unsigned p = i + 1; p <= n; ++p) merged.push_back(j[p]);
                    for (std::size_t mid = 0; mid < d; ++mid) {
                        if (prod[mid].is_zero()) continue;
                        merged[i - 1] = mid;
                        if (encode_tuple(merged, d) != src) continue;
                        value[k0] += (i % 2 == 1 ? -prod[mid] : prod[mid]);
                    }
                }

                // (−1)^{n+1} f(e_{j1}, ..., e_{jn}) · e_{j_{n+1}}
                if (encode_tuple(std::span(j).first(n), d) == src) {
                    const BElement tail = assoc.apply_basis(k0, j[n]);
                    if ((n + 1) % 2 == 1) value -= tail;
                    else value += tail;
                }

                for (std::size_t k = 0; k < d; ++k)
                    if (!value[k].is_zero()) m(dst * d + k, col) = value[k];
            }
        }
    }
    return m;
}

}  // namespace tricochain
