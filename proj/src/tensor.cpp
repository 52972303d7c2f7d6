#include "tricochain/tensor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tricochain {

TensorElement TensorElement::pure(const ComTriMonomial& a, std::size_t k, const Rational& c) {
    TensorElement t;
    t.add(a, k, c);
    return t;
}

TensorElement TensorElement::pure(const ComTriMonomial& a, const BElement& b) {
    TensorElement t;
    t.add(a, b);
    return t;
}

Rational TensorElement::coefficient(const ComTriMonomial& a, std::size_t k) const {
    auto it = terms_.find(Key{a, k});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t TensorElement::max_degree() const {
    std::size_t d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first.degree());
    return d;
}

void TensorElement::add(const ComTriMonomial& a, std::size_t k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::add(const ComTriMonomial& a, const BElement& b, const Rational& scale) {
    if (scale.is_zero()) return;
    for (std::size_t k = 0; k < b.dim(); ++k)
        if (!b[k].is_zero()) add(a, k, scale * b[k]);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
    return *this;
}

TensorElement operator*(const Rational& s, const TensorElement& a) {
    TensorElement out;
    if (s.is_zero()) return out;
    for (const auto& [key, c] : a.terms_) out.terms_.emplace(key, s * c);
    return out;
}

std::string TensorElement::str(std::size_t dim) const {
    if (terms_.empty()) return "0";
    std::string out;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const ComTriMonomial& mono = it->first.first;
        BElement b(dim);
        for (; it != terms_.end() && it->first.first == mono; ++it) {
            if (it->first.second < dim) b[it->first.second] = it->second;
        }
        if (!out.empty()) out += " + ";
        out += mono.str() + " (x) (" + b.str() + ")";
    }
    return out;
}

TensorElement tensor_product(const TriDendAlgebra& b, const TensorElement& u, const TensorElement& v) {
    TensorElement out;
    for (const auto& [lk, lc] : u.terms()) {
        const auto& [a1, i] = lk;
        if (i >= b.dim) throw std::invalid_argument("tensor_product: basis index out of range");
        for (const auto& [rk, rc] : v.terms()) {
            const auto& [a2, j] = rk;
            if (j >= b.dim) throw std::invalid_argument("tensor_product: basis index out of range");
            const Rational c = lc * rc;
            const ComTriMonomial left_star = star(a1, a2);
            const ComTriMonomial right_star = star(a2, a1);
            const ComTriMonomial both = bullet(a1, a2);
            for (std::size_t k = 0; k < b.dim; ++k) {
                if (const Rational& p = b.prec.at(i, j, k); !p.is_zero()) out.add(left_star, k, c * p);
                if (const Rational& s = b.succ.at(i, j, k); !s.is_zero()) out.add(right_star, k, c * s);
                if (const Rational& d = b.dot.at(i, j, k); !d.is_zero()) out.add(both, k, c * d);
            }
        }
    }
    return out;
}

AxiomReport check_associativity(const TriDendAlgebra& b, const std::vector<TensorTriple>& triples) {
    AxiomReport report;
    for (std::size_t t = 0; t < triples.size(); ++t) {
        const auto& [u, v, w] = triples[t];
        report.max_degree = std::max({report.max_degree, u.max_degree(), v.max_degree(), w.max_degree()});
        ++report.checks;
        const TensorElement lhs = tensor_product(b, tensor_product(b, u, v), w);
        const TensorElement rhs = tensor_product(b, u, tensor_product(b, v, w));
        if (lhs != rhs) report.violations.push_back({"assoc", {t}, lhs.str(b.dim), rhs.str(b.dim)});
    }
    return report;
}

std::vector<TensorTriple> generator_triples(const TriDendAlgebra& b, unsigned generators) {
    std::vector<TensorTriple> out;
    for (unsigned p = 1; p <= generators; ++p)
        for (unsigned q = 1; q <= generators; ++q)
            for (unsigned r = 1; r <= generators; ++r)
                for (std::size_t i = 0; i < b.dim; ++i)
                    for (std::size_t j = 0; j < b.dim; ++j)
                        for (std::size_t k = 0; k < b.dim; ++k)
                            out.push_back({TensorElement::pure(generator(p), i), TensorElement::pure(generator(q), j),
                                           TensorElement::pure(generator(r), k)});
    return out;
}

namespace {

constexpr unsigned kRandomGenerators = 4;

ComTriMonomial random_monomial(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> degree_dist(1, std::max<std::size_t>(1, max_degree));
    std::uniform_int_distribution<unsigned> gen_dist(1, kRandomGenerators);
    const std::size_t degree = degree_dist(rng);
    std::uniform_int_distribution<std::size_t> block_dist(1, degree);
    const std::size_t block = block_dist(rng);
    IndexList m, n;
    for (std::size_t i = 0; i < block; ++i) m.push_back(gen_dist(rng));
    for (std::size_t i = block; i < degree; ++i) n.push_back(gen_dist(rng));
    return ComTriMonomial(std::move(m), std::move(n));
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-5, 5);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    return Rational(num(rng), den(rng));
}

TensorElement random_element(std::mt19937_64& rng, std::size_t dim, std::size_t max_degree) {
    std::uniform_int_distribution<int> term_count(1, 2);
    TensorElement t;
    const int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) {
        const ComTriMonomial a = random_monomial(rng, max_degree);
        BElement b(dim);
        for (std::size_t k = 0; k < dim; ++k) b[k] = random_rational(rng);
        t.add(a, b);
    }
    return t;
}

}  // namespace

std::vector<TensorTriple> random_triples(const TriDendAlgebra& b, std::size_t count, std::size_t max_degree,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TensorTriple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        TensorElement u = random_element(rng, b.dim, max_degree);
        TensorElement v = random_element(rng, b.dim, max_degree);
        TensorElement w = random_element(rng, b.dim, max_degree);
        out.push_back({std::move(u), std::move(v), std::move(w)});
    }
    return out;
}

}  // namespace tricochain
