#include "tricochain/free_comtri.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace tricochain {

namespace {

IndexList merged(const IndexList& a, const IndexList& b) {
    IndexList out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string join_generators(const IndexList& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += "x" + std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

ComTriMonomial::ComTriMonomial(IndexList bullet_block, IndexList star_tail)
    : m_(std::move(bullet_block)), n_(std::move(star_tail)) {
    if (m_.empty()) throw std::invalid_argument("ComTriMonomial: empty bullet block");
    std::sort(m_.begin(), m_.end());
    std::sort(n_.begin(), n_.end());
    if (m_.front() == 0 || (!n_.empty() && n_.front() == 0))
        throw std::invalid_argument("ComTriMonomial: generator indices start at 1");
}

std::strong_ordering operator<=>(const ComTriMonomial& a, const ComTriMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.n_ <=> b.n_;
}

std::string ComTriMonomial::str() const {
    std::string out = m_.size() == 1 ? join_generators(m_, '.') : "(" + join_generators(m_, '.') + ")";
    if (!n_.empty()) out += "*" + join_generators(n_, '*');
    return out;
}

ComTriMonomial generator(unsigned i) {
    if (i == 0) throw std::invalid_argument("generator index must be >= 1");
    return ComTriMonomial({i});
}

ComTriMonomial star(const ComTriMonomial& p, const ComTriMonomial& q) {
    return ComTriMonomial(p.bullet_block(), merged(merged(p.star_tail(), q.bullet_block()), q.star_tail()));
}

ComTriMonomial bullet(const ComTriMonomial& p, const ComTriMonomial& q) {
    return ComTriMonomial(merged(p.bullet_block(), q.bullet_block()), merged(p.star_tail(), q.star_tail()));
}

ComTriMonomial p_monomial(unsigned n, const IndexList& subset) {
    if (subset.empty()) throw std::invalid_argument("p_monomial: empty subset");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > n) throw std::invalid_argument("p_monomial: index outside {1..n}");
        if (i && subset[i] <= subset[i - 1]) throw std::invalid_argument("p_monomial: subset not strictly increasing");
    }
    IndexList rest;
    for (unsigned j = 1; j <= n; ++j)
        if (!std::binary_search(subset.begin(), subset.end(), j)) rest.push_back(j);
    return ComTriMonomial(subset, rest);
}

std::vector<IndexList> nonempty_subsets(unsigned n) {
    std::vector<IndexList> out;
    for (unsigned k = 1; k <= n; ++k) {
        // Lexicographic k-combinations of {1..n}.
        IndexList c(k);
        for (unsigned i = 0; i < k; ++i) c[i] = i + 1;
        while (true) {
            out.push_back(c);
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && c[i] == n - k + i + 1) --i;
            if (i < 0) break;
            ++c[i];
            for (unsigned j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

FreeElement::FreeElement(const ComTriMonomial& m, Rational c) { add(m, c); }

Rational FreeElement::coefficient(const ComTriMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreeElement::add(const ComTriMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FreeElement operator*(const Rational& s, const FreeElement& a) {
    FreeElement out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
    return out;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) out += mag.str() + "*";
        out += m.str();
    }
    return out;
}

FreeElement star_lin(const FreeElement& u, const FreeElement& v) {
    FreeElement out;
    for (const auto& [p, a] : u.terms())
        for (const auto& [q, b] : v.terms()) out.add(star(p, q), a * b);
    return out;
}

FreeElement bullet_lin(const FreeElement& u, const FreeElement& v) {
    FreeElement out;
    for (const auto& [p, a] : u.terms())
        for (const auto& [q, b] : v.terms()) out.add(bullet(p, q), a * b);
    return out;
}

}  // namespace tricochain
