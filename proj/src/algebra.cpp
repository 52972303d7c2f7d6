#include "tricochain/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tricochain {

BElement BElement::basis(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::out_of_range("basis index " + std::to_string(i) + " >= dim " + std::to_string(dim));
    BElement e(dim);
    e[i] = 1;
    return e;
}

bool BElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.is_zero(); });
}

BElement& BElement::operator+=(const BElement& o) {
    if (o.dim() != dim()) throw std::invalid_argument("BElement: dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BElement& BElement::operator-=(const BElement& o) {
    if (o.dim() != dim()) throw std::invalid_argument("BElement: dimension mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BElement& BElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string BElement::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const std::string name = coeffs_.size() == 1 ? "e" : "e" + std::to_string(i + 1);
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1)) out += mag.str() + "*";
        out += name;
    }
    return out.empty() ? "0" : out;
}

BElement StructureTable::apply(const BElement& x, const BElement& y) const {
    if (x.dim() != dim_ || y.dim() != dim_)
        throw std::invalid_argument("product of elements of dimension " + std::to_string(x.dim()) + " and " +
                                    std::to_string(y.dim()) + " in an algebra of dimension " + std::to_string(dim_));
    BElement out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& c = at(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

BElement StructureTable::apply_basis(std::size_t i, std::size_t j) const {
    BElement out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = at(i, j, k);
    return out;
}

TriDendAlgebra TriDendAlgebra::zero(std::size_t dim, std::string name) {
    return TriDendAlgebra{std::move(name), dim, StructureTable(dim), StructureTable(dim), StructureTable(dim)};
}

const StructureTable& TriDendAlgebra::table(TriOp op) const {
    switch (op) {
        case TriOp::Prec: return prec;
        case TriOp::Succ: return succ;
        case TriOp::Dot: return dot;
    }
    throw std::logic_error("unknown TriOp");
}

StructureTable& TriDendAlgebra::table(TriOp op) {
    return const_cast<StructureTable&>(std::as_const(*this).table(op));
}

BElement TriDendAlgebra::total_product(const BElement& x, const BElement& y) const {
    return op_prec(x, y) + op_succ(x, y) + op_dot(x, y);
}

StructureTable TriDendAlgebra::total_table() const {
    StructureTable t(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) t.at(i, j, k) = prec.at(i, j, k) + succ.at(i, j, k) + dot.at(i, j, k);
    return t;
}

bool AxiomReport::violates(const std::string& axiom) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

namespace {

using Triple = std::function<BElement(const BElement&, const BElement&, const BElement&)>;

struct Identity {
    std::string name;
    Triple lhs;
    Triple rhs;
};

void check_identities(std::size_t dim, const std::vector<Identity>& ids, AxiomReport& report) {
    std::vector<BElement> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back(BElement::basis(dim, i));

    for (const Identity& id : ids) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    ++report.checks;
                    BElement l = id.lhs(basis[i], basis[j], basis[k]);
                    BElement r = id.rhs(basis[i], basis[j], basis[k]);
                    if (l != r) report.violations.push_back({id.name, {i, j, k}, l.str(), r.str()});
                }
    }
}

}  // namespace

AxiomReport verify_tridendriform(const TriDendAlgebra& b) {
    auto prec = [&](const BElement& x, const BElement& y) { return b.op_prec(x, y); };
    auto succ = [&](const BElement& x, const BElement& y) { return b.op_succ(x, y); };
    auto dot = [&](const BElement& x, const BElement& y) { return b.op_dot(x, y); };
    auto total = [&](const BElement& x, const BElement& y) { return b.total_product(x, y); };

    using E = const BElement&;
    const std::vector<Identity> ids{
        {"axiom1", [&](E x, E y, E z) { return prec(prec(x, y), z); }, [&](E x, E y, E z) { return prec(x, total(y, z)); }},
        {"axiom2", [&](E x, E y, E z) { return prec(succ(x, y), z); }, [&](E x, E y, E z) { return succ(x, prec(y, z)); }},
        {"axiom3", [&](E x, E y, E z) { return succ(total(x, y), z); }, [&](E x, E y, E z) { return succ(x, succ(y, z)); }},
        {"axiom4", [&](E x, E y, E z) { return succ(x, dot(y, z)); }, [&](E x, E y, E z) { return dot(succ(x, y), z); }},
        {"axiom5", [&](E x, E y, E z) { return dot(prec(x, y), z); }, [&](E x, E y, E z) { return dot(x, succ(y, z)); }},
        {"axiom6", [&](E x, E y, E z) { return prec(dot(x, y), z); }, [&](E x, E y, E z) { return dot(x, prec(y, z)); }},
        {"axiom7", [&](E x, E y, E z) { return dot(dot(x, y), z); }, [&](E x, E y, E z) { return dot(x, dot(y, z)); }},
        {"axiom8", [&](E x, E y, E z) { return total(total(x, y), z); }, [&](E x, E y, E z) { return total(x, total(y, z)); }},
    };

    AxiomReport report;
    check_identities(b.dim, ids, report);
    return report;
}

AxiomReport verify_comm_tri(const CommTriAlgebraFD& a) {
    auto star = [&](const BElement& x, const BElement& y) { return a.star.apply(x, y); };
    auto bullet = [&](const BElement& x, const BElement& y) { return a.bullet.apply(x, y); };

    using E = const BElement&;
    const std::vector<Identity> ids{
        {"perm_assoc", [&](E x, E y, E z) { return star(star(x, y), z); }, [&](E x, E y, E z) { return star(x, star(y, z)); }},
        {"perm_right_sym", [&](E x, E y, E z) { return star(x, star(y, z)); }, [&](E x, E y, E z) { return star(x, star(z, y)); }},
        {"bullet_comm", [&](E x, E y, E) { return bullet(x, y); }, [&](E x, E y, E) { return bullet(y, x); }},
        {"bullet_assoc", [&](E x, E y, E z) { return bullet(bullet(x, y), z); }, [&](E x, E y, E z) { return bullet(x, bullet(y, z)); }},
        {"compat_star_bullet", [&](E x, E y, E z) { return star(x, bullet(y, z)); }, [&](E x, E y, E z) { return star(x, star(y, z)); }},
        {"compat_bullet_star", [&](E x, E y, E z) { return star(bullet(x, y), z); }, [&](E x, E y, E z) { return bullet(x, star(y, z)); }},
    };

    AxiomReport report;
    check_identities(a.dim, ids, report);
    // bullet_comm does not depend on the third slot; keep one witness per pair.
    std::vector<Violation> deduped;
    for (auto& v : report.violations) {
        if (v.axiom == "bullet_comm") {
            if (v.witness[2] != 0) continue;
            v.witness.pop_back();
        }
        deduped.push_back(std::move(v));
    }
    report.violations = std::move(deduped);
    return report;
}

bool is_associative(const StructureTable& t) {
    const std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const BElement ij = t.apply_basis(i, j);
                const BElement jk = t.apply_basis(j, k);
                if (t.apply(ij, BElement::basis(d, k)) != t.apply(BElement::basis(d, i), jk)) return false;
            }
    return true;
}

}  // namespace tricochain
