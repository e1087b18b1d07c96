#include "rankone/operators.hpp"

#include <algorithm>
#include <cmath>

#include "rankone/probes.hpp"

namespace rankone {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class N>
std::shared_ptr<const OpNode> makeNode(N n) {
    return std::make_shared<const OpNode>(OpNode{std::move(n)});
}

} // namespace

OperatorExpr OperatorExpr::identity() {
    static const OperatorExpr id{makeNode(OpNode::Identity{})};
    return id;
}

OperatorExpr OperatorExpr::shiftPow(std::size_t power) {
    return OperatorExpr{makeNode(OpNode::ShiftPow{power})};
}

OperatorExpr OperatorExpr::diagonal(DiagonalSymbol symbol) {
    return OperatorExpr{makeNode(OpNode::Diagonal{std::move(symbol)})};
}

OperatorExpr OperatorExpr::rankOne(GeomTailSeq f, GeomTailSeq g) {
    if (!f.squareSummable() || !g.squareSummable()) {
        throw NotSquareSummableError("rank-one factors must lie in l2");
    }
    return OperatorExpr{makeNode(OpNode::RankOne{std::move(f), std::move(g)})};
}

OperatorExpr OperatorExpr::scale(Complex factor, OperatorExpr inner) {
    return OperatorExpr{makeNode(OpNode::Scale{factor, std::move(inner)})};
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
    return OperatorExpr{makeNode(OpNode::Sum{std::move(terms)})};
}

OperatorExpr OperatorExpr::compose(OperatorExpr left, OperatorExpr right) {
    return OperatorExpr{makeNode(OpNode::Compose{std::move(left), std::move(right)})};
}

OperatorExpr OperatorExpr::adjointOf(OperatorExpr inner) {
    return OperatorExpr{makeNode(OpNode::Adjoint{std::move(inner)})};
}

GeomTailSeq OperatorExpr::apply(const GeomTailSeq& h) const {
    return std::visit(
        overloaded{
            [&](const OpNode::Identity&) { return h; },
            [&](const OpNode::ShiftPow& s) { return shiftRight(h, s.power); },
            [&](const OpNode::Diagonal& d) { return pointwiseDiagonal(d.symbol, h); },
            [&](const OpNode::RankOne& r) { return scaled(innerProduct(h, r.right), r.left); },
            [&](const OpNode::Scale& s) { return scaled(s.factor, s.inner.apply(h)); },
            [&](const OpNode::Sum& s) {
                GeomTailSeq acc;
                for (const OperatorExpr& term : s.terms) acc = add(acc, term.apply(h));
                return acc;
            },
            [&](const OpNode::Compose& c) { return c.left.apply(c.right.apply(h)); },
            [&](const OpNode::Adjoint& a) {
                // The backward shift is primitive; everything else routes
                // through the structural adjoint, which is adjoint-free
                // except around shift powers.
                if (const auto* sp = std::get_if<OpNode::ShiftPow>(&a.inner.node().value)) {
                    return shiftLeft(h, sp->power);
                }
                return a.inner.adjoint().apply(h);
            },
        },
        node_->value);
}

OperatorExpr OperatorExpr::adjoint() const {
    return std::visit(
        overloaded{
            [&](const OpNode::Identity&) { return identity(); },
            [&](const OpNode::ShiftPow&) { return adjointOf(*this); },
            [&](const OpNode::Diagonal& d) { return diagonal(d.symbol.conjugated()); },
            [&](const OpNode::RankOne& r) { return rankOne(r.right, r.left); },
            [&](const OpNode::Scale& s) {
                return scale(std::conj(s.factor), s.inner.adjoint());
            },
            [&](const OpNode::Sum& s) {
                std::vector<OperatorExpr> terms;
                terms.reserve(s.terms.size());
                for (const OperatorExpr& term : s.terms) terms.push_back(term.adjoint());
                return sum(std::move(terms));
            },
            [&](const OpNode::Compose& c) {
                return compose(c.right.adjoint(), c.left.adjoint());
            },
            [&](const OpNode::Adjoint& a) { return a.inner; },
        },
        node_->value);
}

std::size_t OperatorExpr::maxShiftOrder() const {
    return std::visit(
        overloaded{
            [](const OpNode::Identity&) -> std::size_t { return 0; },
            [](const OpNode::ShiftPow& s) { return s.power; },
            [](const OpNode::Diagonal&) -> std::size_t { return 0; },
            [](const OpNode::RankOne&) -> std::size_t { return 0; },
            [](const OpNode::Scale& s) { return s.inner.maxShiftOrder(); },
            [](const OpNode::Sum& s) {
                std::size_t m = 0;
                for (const OperatorExpr& term : s.terms) m = std::max(m, term.maxShiftOrder());
                return m;
            },
            [](const OpNode::Compose& c) {
                return c.left.maxShiftOrder() + c.right.maxShiftOrder();
            },
            [](const OpNode::Adjoint& a) -> std::size_t {
                if (std::holds_alternative<OpNode::ShiftPow>(a.inner.node().value)) return 0;
                return a.inner.adjoint().maxShiftOrder();
            },
        },
        node_->value);
}

std::optional<std::size_t> OperatorExpr::asShiftPower() const {
    if (std::holds_alternative<OpNode::Identity>(node_->value)) return 0;
    if (const auto* sp = std::get_if<OpNode::ShiftPow>(&node_->value)) return sp->power;
    return std::nullopt;
}

std::pair<Complex, OperatorExpr> rankOneCompose(const GeomTailSeq& f, const GeomTailSeq& g,
                                                const GeomTailSeq& f1, const GeomTailSeq& g1) {
    return {innerProduct(f1, g), OperatorExpr::rankOne(f, g1)};
}

double rankOneNorm(const GeomTailSeq& f, const GeomTailSeq& g) {
    return std::sqrt(normSq(f) * normSq(g));
}

bool isometryCheck(const OperatorExpr& op, int probes, std::uint64_t seed) {
    ProbeGen gen(seed);
    for (int i = 0; i < probes; ++i) {
        const GeomTailSeq h = gen.unitVector();
        if (std::abs(normSq(op.apply(h)) - normSq(h)) > 1e-12) return false;
    }
    return true;
}

} // namespace rankone
