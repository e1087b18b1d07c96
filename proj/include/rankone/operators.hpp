#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rankone/seq.hpp"

namespace rankone {

struct OpNode;

/// A lazy operator expression over GeomTailSeq.  Expressions are immutable
/// trees shared by value; apply walks the tree and never materializes a
/// matrix.  Rank-one acts as (f (x) g) h = <h,g> f.
class OperatorExpr {
public:
    OperatorExpr() : OperatorExpr(identity()) {}

    static OperatorExpr identity();
    static OperatorExpr shiftPow(std::size_t power);
    static OperatorExpr diagonal(DiagonalSymbol symbol);
    static OperatorExpr rankOne(GeomTailSeq f, GeomTailSeq g);
    static OperatorExpr scale(Complex factor, OperatorExpr inner);
    static OperatorExpr sum(std::vector<OperatorExpr> terms);
    static OperatorExpr compose(OperatorExpr left, OperatorExpr right);
    static OperatorExpr adjointOf(OperatorExpr inner);

    GeomTailSeq apply(const GeomTailSeq& h) const;

    /// Structural adjoint: rank-ones swap their vectors, compositions
    /// reverse, diagonals conjugate, double adjoints cancel.  Shift powers
    /// stay wrapped in an adjoint node (the backward shift has no leaf of
    /// its own).
    OperatorExpr adjoint() const;

    /// Largest total forward-shift order along any path of the tree; used
    /// by the densifier to choose a safe row count.
    std::size_t maxShiftOrder() const;

    /// If the expression is structurally an isometric shift power
    /// (Identity counts as power 0), its power.
    std::optional<std::size_t> asShiftPower() const;

    const OpNode& node() const { return *node_; }

private:
    explicit OperatorExpr(std::shared_ptr<const OpNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const OpNode> node_;
};

struct OpNode {
    struct Identity {};
    struct ShiftPow {
        std::size_t power;
    };
    struct Diagonal {
        DiagonalSymbol symbol;
    };
    struct RankOne {
        GeomTailSeq left;  // the range vector f
        GeomTailSeq right; // the pairing vector g
    };
    struct Scale {
        Complex factor;
        OperatorExpr inner;
    };
    struct Sum {
        std::vector<OperatorExpr> terms;
    };
    struct Compose {
        OperatorExpr left;
        OperatorExpr right;
    };
    struct Adjoint {
        OperatorExpr inner;
    };

    std::variant<Identity, ShiftPow, Diagonal, RankOne, Scale, Sum, Compose, Adjoint> value;
};

/// (f (x) g)(f1 (x) g1) collapses to <f1,g> f (x) g1; returns the scalar
/// and the residual rank-one factor.
std::pair<Complex, OperatorExpr> rankOneCompose(const GeomTailSeq& f, const GeomTailSeq& g,
                                                const GeomTailSeq& f1, const GeomTailSeq& g1);

/// Operator norm of f (x) g, which is exactly ||f|| ||g||.
double rankOneNorm(const GeomTailSeq& f, const GeomTailSeq& g);

/// Necessary-condition probe: checks ||op h||^2 = ||h||^2 within 1e-12 on
/// `probes` random unit vectors.  Passing is evidence, not proof; exact
/// isometry claims should rest on structure.
bool isometryCheck(const OperatorExpr& op, int probes, std::uint64_t seed);

} // namespace rankone
