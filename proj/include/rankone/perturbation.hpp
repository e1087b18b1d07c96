#pragma once

#include <array>

#include "rankone/operators.hpp"

namespace rankone {

/// Zero threshold for the decision constants c and r.  Both come out of
/// closed forms, so true zeros land within a few ulps of 0 and genuinely
/// positive values sit far above this.
inline constexpr double kDefaultTolerance = 1e-10;

enum class Verdict { LeftInvertible, NotLeftInvertible };

/// Everything the decision procedure knows about one perturbation V + f(x)g.
struct PerturbationDiagnostics {
    double c = 0.0;
    Complex beta{};          // <V*f, g>
    double normF2 = 0.0;
    double normVstarF2 = 0.0;
    double normG2 = 0.0;
    Verdict verdict = Verdict::LeftInvertible;
    bool witnessNormEquality = false;  // ||V*f|| = ||f||, i.e. f in ran V
    bool witnessBetaMinusOne = false;  // <V*f, g> = -1
    std::array<Complex, 4> coefficients{};  // a1..a4; meaningful when c > tol
};

/// T = V + f (x) g.
OperatorExpr perturbed(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g);

/// The decision constant
///   c = (||f||^2 - ||V*f||^2) ||g||^2 + |1 + <V*f,g>|^2,
/// computed twice (defining form and expanded form) with a consistency
/// check, clamped at zero.  V must be a structural shift power.
double cValue(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g);

/// Full verdict: left-invertible iff c > tol.  A negative verdict always
/// carries both witness conditions, which are asserted to hold together.
PerturbationDiagnostics perturbationVerdict(const OperatorExpr& V, const GeomTailSeq& f,
                                            const GeomTailSeq& g,
                                            double tol = kDefaultTolerance);

/// Explicit left inverse L = X (V + f(x)g)* with
///   X = I + (1/c) { ||g||^2 (V*f)(x)(V*f) + (||V*f||^2 - ||f||^2) g(x)g
///                   - (R + R*) },   R = (1 + <g,V*f>) (V*f)(x)g.
/// Throws NotLeftInvertibleError when c <= tol.
OperatorExpr leftInverse(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g,
                         double tol = kDefaultTolerance);

/// The four coefficients of g(x)g, V*f(x)g, g(x)V*f and V*f(x)V*f left
/// over when X (V+f(x)g)*(V+f(x)g) is expanded against I.  All four vanish
/// identically; computing them from the unsimplified expansion makes them
/// a sharp regression check on the c arithmetic.
std::array<Complex, 4> verificationCoefficients(const OperatorExpr& V, const GeomTailSeq& f,
                                                const GeomTailSeq& g,
                                                double tol = kDefaultTolerance);

/// The isometric perturbation V + (alpha-1) h (x) V*h built from a unit
/// vector h and a unimodular alpha.  The result is an isometry with c = 1.
struct NakamuraPerturbation {
    GeomTailSeq f;
    GeomTailSeq g;
    OperatorExpr op;
};

NakamuraPerturbation nakamuraPerturbation(const OperatorExpr& V, const GeomTailSeq& h,
                                          Complex alpha);

} // namespace rankone
